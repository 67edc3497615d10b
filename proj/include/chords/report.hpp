#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chords/hopf.hpp"
#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// Everything the CLI reports about one function: the exact chord set, its
// complement and measure, the truncated measures at every interval endpoint,
// and the structural checks (complement additivity, half-measure minimum).
struct ChordReport {
  IntervalSet chord_set;
  std::vector<OpenInterval> complement;
  Rational measure;
  bool full = false;
  std::vector<std::pair<Rational, Rational>> truncated_measures;  // (d, measure up to d)
  std::optional<AdditivityViolation> additivity_violation;
  HalfMeasureResult half_measure;
  std::size_t cell_count = 0;
  std::size_t piece_count = 0;
};

ChordReport make_chord_report(const PLFunction& f);

std::string to_json(const ChordReport& r);

}  // namespace chords
