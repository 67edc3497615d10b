#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chords/chordset.hpp"
#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// The n closed intervals [(k-1)/n, k/(n+1)], k = 1..n, plus the point {1}.
// Their total length is exactly 1/2 for every n.
IntervalSet sn_intervals(long n);

// The matching open gaps (k/(n+1), k/n), k = 1..n.
std::vector<OpenInterval> sn_complement(long n);

// Measure of sn_intervals(n) computed both by interval summation and by the
// telescoping closed form; throws std::logic_error if the two disagree.
// Always returns 1/2.
Rational sn_measure_identity(long n);

// Triangular mountain of width w1 at the left end, flat middle, triangular
// valley of width w2 at the right end.
PLFunction make_mountain_valley(const Rational& w1, const Rational& w2, const Rational& h1,
                                const Rational& depth);

// A function whose chord set is exactly sn_intervals(n): mountains on
// [(k-1)/n, k/(n+1)] with heights (n+1-k)/n, valleys on [k/(n+1), k/n] with
// depths -k/n, every hump a symmetric triangle. Proportional heights keep
// the cross-hump chord families flush with the interval endpoints.
PLFunction sn_realization(long n);

// Tent on [0,1/2] followed by four negative dips whose tips touch zero at
// 5/8, 3/4 and 7/8. Chord set: [0,1/2] plus the isolated points
// {5/8, 3/4, 7/8, 1} (chords between the tent and the dips exist only at
// level zero, i.e. between zeros of f).
PLFunction isolated_chords_example();

struct VerifyResult {
  bool equal = false;
  IntervalSet computed;
  // Set when equal is false: first differing interval position and the
  // smallest endpoint where the two sets part ways.
  std::optional<std::size_t> index;
  std::optional<Interval> computed_interval;
  std::optional<Interval> expected_interval;
  std::optional<Rational> first_differing_endpoint;
};

VerifyResult verify_chordset_equals(const PLFunction& f, const IntervalSet& target);

}  // namespace chords
