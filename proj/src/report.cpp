#include "chords/report.hpp"

#include <json.hpp>

#include "chords/chordset.hpp"

namespace chords {

ChordReport make_chord_report(const PLFunction& f) {
  ChordReport r;
  const ChordSetResult detailed = chord_set_detailed(f);
  r.chord_set = detailed.set;
  r.cell_count = detailed.cell_count;
  r.piece_count = detailed.piece_count;
  r.complement = complement_in_unit(r.chord_set);
  r.measure = measure(r.chord_set);
  r.full = r.chord_set.intervals.size() == 1 && r.chord_set.intervals[0].lo == 0 &&
           r.chord_set.intervals[0].hi == 1;
  for (const Interval& iv : r.chord_set.intervals) {
    for (const Rational* d : {&iv.lo, &iv.hi}) {
      if (*d <= 0) continue;
      if (!r.truncated_measures.empty() && r.truncated_measures.back().first == *d) continue;
      r.truncated_measures.emplace_back(*d, truncated_measure(r.chord_set, *d));
    }
  }
  r.additivity_violation = check_additive_complement(r.chord_set);
  r.half_measure = check_half_measure(r.chord_set);
  return r;
}

std::string to_json(const ChordReport& r) {
  nlohmann::ordered_json doc;
  doc["chord_set"] = nlohmann::ordered_json::array();
  for (const Interval& iv : r.chord_set.intervals) {
    doc["chord_set"].push_back({to_string(iv.lo), to_string(iv.hi)});
  }
  doc["complement"] = nlohmann::ordered_json::array();
  for (const OpenInterval& iv : r.complement) {
    doc["complement"].push_back({to_string(iv.lo), to_string(iv.hi)});
  }
  doc["measure"] = to_string(r.measure);
  doc["full"] = r.full;
  doc["truncated_measures"] = nlohmann::ordered_json::array();
  for (const auto& [d, value] : r.truncated_measures) {
    doc["truncated_measures"].push_back({to_string(d), to_string(value)});
  }
  nlohmann::ordered_json hopf;
  hopf["additive"] = !r.additivity_violation.has_value();
  if (r.additivity_violation) {
    hopf["violation"] = {{"a", to_string(r.additivity_violation->a)},
                         {"b", to_string(r.additivity_violation->b)},
                         {"sum", to_string(r.additivity_violation->sum)}};
  } else {
    hopf["violation"] = nullptr;
  }
  hopf["min_ratio"] = to_string(r.half_measure.min_ratio);
  hopf["argmin_d"] = to_string(r.half_measure.argmin_d);
  doc["hopf"] = hopf;
  doc["stats"] = {{"cells", r.cell_count}, {"pieces", r.piece_count}};
  return doc.dump(2);
}

}  // namespace chords
