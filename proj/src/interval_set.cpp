#include "chords/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace chords {

IntervalSet make_interval_set(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    if (iv.lo > iv.hi) throw std::invalid_argument("interval with lo > hi");
    if (iv.lo < 0 || iv.hi > 1) throw std::invalid_argument("interval endpoint outside [0,1]");
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  IntervalSet out;
  for (Interval& iv : raw) {
    if (!out.intervals.empty() && iv.lo <= out.intervals.back().hi) {
      if (iv.hi > out.intervals.back().hi) out.intervals.back().hi = iv.hi;
    } else {
      out.intervals.push_back(std::move(iv));
    }
  }
  return out;
}

bool contains(const IntervalSet& s, const Rational& x) {
  auto it = std::upper_bound(s.intervals.begin(), s.intervals.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == s.intervals.begin()) return false;
  --it;
  return x <= it->hi;
}

bool covers(const IntervalSet& s, const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("covers: lo > hi");
  auto it = std::upper_bound(s.intervals.begin(), s.intervals.end(), lo,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == s.intervals.begin()) return false;
  --it;
  return lo <= it->hi && hi <= it->hi;
}

Rational measure(const IntervalSet& s) {
  Rational total(0);
  for (const Interval& iv : s.intervals) total += iv.hi - iv.lo;
  return total;
}

Rational truncated_measure(const IntervalSet& s, const Rational& d) {
  if (d <= 0 || d > 1) throw std::invalid_argument("truncation point must lie in (0,1]");
  Rational total(0);
  for (const Interval& iv : s.intervals) {
    if (iv.lo >= d) break;
    const Rational hi = std::min(iv.hi, d);
    total += hi - iv.lo;
  }
  return total;
}

std::vector<OpenInterval> complement_in_unit(const IntervalSet& s) {
  std::vector<OpenInterval> gaps;
  Rational cursor(0);
  for (const Interval& iv : s.intervals) {
    if (iv.lo > cursor) gaps.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < 1) gaps.push_back({cursor, Rational(1)});
  return gaps;
}

std::string to_json(const IntervalSet& s) {
  nlohmann::ordered_json doc;
  doc["intervals"] = nlohmann::ordered_json::array();
  for (const Interval& iv : s.intervals) {
    doc["intervals"].push_back({to_string(iv.lo), to_string(iv.hi)});
  }
  return doc.dump(2);
}

IntervalSet interval_set_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("intervals") || !doc["intervals"].is_array()) {
    throw std::invalid_argument("interval set document must contain an \"intervals\" array");
  }
  std::vector<Interval> raw;
  for (const auto& item : doc["intervals"]) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("each interval must be a [lo, hi] pair");
    }
    const auto endpoint = [](const nlohmann::json& v) -> Rational {
      if (v.is_string()) return rational_from_string(v.get<std::string>());
      if (v.is_number_integer()) return rational_from_string(v.dump());
      throw std::invalid_argument("interval endpoints must be rational strings or integers");
    };
    raw.push_back({endpoint(item[0]), endpoint(item[1])});
  }
  return make_interval_set(std::move(raw));
}

}  // namespace chords
