#include "chords/plfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace chords {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.x - a.x) * (c.y - a.y) == (b.y - a.y) * (c.x - a.x);
}

}  // namespace

PLFunction::PLFunction(std::vector<Breakpoint> points) {
  // Drop exact consecutive duplicates before checking monotonicity.
  std::vector<Breakpoint> cleaned;
  for (Breakpoint& p : points) {
    if (!cleaned.empty() && p == cleaned.back()) continue;
    cleaned.push_back(std::move(p));
  }
  if (cleaned.size() < 2) throw std::invalid_argument("a function needs at least 2 breakpoints");
  for (std::size_t i = 1; i < cleaned.size(); ++i) {
    if (cleaned[i - 1].x >= cleaned[i].x) {
      throw std::invalid_argument("breakpoint x-coordinates must be strictly increasing");
    }
  }
  if (cleaned.front().x != 0 || cleaned.back().x != 1) {
    throw std::invalid_argument("breakpoints must span exactly [0,1]");
  }
  if (cleaned.front().y != 0 || cleaned.back().y != 0) {
    throw std::invalid_argument("endpoint values must be zero");
  }
  points_.reserve(cleaned.size());
  for (Breakpoint& p : cleaned) {
    while (points_.size() >= 2 &&
           collinear(points_[points_.size() - 2], points_.back(), p)) {
      points_.pop_back();
    }
    points_.push_back(std::move(p));
  }
}

Rational PLFunction::operator()(const Rational& x) const {
  if (x < 0 || x > 1) throw std::out_of_range("evaluation point outside [0,1]");
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  if (it == points_.end()) return points_.back().y;  // x == 1
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

PLFunction parse_plfunction(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw std::invalid_argument("function document must contain a \"points\" array");
  }
  const auto coordinate = [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return rational_from_string(v.dump());
    throw std::invalid_argument(
        "coordinates must be rational strings or integers (no floating point)");
  };
  std::vector<Breakpoint> points;
  for (const auto& item : doc["points"]) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument("each point must be an [x, y] pair");
    }
    points.push_back({coordinate(item[0]), coordinate(item[1])});
  }
  return PLFunction(std::move(points));
}

std::string to_json(const PLFunction& f) {
  nlohmann::ordered_json doc;
  doc["points"] = nlohmann::ordered_json::array();
  for (const Breakpoint& p : f.breakpoints()) {
    doc["points"].push_back({to_string(p.x), to_string(p.y)});
  }
  return doc.dump(2);
}

Rational evaluate(const PLFunction& f, const Rational& x) {
  return f(x);
}

namespace {

// Breakpoints refined so that no segment changes sign in its interior.
std::vector<Breakpoint> refine_at_zeros(const std::vector<Breakpoint>& pts) {
  std::vector<Breakpoint> out;
  out.push_back(pts.front());
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Breakpoint& a = pts[i - 1];
    const Breakpoint& b = pts[i];
    if (sgn(a.y) * sgn(b.y) < 0) {
      Rational x = a.x + (b.x - a.x) * a.y / (a.y - b.y);
      out.push_back({std::move(x), Rational(0)});
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace

RangeDecomposition decompose(const PLFunction& f) {
  const std::vector<Breakpoint> pts = refine_at_zeros(f.breakpoints());
  // Per-segment sign; after refinement a segment is nonnegative or nonpositive.
  std::vector<int> sign(pts.size() - 1);
  bool all_zero = true;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    sign[i] = sgn(pts[i].y) != 0 ? sgn(pts[i].y) : sgn(pts[i + 1].y);
    if (sign[i] != 0) all_zero = false;
  }

  RangeDecomposition result;
  if (all_zero) {
    result.degenerate = true;
    result.ranges.push_back({RangeKind::Mountain, Rational(0), Rational(1), Rational(0),
                             Rational(1), Rational(0), Rational(0), Rational(1)});
    return result;
  }

  std::vector<std::pair<Rational, Rational>> spans;  // [s1, s2] per range
  std::vector<int> kinds;
  int current = 0;
  Rational start(0);
  for (std::size_t i = 0; i < sign.size(); ++i) {
    if (sign[i] == 0) continue;  // plateau: stays with the open range
    if (current == 0) {
      current = sign[i];  // leading plateau attaches to the first range
    } else if (sign[i] != current) {
      spans.emplace_back(start, pts[i].x);
      kinds.push_back(current);
      start = pts[i].x;
      current = sign[i];
    }
  }
  spans.emplace_back(start, Rational(1));
  kinds.push_back(current);

  for (std::size_t r = 0; r < spans.size(); ++r) {
    const auto& [s1, s2] = spans[r];
    Range range;
    range.kind = kinds[r] > 0 ? RangeKind::Mountain : RangeKind::Valley;
    range.s1 = s1;
    range.s2 = s2;
    range.width = s2 - s1;
    // Extremum over the refined breakpoints inside [s1, s2]; leftmost wins.
    bool first = true;
    for (const Breakpoint& p : pts) {
      if (p.x < s1 || p.x > s2) continue;
      const bool better = first || (kinds[r] > 0 ? p.y > range.height : p.y < range.height);
      if (better) {
        range.height = p.y;
        range.peak_x = p.x;
        first = false;
      }
    }
    range.ascent_width = range.peak_x - range.s1;
    range.descent_width = range.s2 - range.peak_x;
    result.ranges.push_back(std::move(range));
  }
  return result;
}

PLFunction reverse(const PLFunction& f) {
  std::vector<Breakpoint> pts;
  const auto& original = f.breakpoints();
  for (auto it = original.rbegin(); it != original.rend(); ++it) {
    pts.push_back({Rational(1 - it->x), it->y});
  }
  return PLFunction(std::move(pts));
}

}  // namespace chords
