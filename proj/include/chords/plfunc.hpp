#pragma once

#include <string>
#include <vector>

#include "chords/rational.hpp"

namespace chords {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Continuous piecewise-linear function on [0,1] with f(0) = f(1) = 0,
// stored as its breakpoints with strictly increasing x. Construction
// canonicalizes: exact duplicate points are dropped and interior points
// collinear with their neighbours are merged away.
class PLFunction {
 public:
  explicit PLFunction(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  // Exact value at x; throws std::out_of_range outside [0,1].
  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Breakpoint> points_;
};

enum class RangeKind { Mountain, Valley };

// One maximal mountain or valley range. height is the extreme value
// (positive for mountains, negative for valleys), peak_x the leftmost
// point attaining it.
struct Range {
  RangeKind kind;
  Rational s1;
  Rational s2;
  Rational height;
  Rational width;
  Rational peak_x;
  Rational ascent_width;   // peak_x - s1
  Rational descent_width;  // s2 - peak_x
};

struct RangeDecomposition {
  std::vector<Range> ranges;
  bool degenerate = false;  // true iff f is identically zero
};

// Parses {"points": [[x, y], ...]} with "p/q"/integer-string (or plain JSON
// integer) coordinates. Throws std::invalid_argument on malformed input or
// invariant violations.
PLFunction parse_plfunction(const std::string& json_text);

std::string to_json(const PLFunction& f);

Rational evaluate(const PLFunction& f, const Rational& x);

// Maximal alternating mountain/valley ranges tiling [0,1]. Zero plateaus
// attach to the preceding range (a leading plateau to the first range).
RangeDecomposition decompose(const PLFunction& f);

// g(s) = f(1-s).
PLFunction reverse(const PLFunction& f);

}  // namespace chords
