#pragma once

#include <string>
#include <vector>

#include "chords/rational.hpp"

namespace chords {

// Closed interval [lo, hi]; lo == hi encodes an isolated point.
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Open interval (lo, hi), lo < hi.
struct OpenInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Canonical finite union of closed subintervals of [0,1]: sorted by lo,
// pairwise disjoint, touching intervals merged.
struct IntervalSet {
  std::vector<Interval> intervals;
  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.intervals == b.intervals;
  }
};

// Sorts, merges overlapping/touching intervals, absorbs contained points.
// Throws std::invalid_argument if some lo > hi or an endpoint leaves [0,1].
IntervalSet make_interval_set(std::vector<Interval> raw);

bool contains(const IntervalSet& s, const Rational& x);

// True iff [lo, hi] is entirely inside one interval of s.
bool covers(const IntervalSet& s, const Rational& lo, const Rational& hi);

// Total length, isolated points contributing zero.
Rational measure(const IntervalSet& s);

// Length of s restricted to [0, d]; requires 0 < d <= 1.
Rational truncated_measure(const IntervalSet& s, const Rational& d);

// Maximal open components of (0,1) \ s, in increasing order.
std::vector<OpenInterval> complement_in_unit(const IntervalSet& s);

// {"intervals": [["p/q","p/q"], ...]}
std::string to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const std::string& text);

}  // namespace chords
