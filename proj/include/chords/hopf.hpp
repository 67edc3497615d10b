#pragma once

#include <optional>
#include <vector>

#include "chords/chordset.hpp"
#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// Piecewise-linear function on all of R, given by one period [x1, x2] with
// equal values at both ends.
class PeriodicPL {
 public:
  explicit PeriodicPL(std::vector<Breakpoint> base);

  const std::vector<Breakpoint>& base() const { return base_; }
  const Rational& x1() const { return base_.front().x; }
  const Rational& x2() const { return base_.back().x; }
  Rational period() const { return base_.back().x - base_.front().x; }

  Rational operator()(const Rational& x) const;

 private:
  std::vector<Breakpoint> base_;
};

// Two complement lengths whose sum is a chord length; a counterexample to
// additivity of the complement.
struct AdditivityViolation {
  Rational a;
  Rational b;
  Rational sum;
};

// Checks that the complement of S in (0,1), extended by the tail (1, inf),
// is closed under addition. The sum-set of two maximal open complement
// components (a_i,b_i), (a_j,b_j) is (a_i+a_j, b_i+b_j); checking every pair
// of components against S is exact and complete for finite interval sets.
// Returns the first violation in component order, or nullopt.
// Throws std::invalid_argument unless 0 and 1 belong to S.
std::optional<AdditivityViolation> check_additive_complement(const IntervalSet& s);

struct HalfMeasureResult {
  Rational min_ratio;
  Rational argmin_d;
};

// Minimizes d -> measure(S intersect [0,d]) / d over (0,1]. The ratio is
// monotone between endpoints of S (decreasing across gaps, nondecreasing
// inside intervals), so only interval endpoints and d = 1 are candidates.
// Ties resolve to the smallest d.
HalfMeasureResult check_half_measure(const IntervalSet& s);

// Leftmost x0 in [x1, x2] with F(x0 - a) = F(x0), found by an exact sign
// scan of G(x) = F(x-a) - F(x) over one period. Existence is guaranteed for
// continuous periodic F.
Rational periodic_coincidence(const PeriodicPL& F, const Rational& a);

// Given a + b in the chord set, produces an exact chord of length a or of
// length b: extend f over a witness chord [x1, x2] periodically with period
// a + b, find a coincidence x0 of the a-shift, and read the chord off
// whichever of x0 - a (length a) or x0 (length b) stays inside [x1, x2].
// Throws std::invalid_argument if a + b is not a chord length.
ChordWitness split_chord(const PLFunction& f, const Rational& a, const Rational& b);

}  // namespace chords
