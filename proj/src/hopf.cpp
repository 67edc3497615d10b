#include "chords/hopf.hpp"

#include <algorithm>
#include <stdexcept>

namespace chords {

PeriodicPL::PeriodicPL(std::vector<Breakpoint> base) : base_(std::move(base)) {
  if (base_.size() < 2) throw std::invalid_argument("period needs at least 2 breakpoints");
  for (std::size_t i = 1; i < base_.size(); ++i) {
    if (base_[i - 1].x >= base_[i].x) {
      throw std::invalid_argument("breakpoint x-coordinates must be strictly increasing");
    }
  }
  if (base_.front().y != base_.back().y) {
    throw std::invalid_argument("period endpoint values must agree");
  }
}

Rational PeriodicPL::operator()(const Rational& x) const {
  const Rational T = period();
  Rational offset = (x - x1()) / T;
  Rational u = x - Rational(floor_of(offset)) * T;  // u in [x1, x1 + T)
  auto it = std::upper_bound(base_.begin(), base_.end(), u,
                             [](const Rational& v, const Breakpoint& p) { return v < p.x; });
  if (it == base_.end()) return base_.back().y;
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (u - lo.x) / (hi.x - lo.x);
}

std::optional<AdditivityViolation> check_additive_complement(const IntervalSet& s) {
  if (!contains(s, Rational(0)) || !contains(s, Rational(1))) {
    throw std::invalid_argument("additivity check requires 0 and 1 in the set");
  }
  const std::vector<OpenInterval> gaps = complement_in_unit(s);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    for (std::size_t j = i; j < gaps.size(); ++j) {
      const Rational lo = gaps[i].lo + gaps[j].lo;
      if (lo >= 1) continue;  // whole sum interval lands in the (1, inf) tail
      const Rational hi = std::min(Rational(gaps[i].hi + gaps[j].hi), Rational(1));
      // First piece of S meeting the open interval (lo, hi), if any.
      for (const Interval& iv : s.intervals) {
        if (iv.hi <= lo) continue;
        if (iv.lo >= hi) break;
        const Rational p = std::max(lo, iv.lo);
        const Rational q = std::min(hi, iv.hi);
        const Rational sum = p < q ? Rational((p + q) / 2) : p;
        // Split the witnessed sum across the two gap intervals.
        const Rational t = sum - lo;
        const Rational len_i = gaps[i].hi - gaps[i].lo;
        const Rational len_j = gaps[j].hi - gaps[j].lo;
        const Rational a = gaps[i].lo + t * len_i / (len_i + len_j);
        return AdditivityViolation{a, Rational(sum - a), sum};
      }
    }
  }
  return std::nullopt;
}

HalfMeasureResult check_half_measure(const IntervalSet& s) {
  if (s.intervals.empty()) throw std::invalid_argument("half-measure check needs a non-empty set");
  std::vector<Rational> candidates;
  for (const Interval& iv : s.intervals) {
    if (iv.lo > 0) candidates.push_back(iv.lo);
    if (iv.hi > 0) candidates.push_back(iv.hi);
  }
  candidates.push_back(Rational(1));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  HalfMeasureResult best;
  bool first = true;
  for (const Rational& d : candidates) {
    if (d > 1) continue;
    Rational ratio = truncated_measure(s, d) / d;
    if (first || ratio < best.min_ratio) {
      best.min_ratio = std::move(ratio);
      best.argmin_d = d;
      first = false;
    }
  }
  return best;
}

Rational periodic_coincidence(const PeriodicPL& F, const Rational& a) {
  const Rational T = F.period();
  const Rational& x1 = F.x1();
  const Rational& x2 = F.x2();

  // Breakpoints of G(x) = F(x-a) - F(x) over one period window: the base
  // breakpoints plus the base breakpoints shifted by a, reduced mod T.
  std::vector<Rational> xs;
  for (const Breakpoint& p : F.base()) {
    xs.push_back(p.x);
    Rational shifted = p.x + a - x1;
    Rational reduced = x1 + (shifted - Rational(floor_of(Rational(shifted / T))) * T);
    xs.push_back(std::move(reduced));
  }
  xs.push_back(x2);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Rational> vals;
  vals.reserve(xs.size());
  for (const Rational& x : xs) vals.push_back(F(x - a) - F(x));

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vals[i] == 0) return xs[i];
    if (i + 1 < xs.size() && sgn(vals[i]) * sgn(vals[i + 1]) < 0) {
      return xs[i] + (xs[i + 1] - xs[i]) * vals[i] / (vals[i] - vals[i + 1]);
    }
  }
  throw std::logic_error("periodic coincidence not found; broken invariant");
}

ChordWitness split_chord(const PLFunction& f, const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("split lengths must be nonnegative");
  const Rational total = a + b;
  if (total > 1) throw std::invalid_argument("a + b exceeds 1");
  const std::optional<ChordWitness> base = chord_exists(f, total);
  if (!base) throw std::invalid_argument("a + b is not a chord length of f");
  if (a == 0 || b == 0) return *base;  // the witness itself has length max(a, b)

  const Rational& x1 = base->s;
  const Rational x2 = base->s + total;
  std::vector<Breakpoint> window;
  window.push_back({x1, f(x1)});
  for (const Breakpoint& p : f.breakpoints()) {
    if (p.x > x1 && p.x < x2) window.push_back(p);
  }
  window.push_back({x2, f(x2)});
  const PeriodicPL F(std::move(window));

  const Rational x0 = periodic_coincidence(F, a);
  if (x0 - a >= x1) return ChordWitness{Rational(x0 - a), a};
  return ChordWitness{x0, b};
}

}  // namespace chords
