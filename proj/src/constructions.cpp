#include "chords/constructions.hpp"

#include <stdexcept>

namespace chords {

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

IntervalSet sn_intervals(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Interval> raw;
  for (long k = 1; k <= n; ++k) {
    raw.push_back({frac(k - 1, n), frac(k, n + 1)});
  }
  raw.push_back({Rational(1), Rational(1)});
  return make_interval_set(std::move(raw));
}

std::vector<OpenInterval> sn_complement(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<OpenInterval> gaps;
  for (long k = 1; k <= n; ++k) {
    gaps.push_back({frac(k, n + 1), frac(k, n)});
  }
  return gaps;
}

Rational sn_measure_identity(long n) {
  const Rational by_intervals = measure(sn_intervals(n));
  // Telescoping form: sum k/(n+1) - sum (k-1)/n over k = 1..n.
  const Rational closed_form =
      frac(n * (n + 1) / 2, n + 1) - frac((n - 1) * n / 2, n);
  if (by_intervals != closed_form) {
    throw std::logic_error("interval sum and closed form disagree");
  }
  return by_intervals;
}

PLFunction make_mountain_valley(const Rational& w1, const Rational& w2, const Rational& h1,
                                const Rational& depth) {
  if (w1 <= 0 || w2 <= 0) throw std::invalid_argument("widths must be positive");
  if (w1 + w2 > 1) throw std::invalid_argument("widths must sum to at most 1");
  if (h1 <= 0) throw std::invalid_argument("mountain height must be positive");
  if (depth >= 0) throw std::invalid_argument("valley depth must be negative");
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  pts.push_back({Rational(w1 / 2), h1});
  pts.push_back({w1, Rational(0)});
  if (w1 + w2 < 1) pts.push_back({Rational(1 - w2), Rational(0)});
  pts.push_back({Rational(1 - w2 / 2), depth});
  pts.push_back({Rational(1), Rational(0)});
  return PLFunction(std::move(pts));
}

PLFunction sn_realization(long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  for (long k = 1; k <= n; ++k) {
    const Rational m_lo = frac(k - 1, n);
    const Rational m_hi = frac(k, n + 1);
    pts.push_back({Rational((m_lo + m_hi) / 2), frac(n + 1 - k, n)});
    pts.push_back({m_hi, Rational(0)});
    const Rational v_hi = frac(k, n);
    pts.push_back({Rational((m_hi + v_hi) / 2), frac(-k, n)});
    pts.push_back({v_hi, Rational(0)});
  }
  return PLFunction(std::move(pts));
}

PLFunction isolated_chords_example() {
  std::vector<Breakpoint> pts = {
      {frac(0, 1), frac(0, 1)},   {frac(1, 4), frac(1, 1)},    {frac(1, 2), frac(0, 1)},
      {frac(9, 16), frac(-1, 2)}, {frac(5, 8), frac(0, 1)},    {frac(11, 16), frac(-1, 4)},
      {frac(3, 4), frac(0, 1)},   {frac(13, 16), frac(-1, 2)}, {frac(7, 8), frac(0, 1)},
      {frac(15, 16), frac(-1, 4)}, {frac(1, 1), frac(0, 1)},
  };
  return PLFunction(std::move(pts));
}

VerifyResult verify_chordset_equals(const PLFunction& f, const IntervalSet& target) {
  VerifyResult result;
  result.computed = chord_set(f);
  if (result.computed == target) {
    result.equal = true;
    return result;
  }
  const auto& got = result.computed.intervals;
  const auto& want = target.intervals;
  std::size_t i = 0;
  while (i < got.size() && i < want.size() && got[i] == want[i]) ++i;
  result.index = i;
  if (i < got.size()) result.computed_interval = got[i];
  if (i < want.size()) result.expected_interval = want[i];
  if (i < got.size() && i < want.size()) {
    if (got[i].lo != want[i].lo) {
      result.first_differing_endpoint = std::min(got[i].lo, want[i].lo);
    } else {
      result.first_differing_endpoint = std::min(got[i].hi, want[i].hi);
    }
  } else if (i < got.size()) {
    result.first_differing_endpoint = got[i].lo;
  } else {
    result.first_differing_endpoint = want[i].lo;
  }
  return result;
}

}  // namespace chords
