#include <doctest.h>

#include <algorithm>

#include "chords/chordset.hpp"
#include "chords/constructions.hpp"
#include "chords/family.hpp"
#include "support/random_functions.hpp"

using namespace chords;
using chords::testsupport::frac;
using chords::testsupport::random_plfunction;

namespace {

PLFunction tent() {
  return parse_plfunction(R"({"points":[["0","0"],["1/2","1"],["1","0"]]})");
}

PLFunction mountain_valley() {
  return parse_plfunction(
      R"({"points":[["0","0"],["1/4","1"],["1/2","0"],["3/4","-1"],["1","0"]]})");
}

}  // namespace

TEST_CASE("chord_exists: tent symmetry") {
  const auto w = chord_exists(tent(), frac(1, 2));
  REQUIRE(w.has_value());
  CHECK(w->s == frac(1, 4));
  CHECK(evaluate(tent(), w->s) == evaluate(tent(), Rational(w->s + w->ell)));
}

TEST_CASE("chord_exists: zero length always has the witness s = 0") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto w = chord_exists(random_plfunction(rng), Rational(0));
    REQUIRE(w.has_value());
    CHECK(w->s == Rational(0));
  }
}

TEST_CASE("chord_exists: no chord of length 3/4 for the mountain-valley function") {
  const PLFunction f = mountain_valley();
  CHECK_FALSE(chord_exists(f, frac(3, 4)).has_value());
  // Independent scan: the shifted difference stays at -1 across the whole
  // domain [0, 1/4] of admissible starting points.
  for (long k = 0; k <= 100; ++k) {
    Rational s(k, 400);
    s.canonicalize();
    CHECK(evaluate(f, Rational(s + frac(3, 4))) - evaluate(f, s) == Rational(-1));
  }
}

TEST_CASE("chord_exists rejects lengths outside [0,1]") {
  CHECK_THROWS_AS(chord_exists(tent(), frac(-1, 4)), std::out_of_range);
  CHECK_THROWS_AS(chord_exists(tent(), frac(5, 4)), std::out_of_range);
}

TEST_CASE("chord_set: tent is full") {
  const IntervalSet s = chord_set(tent());
  REQUIRE(s.intervals.size() == 1);
  CHECK(s.intervals[0] == Interval{Rational(0), Rational(1)});
  CHECK(is_full(tent()));
}

TEST_CASE("chord_set: mountain-valley keeps [0,1/2] and the isolated point 1") {
  const IntervalSet s = chord_set(mountain_valley());
  // Oracle first: brute-force membership on the 1/1000 grid.
  for (long k = 0; k <= 1000; ++k) {
    Rational ell(k, 1000);
    ell.canonicalize();
    const bool expected = ell <= frac(1, 2) || ell == 1;
    CHECK(chord_exists(mountain_valley(), ell).has_value() == expected);
    CHECK(contains(s, ell) == expected);
  }
  REQUIRE(s.intervals.size() == 2);
  CHECK(s.intervals[0] == Interval{Rational(0), frac(1, 2)});
  CHECK(s.intervals[1] == Interval{Rational(1), Rational(1)});
  CHECK_FALSE(is_full(mountain_valley()));
}

TEST_CASE("chord_set: two mountains with a triangular valley") {
  TwoMountainParams p;
  p.w_l = frac(1, 5);
  p.w_v = frac(1, 5);
  p.w_r = frac(3, 5);
  p.a_l = p.d_l = frac(1, 10);
  p.a_v = p.d_v = frac(1, 10);
  p.a_r = p.d_r = frac(3, 10);
  p.h_l = frac(1, 10);
  p.h_v = frac(-1, 2);
  p.h_r = Rational(1);
  const PLFunction f = realize(p);
  const IntervalSet s = chord_set(f);
  REQUIRE(s.intervals.size() == 2);
  CHECK(s.intervals[0] == Interval{Rational(0), frac(3, 5)});
  CHECK(s.intervals[1] == Interval{frac(4, 5), Rational(1)});
  // Grid oracle across the gap.
  for (long k = 0; k <= 200; ++k) {
    Rational ell(k, 200);
    ell.canonicalize();
    CHECK(chord_exists(f, ell).has_value() == contains(s, ell));
  }
}

TEST_CASE("chord_set: zero function is full") {
  CHECK(is_full(parse_plfunction(R"({"points":[["0","0"],["1","0"]]})")));
}

TEST_CASE("grid_oracle_scan matches the documented small cases") {
  const auto full = grid_oracle_scan(tent(), 4);
  CHECK(full == std::vector<Rational>{Rational(0), frac(1, 4), frac(1, 2), frac(3, 4), Rational(1)});

  const auto partial = grid_oracle_scan(mountain_valley(), 4);
  CHECK(partial == std::vector<Rational>{Rational(0), frac(1, 4), frac(1, 2), Rational(1)});

  std::mt19937_64 rng(17);
  const auto trivial = grid_oracle_scan(random_plfunction(rng), 1);
  CHECK(trivial == std::vector<Rational>{Rational(0), Rational(1)});

  CHECK_THROWS_AS(grid_oracle_scan(tent(), 0), std::invalid_argument);
}

TEST_CASE("random functions: the exact set and the per-length oracle agree") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 30; ++i) {
    const PLFunction f = random_plfunction(rng);
    const IntervalSet s = chord_set(f);
    std::uniform_int_distribution<long> denom(1, 200);
    const long n = denom(rng);
    for (long k = 0; k <= n; ++k) {
      Rational ell(k, n);
      ell.canonicalize();
      CHECK(contains(s, ell) == chord_exists(f, ell).has_value());
    }
  }
}

TEST_CASE("random functions: structural invariants of the chord set") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 60; ++i) {
    const PLFunction f = random_plfunction(rng);
    const IntervalSet s = chord_set(f);

    // 0 and 1 always belong.
    CHECK(contains(s, Rational(0)));
    CHECK(contains(s, Rational(1)));

    // Canonical closed form: sorted, disjoint, non-adjacent, inside [0,1].
    for (std::size_t j = 0; j < s.intervals.size(); ++j) {
      CHECK(s.intervals[j].lo <= s.intervals[j].hi);
      CHECK(s.intervals[j].lo >= 0);
      CHECK(s.intervals[j].hi <= 1);
      if (j > 0) CHECK(s.intervals[j - 1].hi < s.intervals[j].lo);
    }

    // Every maximal range contributes all lengths up to its width.
    for (const Range& r : decompose(f).ranges) {
      CHECK(covers(s, Rational(0), r.width));
    }

    // Reflection leaves the chord set unchanged.
    CHECK(chord_set(reverse(f)) == s);
  }
}

TEST_CASE("witnesses returned by chord_exists verify exactly") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 40; ++i) {
    const PLFunction f = random_plfunction(rng);
    const Rational ell = testsupport::random_unit_rational(rng, 128);
    const auto w = chord_exists(f, ell);
    if (w) {
      CHECK(w->ell == ell);
      CHECK(w->s >= 0);
      CHECK(Rational(w->s + ell) <= 1);
      CHECK(evaluate(f, w->s) == evaluate(f, Rational(w->s + ell)));
    }
  }
}
