#include <doctest.h>

#include "chords/constructions.hpp"
#include "chords/hopf.hpp"
#include "support/random_functions.hpp"

using namespace chords;
using chords::testsupport::frac;

TEST_CASE("sn_intervals: small cases") {
  CHECK(sn_intervals(1) ==
        make_interval_set({{Rational(0), frac(1, 2)}, {Rational(1), Rational(1)}}));
  CHECK(sn_intervals(2) == make_interval_set({{Rational(0), frac(1, 3)},
                                              {frac(1, 2), frac(2, 3)},
                                              {Rational(1), Rational(1)}}));
  CHECK(sn_intervals(3) == make_interval_set({{Rational(0), frac(1, 4)},
                                              {frac(1, 3), frac(1, 2)},
                                              {frac(2, 3), frac(3, 4)},
                                              {Rational(1), Rational(1)}}));
  CHECK_THROWS_AS(sn_intervals(0), std::invalid_argument);
}

TEST_CASE("sn_complement: small cases and consistency") {
  const std::vector<OpenInterval> g1 = sn_complement(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0] == OpenInterval{frac(1, 2), Rational(1)});

  const std::vector<OpenInterval> g2 = sn_complement(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == OpenInterval{frac(1, 3), frac(1, 2)});
  CHECK(g2[1] == OpenInterval{frac(2, 3), Rational(1)});

  const std::vector<OpenInterval> g3 = sn_complement(3);
  REQUIRE(g3.size() == 3);
  CHECK(g3[0] == OpenInterval{frac(1, 4), frac(1, 3)});
  CHECK(g3[1] == OpenInterval{frac(1, 2), frac(2, 3)});
  CHECK(g3[2] == OpenInterval{frac(3, 4), Rational(1)});

  for (long n = 1; n <= 20; ++n) {
    CHECK(complement_in_unit(sn_intervals(n)) == sn_complement(n));
  }
  CHECK_THROWS_AS(sn_complement(0), std::invalid_argument);
}

TEST_CASE("sn measure identity: both computations give exactly 1/2") {
  for (long n : {1L, 2L, 5L, 100L}) {
    CHECK(sn_measure_identity(n) == frac(1, 2));
  }
  CHECK_THROWS_AS(sn_measure_identity(0), std::invalid_argument);
}

TEST_CASE("sn complements are additive") {
  for (long n = 1; n <= 15; ++n) {
    CHECK_FALSE(check_additive_complement(sn_intervals(n)).has_value());
  }
}

TEST_CASE("make_mountain_valley: abutting humps") {
  const PLFunction f = make_mountain_valley(frac(1, 2), frac(1, 2), Rational(1), Rational(-1));
  const PLFunction expected = parse_plfunction(
      R"({"points":[["0","0"],["1/4","1"],["1/2","0"],["3/4","-1"],["1","0"]]})");
  CHECK(f == expected);
}

TEST_CASE("make_mountain_valley: flat middle") {
  const PLFunction f =
      make_mountain_valley(frac(1, 4), frac(1, 4), Rational(1), frac(-1, 2));
  const PLFunction expected = parse_plfunction(
      R"({"points":[["0","0"],["1/8","1"],["1/4","0"],["3/4","0"],["7/8","-1/2"],["1","0"]]})");
  CHECK(f == expected);
}

TEST_CASE("make_mountain_valley: constraint violations") {
  CHECK_THROWS_AS(make_mountain_valley(Rational(0), frac(1, 2), Rational(1), Rational(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_mountain_valley(frac(3, 4), frac(1, 2), Rational(1), Rational(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_mountain_valley(frac(1, 4), frac(1, 4), Rational(0), Rational(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_mountain_valley(frac(1, 4), frac(1, 4), Rational(1), Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("mountain-valley generators never admit long chords") {
  std::mt19937_64 rng(24601);
  std::uniform_int_distribution<long> num(1, 15);
  for (int i = 0; i < 25; ++i) {
    const Rational w1 = frac(num(rng), 32);
    const Rational w2 = frac(num(rng), 32);
    const Rational h = frac(num(rng), 8);
    const Rational depth = frac(-num(rng), 8);
    const PLFunction f = make_mountain_valley(w1, w2, h, depth);
    const IntervalSet s = chord_set(f);
    // The boundary length 1 - min(w1,w2) itself always joins two zeros of f,
    // so the excluded zone is the open interval up to 1.
    const Rational cutoff = 1 - std::min(w1, w2);
    for (const Interval& iv : s.intervals) {
      const bool clear = iv.hi <= cutoff || iv.lo == 1;
      CHECK(clear);
    }
    CHECK(contains(s, cutoff));
    CHECK(contains(s, Rational(1)));
  }
}

TEST_CASE("verify_chordset_equals: matches and mismatches") {
  const PLFunction tent = parse_plfunction(R"({"points":[["0","0"],["1/2","1"],["1","0"]]})");
  const PLFunction mv =
      make_mountain_valley(frac(1, 2), frac(1, 2), Rational(1), Rational(-1));

  CHECK(verify_chordset_equals(tent, make_interval_set({{Rational(0), Rational(1)}})).equal);
  CHECK(verify_chordset_equals(
            mv, make_interval_set({{Rational(0), frac(1, 2)}, {Rational(1), Rational(1)}}))
            .equal);

  const VerifyResult r =
      verify_chordset_equals(tent, make_interval_set({{Rational(0), frac(1, 2)}}));
  CHECK_FALSE(r.equal);
  REQUIRE(r.first_differing_endpoint.has_value());
  CHECK(*r.first_differing_endpoint == frac(1, 2));
  CHECK(*r.index == 0);
}

TEST_CASE("sn_realization: chord set is exactly the sharp set") {
  for (long n = 1; n <= 6; ++n) {
    const VerifyResult r = verify_chordset_equals(sn_realization(n), sn_intervals(n));
    CHECK(r.equal);
  }
}

TEST_CASE("sn_realization(1) coincides with the basic mountain-valley shape") {
  CHECK(sn_realization(1) ==
        make_mountain_valley(frac(1, 2), frac(1, 2), Rational(1), Rational(-1)));
}

TEST_CASE("isolated points example realizes its documented chord set") {
  const IntervalSet expected = make_interval_set({{Rational(0), frac(1, 2)},
                                                  {frac(5, 8), frac(5, 8)},
                                                  {frac(3, 4), frac(3, 4)},
                                                  {frac(7, 8), frac(7, 8)},
                                                  {Rational(1), Rational(1)}});
  const VerifyResult r = verify_chordset_equals(isolated_chords_example(), expected);
  CHECK(r.equal);
}

TEST_CASE("generator outputs obey the range-width bound") {
  for (long n = 1; n <= 5; ++n) {
    const PLFunction f = sn_realization(n);
    const IntervalSet s = chord_set(f);
    for (const Range& r : decompose(f).ranges) {
      CHECK(covers(s, Rational(0), r.width));
    }
  }
}
