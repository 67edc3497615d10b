#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// Two triangular mountains separated by one triangular valley.
// Widths sum to 1; each width splits into ascent + descent; the taller
// mountain is normalized to height 1 and the valley depth is negative.
struct TwoMountainParams {
  Rational w_l, w_v, w_r;
  Rational a_l, d_l;
  Rational a_v, d_v;
  Rational a_r, d_r;
  Rational h_l, h_v, h_r;
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const TwoMountainParams& p);

// Parameters of s -> f(1-s); swaps the mountains and each ascent/descent.
TwoMountainParams mirror(const TwoMountainParams& p);

// Breakpoints (0,0), (a_l,h_l), (w_l,0), (w_l+a_v,h_v), (w_l+w_v,0),
// (w_l+w_v+a_r,h_r), (1,0).
PLFunction realize(const TwoMountainParams& p);

// Chord-length bookkeeping for the family, reported in the orientation with
// the narrower mountain on the left (mirrored = true means the parameters
// were reflected first). Intervals that come out inverted are empty.
struct Intermediates {
  bool mirrored = false;
  Rational s_star;        // h_l*a_r + 1 - w_r: ascent of the tall mountain at level h_l
  Rational s_star_upper;  // 1 - h_l*d_r: descent of the tall mountain at level h_l
  Interval S_init;        // [0, max width]: chords inside one hump
  Interval S_mid;         // [w_v, w_l+w_v]: shifted short mountain meets the tall ascent
  Interval S_fin;         // [w_v+w_r, 1]: shifted short mountain meets the tall descent
  std::optional<OpenInterval> T;   // gap left by the three guaranteed intervals
  std::optional<Interval> T1;      // part of T reached through the tall ascent
  std::optional<Interval> T2;      // part of T reached through the tall descent
  std::optional<OpenInterval> uncovered;  // T \ (T1 u T2); nonempty iff not full
};

Intermediates intermediate_sets(const TwoMountainParams& p);

enum class VerdictCase { LeftSmaller, RightSmaller, Neither };

struct FullChordVerdict {
  bool full = true;
  VerdictCase which = VerdictCase::Neither;
  // Conditions (i)-(iv) in the orientation picked by intermediate_sets.
  bool cond_i = false, cond_ii = false, cond_iii = false, cond_iv = false;
  Intermediates intermediates;
};

// Closed-form full-chord-property test; pure parameter arithmetic, never
// builds the function. Boundary equalities in (iii)/(iv) classify as full.
FullChordVerdict classify_closed_form(const TwoMountainParams& p);

// Default sampling convention: widths uniform on the open 2-simplex, ascent
// fractions uniform in (0,1), heights uniform in (0,1] rescaled so the
// larger is 1, valley depth fixed at -1. Draws are doubles rationalized to
// denominator 10^6, so downstream arithmetic is exact.
TwoMountainParams sample_params(std::mt19937_64& rng);

struct MonteCarloResult {
  double fraction = 0.0;   // share of sampled parameter tuples with the full chord property
  double halfwidth = 0.0;  // 95% normal-approximation half-width
  long samples = 0;
  std::uint64_t seed = 0;
  std::string convention = "default";
};

// Deterministic for fixed (samples, seed): the sample index space is cut
// into fixed chunks, each with its own seeded generator, so the result does
// not depend on thread count or schedule. threads == 0 picks a default.
MonteCarloResult monte_carlo(long samples, std::uint64_t seed, int threads = 0);

struct CrossValidateResult {
  long samples = 0;
  std::uint64_t seed = 0;
  long disagreements = 0;          // classifier vs exact engine verdict
  long complement_mismatches = 0;  // predicted uncovered gap vs exact complement
  std::optional<std::string> first_failure;  // parameter dump of the first failure
};

// Replays the sampling convention and checks, per tuple, that the closed
// form agrees with the exact chord-set engine, and that for non-full tuples
// the engine's complement in (0,1) is exactly the predicted uncovered gap.
CrossValidateResult cross_validate(long samples, std::uint64_t seed, int threads = 0);

TwoMountainParams params_from_json(const std::string& text);
std::string to_json(const TwoMountainParams& p);
std::string to_json(const FullChordVerdict& v);
std::string to_json(const MonteCarloResult& r);
std::string to_json(const CrossValidateResult& r);

}  // namespace chords
