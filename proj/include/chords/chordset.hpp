#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chords/interval_set.hpp"
#include "chords/plfunc.hpp"

namespace chords {

// A witnessed horizontal chord: f(s) = f(s + ell) exactly.
struct ChordWitness {
  Rational s;
  Rational ell;
};

// Leftmost witness for a chord of length ell, if one exists.
// g(s) = f(s+ell) - f(s) is piecewise linear on [0, 1-ell] with breakpoints
// {t_i} and {t_j - ell}; a chord exists iff g takes both signs (or vanishes)
// over those breakpoints. Throws std::out_of_range unless 0 <= ell <= 1.
std::optional<ChordWitness> chord_exists(const PLFunction& f, const Rational& ell);

struct ChordSetResult {
  IntervalSet set;
  std::size_t cell_count = 0;   // non-empty arrangement cells processed
  std::size_t piece_count = 0;  // raw projected pieces before canonicalization
};

// Exact chord-length set of f.
//
// The triangle D = {(s, l) : s >= 0, l >= 0, s + l <= 1} is cut by the lines
// s = t_i and s + l = t_j over all breakpoints t of f. On each cell
// g(s, l) = f(s+l) - f(s) is affine, so its zero set is empty, a segment, or
// the whole cell; the chord set is the union of the l-axis projections of
// those zero sets. Everything is exact; single-point projections survive
// canonicalization as isolated points.
ChordSetResult chord_set_detailed(const PLFunction& f);

IntervalSet chord_set(const PLFunction& f);

// True iff the chord set is all of [0,1].
bool is_full(const PLFunction& f);

// All grid lengths k/resolution (0 <= k <= resolution) admitting a chord,
// via chord_exists only. Independent of chord_set; used to cross-check it.
std::vector<Rational> grid_oracle_scan(const PLFunction& f, long resolution);

}  // namespace chords
