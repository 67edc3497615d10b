#include "chords/chordset.hpp"

#include <algorithm>
#include <stdexcept>

namespace chords {

namespace {

// Sorted, deduplicated breakpoint positions of g(s) = f(s+ell) - f(s)
// on [0, 1-ell].
std::vector<Rational> shift_breakpoints(const PLFunction& f, const Rational& ell) {
  const Rational end = 1 - ell;
  std::vector<Rational> xs;
  for (const Breakpoint& p : f.breakpoints()) {
    if (p.x <= end) xs.push_back(p.x);
    Rational shifted = p.x - ell;
    if (shifted >= 0 && shifted <= end) xs.push_back(std::move(shifted));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

std::optional<ChordWitness> chord_exists(const PLFunction& f, const Rational& ell) {
  if (ell < 0 || ell > 1) throw std::out_of_range("chord length outside [0,1]");
  const std::vector<Rational> xs = shift_breakpoints(f, ell);
  std::vector<Rational> vals;
  vals.reserve(xs.size());
  for (const Rational& x : xs) vals.push_back(f(x + ell) - f(x));

  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (vals[i] == 0) return ChordWitness{xs[i], ell};
    if (i + 1 < xs.size() && sgn(vals[i]) * sgn(vals[i + 1]) < 0) {
      Rational s = xs[i] + (xs[i + 1] - xs[i]) * vals[i] / (vals[i] - vals[i + 1]);
      return ChordWitness{std::move(s), ell};
    }
  }
  return std::nullopt;
}

namespace {

struct Pt {
  Rational s;
  Rational l;
};

// Keeps the part of a convex polygon with cs*s + cl*l <= rhs.
std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, const Rational& cs,
                               const Rational& cl, const Rational& rhs) {
  std::vector<Pt> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Pt& cur = poly[i];
    const Pt& nxt = poly[(i + 1) % n];
    const Rational fc = cs * cur.s + cl * cur.l - rhs;
    const Rational fn = cs * nxt.s + cl * nxt.l - rhs;
    if (fc <= 0) out.push_back(cur);
    if (sgn(fc) * sgn(fn) < 0) {
      const Rational t = fc / (fc - fn);
      out.push_back({cur.s + t * (nxt.s - cur.s), cur.l + t * (nxt.l - cur.l)});
    }
  }
  // Drop consecutive duplicates introduced by clips through vertices.
  std::vector<Pt> dedup;
  for (const Pt& p : out) {
    if (!dedup.empty() && p.s == dedup.back().s && p.l == dedup.back().l) continue;
    dedup.push_back(p);
  }
  while (dedup.size() > 1 && dedup.front().s == dedup.back().s &&
         dedup.front().l == dedup.back().l) {
    dedup.pop_back();
  }
  return dedup;
}

}  // namespace

ChordSetResult chord_set_detailed(const PLFunction& f) {
  const auto& pts = f.breakpoints();
  const std::size_t m = pts.size() - 1;

  // Line equation y = intercept[k] + slope[k] * x per segment.
  std::vector<Rational> slope(m), intercept(m);
  for (std::size_t k = 0; k < m; ++k) {
    slope[k] = (pts[k + 1].y - pts[k].y) / (pts[k + 1].x - pts[k].x);
    intercept[k] = pts[k].y - slope[k] * pts[k].x;
  }

  ChordSetResult result;
  std::vector<Interval> pieces;
  // 0 and 1 are always chord lengths (s = 0 witnesses both).
  pieces.push_back({Rational(0), Rational(0)});
  pieces.push_back({Rational(1), Rational(1)});

  const std::vector<Pt> domain = {{Rational(0), Rational(0)},
                                  {Rational(1), Rational(0)},
                                  {Rational(0), Rational(1)}};
  const Rational one(1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      std::vector<Pt> poly = domain;
      poly = clip_halfplane(poly, Rational(-1), Rational(0), -pts[a].x);      // s >= x_a
      poly = clip_halfplane(poly, one, Rational(0), pts[a + 1].x);            // s <= x_{a+1}
      poly = clip_halfplane(poly, Rational(-1), Rational(-1), -pts[b].x);     // s+l >= x_b
      poly = clip_halfplane(poly, one, one, pts[b + 1].x);                    // s+l <= x_{b+1}
      if (poly.empty()) continue;
      ++result.cell_count;

      // g(s, l) = A + B*s + C*l on this cell.
      const Rational A = intercept[b] - intercept[a];
      const Rational B = slope[b] - slope[a];
      const Rational& C = slope[b];

      std::vector<Rational> gvals;
      gvals.reserve(poly.size());
      for (const Pt& p : poly) gvals.push_back(A + B * p.s + C * p.l);

      // l-extent of the zero set: zero vertices plus edge crossings.
      bool any = false;
      Rational lo, hi;
      const auto consider = [&](const Rational& l) {
        if (!any) {
          lo = l;
          hi = l;
          any = true;
        } else if (l < lo) {
          lo = l;
        } else if (l > hi) {
          hi = l;
        }
      };
      const std::size_t n = poly.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (gvals[i] == 0) consider(poly[i].l);
        const std::size_t j = (i + 1) % n;
        if (n > 1 && sgn(gvals[i]) * sgn(gvals[j]) < 0) {
          const Rational t = gvals[i] / (gvals[i] - gvals[j]);
          consider(poly[i].l + t * (poly[j].l - poly[i].l));
        }
      }
      if (any) {
        pieces.push_back({std::move(lo), std::move(hi)});
        ++result.piece_count;
      }
    }
  }
  result.set = make_interval_set(std::move(pieces));
  return result;
}

IntervalSet chord_set(const PLFunction& f) {
  return chord_set_detailed(f).set;
}

bool is_full(const PLFunction& f) {
  const IntervalSet s = chord_set(f);
  return s.intervals.size() == 1 && s.intervals.front().lo == 0 && s.intervals.front().hi == 1;
}

std::vector<Rational> grid_oracle_scan(const PLFunction& f, long resolution) {
  if (resolution < 1) throw std::invalid_argument("grid resolution must be at least 1");
  std::vector<Rational> hits;
  for (long k = 0; k <= resolution; ++k) {
    Rational ell(k, resolution);
    ell.canonicalize();
    if (chord_exists(f, ell)) hits.push_back(std::move(ell));
  }
  return hits;
}

}  // namespace chords
