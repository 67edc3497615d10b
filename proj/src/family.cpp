#include "chords/family.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chords/chordset.hpp"

namespace chords {

void validate(const TwoMountainParams& p) {
  const auto positive = [](const Rational& v, const char* what) {
    if (v <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
  };
  positive(p.w_l, "w_l");
  positive(p.w_v, "w_v");
  positive(p.w_r, "w_r");
  positive(p.a_l, "a_l");
  positive(p.d_l, "d_l");
  positive(p.a_v, "a_v");
  positive(p.d_v, "d_v");
  positive(p.a_r, "a_r");
  positive(p.d_r, "d_r");
  positive(p.h_l, "h_l");
  positive(p.h_r, "h_r");
  if (p.w_l + p.w_v + p.w_r != 1) throw std::invalid_argument("widths must sum to 1");
  if (p.a_l + p.d_l != p.w_l) throw std::invalid_argument("a_l + d_l must equal w_l");
  if (p.a_v + p.d_v != p.w_v) throw std::invalid_argument("a_v + d_v must equal w_v");
  if (p.a_r + p.d_r != p.w_r) throw std::invalid_argument("a_r + d_r must equal w_r");
  if (std::max(p.h_l, p.h_r) != 1) throw std::invalid_argument("max(h_l, h_r) must equal 1");
  if (p.h_v >= 0) throw std::invalid_argument("h_v must be negative");
}

TwoMountainParams mirror(const TwoMountainParams& p) {
  TwoMountainParams m;
  m.w_l = p.w_r;
  m.a_l = p.d_r;
  m.d_l = p.a_r;
  m.h_l = p.h_r;
  m.w_v = p.w_v;
  m.a_v = p.d_v;
  m.d_v = p.a_v;
  m.h_v = p.h_v;
  m.w_r = p.w_l;
  m.a_r = p.d_l;
  m.d_r = p.a_l;
  m.h_r = p.h_l;
  return m;
}

PLFunction realize(const TwoMountainParams& p) {
  validate(p);
  std::vector<Breakpoint> pts;
  pts.push_back({Rational(0), Rational(0)});
  pts.push_back({p.a_l, p.h_l});
  pts.push_back({p.w_l, Rational(0)});
  pts.push_back({Rational(p.w_l + p.a_v), p.h_v});
  pts.push_back({Rational(p.w_l + p.w_v), Rational(0)});
  pts.push_back({Rational(p.w_l + p.w_v + p.a_r), p.h_r});
  pts.push_back({Rational(1), Rational(0)});
  return PLFunction(std::move(pts));
}

Intermediates intermediate_sets(const TwoMountainParams& p) {
  validate(p);
  const bool mirrored = p.w_r < p.w_l;
  const TwoMountainParams q = mirrored ? mirror(p) : p;

  Intermediates out;
  out.mirrored = mirrored;
  const Rational w_max = std::max({q.w_l, q.w_v, q.w_r});
  out.S_init = {Rational(0), w_max};
  out.S_mid = {q.w_v, Rational(q.w_l + q.w_v)};
  out.S_fin = {Rational(q.w_v + q.w_r), Rational(1)};
  out.s_star = Rational(q.h_l * q.a_r + 1 - q.w_r);
  out.s_star_upper = Rational(1 - q.h_l * q.d_r);

  const Rational t_lo = std::max(q.w_r, Rational(q.w_l + q.w_v));
  const Rational t_hi = q.w_v + q.w_r;
  if (t_lo < t_hi) out.T = OpenInterval{t_lo, t_hi};

  const Rational j1 = out.s_star - q.a_l;        // right end of the ascent family
  const Rational j2 = out.s_star_upper - q.a_l;  // left end of the descent family
  if (t_lo <= j1) out.T1 = Interval{t_lo, std::min(j1, t_hi)};
  if (j2 <= t_hi) out.T2 = Interval{std::max(j2, t_lo), t_hi};

  const Rational u_lo = std::max(t_lo, j1);
  const Rational u_hi = std::min(t_hi, j2);
  if (u_lo < u_hi) out.uncovered = OpenInterval{u_lo, u_hi};
  return out;
}

FullChordVerdict classify_closed_form(const TwoMountainParams& p) {
  FullChordVerdict v;
  v.intermediates = intermediate_sets(p);
  const TwoMountainParams q = v.intermediates.mirrored ? mirror(p) : p;

  v.cond_i = q.w_l < q.w_r;
  v.cond_ii = q.h_l < 1;
  v.cond_iii = q.h_l * q.a_r + 1 - q.w_r - q.a_l < q.w_v + q.w_r;
  v.cond_iv = 1 - q.h_l * q.d_r - q.a_l > std::max(q.w_r, Rational(q.w_l + q.w_v));
  const bool lacking = v.cond_i && v.cond_ii && v.cond_iii && v.cond_iv;
  v.full = !lacking;
  if (lacking) {
    v.which = v.intermediates.mirrored ? VerdictCase::RightSmaller : VerdictCase::LeftSmaller;
  } else {
    v.which = VerdictCase::Neither;
  }
  return v;
}

namespace {

constexpr long kDenominator = 1000000;
constexpr long kChunkSize = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(chunk + 1)));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Nearest p/10^6 with p clamped to [lo_num, hi_num].
Rational draw_rationalized(std::mt19937_64& rng, long lo_num, long hi_num) {
  const double u = uniform01(rng);
  long p = std::lround(u * static_cast<double>(kDenominator));
  p = std::clamp(p, lo_num, hi_num);
  Rational r(p, kDenominator);
  r.canonicalize();
  return r;
}

}  // namespace

TwoMountainParams sample_params(std::mt19937_64& rng) {
  TwoMountainParams p;
  // Widths: two uniform cuts of [0,1], kept strictly interior and distinct.
  for (;;) {
    Rational u = draw_rationalized(rng, 1, kDenominator - 1);
    Rational v = draw_rationalized(rng, 1, kDenominator - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    p.w_l = u;
    p.w_v = v - u;
    p.w_r = 1 - v;
    break;
  }
  // Ascent fractions in (0,1) per hump.
  const Rational f_l = draw_rationalized(rng, 1, kDenominator - 1);
  const Rational f_v = draw_rationalized(rng, 1, kDenominator - 1);
  const Rational f_r = draw_rationalized(rng, 1, kDenominator - 1);
  p.a_l = f_l * p.w_l;
  p.d_l = p.w_l - p.a_l;
  p.a_v = f_v * p.w_v;
  p.d_v = p.w_v - p.a_v;
  p.a_r = f_r * p.w_r;
  p.d_r = p.w_r - p.a_r;
  // Heights in (0,1], rescaled so the taller mountain has height 1.
  const Rational u_l = draw_rationalized(rng, 1, kDenominator);
  const Rational u_r = draw_rationalized(rng, 1, kDenominator);
  if (u_l >= u_r) {
    p.h_l = 1;
    p.h_r = u_r / u_l;
  } else {
    p.h_r = 1;
    p.h_l = u_l / u_r;
  }
  p.h_v = -1;
  return p;
}

namespace {

// Runs fn(chunk_index, rng) over all chunks covering `samples` draws,
// spreading chunks over workers; per-chunk results land in index order.
template <typename PerChunk>
void run_chunked(long samples, std::uint64_t seed, int threads, PerChunk fn) {
  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = static_cast<int>(std::min<long>(workers, chunks));

  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (long c = w; c < chunks; c += workers) {
        const long begin = c * kChunkSize;
        const long end = std::min(samples, begin + kChunkSize);
        std::mt19937_64 rng = chunk_rng(seed, static_cast<std::uint64_t>(c));
        fn(c, begin, end, rng);
      }
    }));
  }
  for (auto& f : futures) f.get();
}

}  // namespace

MonteCarloResult monte_carlo(long samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<long> full_per_chunk(chunks, 0);
  run_chunked(samples, seed, threads,
              [&](long c, long begin, long end, std::mt19937_64& rng) {
                long full = 0;
                for (long i = begin; i < end; ++i) {
                  if (classify_closed_form(sample_params(rng)).full) ++full;
                }
                full_per_chunk[c] = full;
              });
  long full = 0;
  for (long c : full_per_chunk) full += c;

  MonteCarloResult result;
  result.samples = samples;
  result.seed = seed;
  result.fraction = static_cast<double>(full) / static_cast<double>(samples);
  result.halfwidth =
      1.96 * std::sqrt(result.fraction * (1.0 - result.fraction) / static_cast<double>(samples));
  return result;
}

CrossValidateResult cross_validate(long samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const long chunks = (samples + kChunkSize - 1) / kChunkSize;
  struct ChunkOutcome {
    long disagreements = 0;
    long complement_mismatches = 0;
    std::optional<std::string> first_failure;
  };
  std::vector<ChunkOutcome> outcomes(chunks);
  run_chunked(samples, seed, threads, [&](long c, long begin, long end, std::mt19937_64& rng) {
    ChunkOutcome& out = outcomes[c];
    for (long i = begin; i < end; ++i) {
      const TwoMountainParams p = sample_params(rng);
      const FullChordVerdict verdict = classify_closed_form(p);
      const IntervalSet exact = chord_set(realize(p));
      const bool engine_full = exact.intervals.size() == 1 && exact.intervals[0].lo == 0 &&
                               exact.intervals[0].hi == 1;
      bool ok = verdict.full == engine_full;
      if (!ok) ++out.disagreements;
      if (ok && !verdict.full) {
        const std::vector<OpenInterval> gaps = complement_in_unit(exact);
        const bool match = gaps.size() == 1 && verdict.intermediates.uncovered &&
                           gaps[0] == *verdict.intermediates.uncovered;
        if (!match) {
          ++out.complement_mismatches;
          ok = false;
        }
      }
      if (!ok && !out.first_failure) {
        out.first_failure = "sample " + std::to_string(i) + ": " + to_json(p);
      }
    }
  });

  CrossValidateResult result;
  result.samples = samples;
  result.seed = seed;
  for (const ChunkOutcome& out : outcomes) {
    result.disagreements += out.disagreements;
    result.complement_mismatches += out.complement_mismatches;
    if (!result.first_failure && out.first_failure) result.first_failure = out.first_failure;
  }
  return result;
}

namespace {

nlohmann::ordered_json interval_json(const Interval& iv) {
  return {to_string(iv.lo), to_string(iv.hi)};
}

nlohmann::ordered_json open_interval_json(const OpenInterval& iv) {
  return {to_string(iv.lo), to_string(iv.hi)};
}

Rational field(const nlohmann::json& arr, std::size_t idx) {
  const auto& v = arr.at(idx);
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return rational_from_string(v.dump());
  throw std::invalid_argument("parameters must be rational strings or integers");
}

}  // namespace

TwoMountainParams params_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"w", "a", "d", "h"}) {
    if (!doc.contains(key) || !doc[key].is_array() || doc[key].size() != 3) {
      throw std::invalid_argument(
          "parameter document needs arrays \"w\", \"a\", \"d\", \"h\" of size 3 "
          "(left, valley, right)");
    }
  }
  TwoMountainParams p;
  p.w_l = field(doc["w"], 0);
  p.w_v = field(doc["w"], 1);
  p.w_r = field(doc["w"], 2);
  p.a_l = field(doc["a"], 0);
  p.a_v = field(doc["a"], 1);
  p.a_r = field(doc["a"], 2);
  p.d_l = field(doc["d"], 0);
  p.d_v = field(doc["d"], 1);
  p.d_r = field(doc["d"], 2);
  p.h_l = field(doc["h"], 0);
  p.h_v = field(doc["h"], 1);
  p.h_r = field(doc["h"], 2);
  validate(p);
  return p;
}

std::string to_json(const TwoMountainParams& p) {
  nlohmann::ordered_json doc;
  doc["w"] = {to_string(p.w_l), to_string(p.w_v), to_string(p.w_r)};
  doc["a"] = {to_string(p.a_l), to_string(p.a_v), to_string(p.a_r)};
  doc["d"] = {to_string(p.d_l), to_string(p.d_v), to_string(p.d_r)};
  doc["h"] = {to_string(p.h_l), to_string(p.h_v), to_string(p.h_r)};
  return doc.dump(2);
}

std::string to_json(const FullChordVerdict& v) {
  nlohmann::ordered_json doc;
  doc["full"] = v.full;
  switch (v.which) {
    case VerdictCase::LeftSmaller: doc["case"] = "left-smaller"; break;
    case VerdictCase::RightSmaller: doc["case"] = "right-smaller"; break;
    case VerdictCase::Neither: doc["case"] = "neither"; break;
  }
  doc["conditions"] = {{"i", v.cond_i}, {"ii", v.cond_ii}, {"iii", v.cond_iii}, {"iv", v.cond_iv}};
  const Intermediates& m = v.intermediates;
  doc["mirrored"] = m.mirrored;
  doc["s_star"] = to_string(m.s_star);
  doc["s_star_upper"] = to_string(m.s_star_upper);
  doc["S_init"] = interval_json(m.S_init);
  doc["S_mid"] = interval_json(m.S_mid);
  doc["S_fin"] = interval_json(m.S_fin);
  doc["T"] = m.T ? open_interval_json(*m.T) : nlohmann::ordered_json(nullptr);
  doc["T1"] = m.T1 ? interval_json(*m.T1) : nlohmann::ordered_json(nullptr);
  doc["T2"] = m.T2 ? interval_json(*m.T2) : nlohmann::ordered_json(nullptr);
  doc["uncovered"] = m.uncovered ? open_interval_json(*m.uncovered) : nlohmann::ordered_json(nullptr);
  return doc.dump(2);
}

std::string to_json(const MonteCarloResult& r) {
  nlohmann::ordered_json doc;
  doc["fraction"] = r.fraction;
  doc["halfwidth"] = r.halfwidth;
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["convention"] = r.convention;
  return doc.dump(2);
}

std::string to_json(const CrossValidateResult& r) {
  nlohmann::ordered_json doc;
  doc["samples"] = r.samples;
  doc["seed"] = r.seed;
  doc["disagreements"] = r.disagreements;
  doc["complement_mismatches"] = r.complement_mismatches;
  doc["first_failure"] =
      r.first_failure ? nlohmann::ordered_json(*r.first_failure) : nlohmann::ordered_json(nullptr);
  return doc.dump(2);
}

}  // namespace chords
