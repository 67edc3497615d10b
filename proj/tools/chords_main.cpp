#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chords/chordset.hpp"
#include "chords/constructions.hpp"
#include "chords/family.hpp"
#include "chords/report.hpp"
#include "chords/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text << "\n";
}

int run_compute(const std::string& function_file, const std::string& report_path,
                long oracle_grid) {
  const chords::PLFunction f = chords::parse_plfunction(read_file(function_file));
  const chords::ChordReport report = chords::make_chord_report(f);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(chords::to_json(report));

  long mismatches = 0;
  if (oracle_grid >= 1) {
    long agreements = 0;
    for (long k = 0; k <= oracle_grid; ++k) {
      chords::Rational ell(k, oracle_grid);
      ell.canonicalize();
      const bool via_oracle = chords::chord_exists(f, ell).has_value();
      const bool via_set = chords::contains(report.chord_set, ell);
      if (via_oracle == via_set) {
        ++agreements;
      } else {
        ++mismatches;
      }
    }
    doc["oracle_grid"] = {{"resolution", oracle_grid},
                          {"agreements", agreements},
                          {"mismatches", mismatches}};
  }
  emit(doc.dump(2), report_path);
  if (mismatches > 0) {
    std::cerr << "oracle grid disagrees with the computed chord set\n";
    return 2;
  }
  return 0;
}

int run_verify(const std::string& function_file, const std::string& expect_file) {
  const chords::PLFunction f = chords::parse_plfunction(read_file(function_file));
  const chords::IntervalSet target = chords::interval_set_from_json(read_file(expect_file));
  const chords::VerifyResult r = chords::verify_chordset_equals(f, target);

  nlohmann::ordered_json doc;
  doc["equal"] = r.equal;
  doc["computed"] = nlohmann::ordered_json::parse(chords::to_json(r.computed))["intervals"];
  if (r.equal) {
    doc["discrepancy"] = nullptr;
  } else {
    nlohmann::ordered_json d;
    d["index"] = *r.index;
    d["computed"] = r.computed_interval
                        ? nlohmann::ordered_json({chords::to_string(r.computed_interval->lo),
                                                  chords::to_string(r.computed_interval->hi)})
                        : nlohmann::ordered_json(nullptr);
    d["expected"] = r.expected_interval
                        ? nlohmann::ordered_json({chords::to_string(r.expected_interval->lo),
                                                  chords::to_string(r.expected_interval->hi)})
                        : nlohmann::ordered_json(nullptr);
    d["first_differing_endpoint"] = chords::to_string(*r.first_differing_endpoint);
    doc["discrepancy"] = d;
  }
  std::cout << doc.dump(2) << "\n";
  return r.equal ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact horizontal chord sets of piecewise-linear functions"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "chord set, measure and structural checks");
  std::string compute_function, compute_report;
  long compute_grid = 0;
  compute->add_option("function", compute_function, "function JSON file")->required();
  compute->add_option("--report", compute_report, "write the report here instead of stdout");
  compute->add_option("--oracle-grid", compute_grid,
                      "cross-check the set against the per-length test at every k/N");

  // classify
  auto* classify = app.add_subcommand("classify", "closed-form full-chord verdict for a "
                                                  "two-mountain/one-valley parameter tuple");
  std::string classify_file, classify_out;
  std::string p_wl, p_wv, p_wr, p_al, p_av, p_ar, p_hl, p_hv, p_hr;
  classify->add_option("params", classify_file, "parameter JSON file");
  classify->add_option("--wl", p_wl, "left mountain width");
  classify->add_option("--wv", p_wv, "valley width");
  classify->add_option("--wr", p_wr, "right mountain width");
  classify->add_option("--al", p_al, "left ascent width");
  classify->add_option("--av", p_av, "valley ascent width");
  classify->add_option("--ar", p_ar, "right ascent width");
  classify->add_option("--hl", p_hl, "left mountain height");
  classify->add_option("--hv", p_hv, "valley depth (negative)");
  classify->add_option("--hr", p_hr, "right mountain height");
  classify->add_option("--out", classify_out, "write the verdict here instead of stdout");

  // montecarlo
  auto* montecarlo = app.add_subcommand("montecarlo", "estimate the share of sampled tuples "
                                                      "with the full chord property");
  long mc_samples = 0;
  std::uint64_t mc_seed = 1;
  int mc_threads = 0;
  std::string mc_convention = "default";
  montecarlo->add_option("--samples", mc_samples, "number of samples")->required();
  montecarlo->add_option("--seed", mc_seed, "RNG seed");
  montecarlo->add_option("--convention", mc_convention, "sampling convention (only: default)");
  montecarlo->add_option("--threads", mc_threads, "worker count (0 = auto)");

  // crossvalidate
  auto* crossvalidate = app.add_subcommand(
      "crossvalidate", "compare the closed-form verdict with the exact engine per sample");
  long cv_samples = 0;
  std::uint64_t cv_seed = 7;
  int cv_threads = 0;
  crossvalidate->add_option("--samples", cv_samples, "number of samples")->required();
  crossvalidate->add_option("--seed", cv_seed, "RNG seed");
  crossvalidate->add_option("--threads", cv_threads, "worker count (0 = auto)");

  // construct
  auto* construct = app.add_subcommand("construct", "emit named interval sets and functions");
  long sn_n = 0, snf_n = 0;
  std::vector<std::string> mv_args;
  std::string construct_out;
  construct->add_option("--sn", sn_n, "interval set with n pieces of total length 1/2");
  construct->add_option("--sn-function", snf_n, "function realizing the --sn interval set");
  construct
      ->add_option("--mountain-valley", mv_args,
                   "w1 w2 height depth: mountain left, valley right")
      ->expected(4);
  construct->add_option("--out", construct_out, "write here instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "check a function's chord set against an "
                                              "expected interval set");
  std::string verify_function, verify_expect;
  verify->add_option("function", verify_function, "function JSON file")->required();
  verify->add_option("--expect", verify_expect, "interval set JSON file")->required();

  // plot
  auto* plot = app.add_subcommand("plot", "SVG of the function and its chord set");
  std::string plot_function, plot_out;
  plot->add_option("function", plot_function, "function JSON file")->required();
  plot->add_option("--out", plot_out, "write the SVG here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      return run_compute(compute_function, compute_report, compute_grid);
    }
    if (classify->parsed()) {
      chords::TwoMountainParams p;
      if (!classify_file.empty()) {
        p = chords::params_from_json(read_file(classify_file));
      } else {
        const auto rat = [](const std::string& text, const char* what) {
          if (text.empty()) {
            throw std::invalid_argument(std::string("missing parameter: ") + what);
          }
          return chords::rational_from_string(text);
        };
        p.w_l = rat(p_wl, "--wl");
        p.w_v = rat(p_wv, "--wv");
        p.w_r = rat(p_wr, "--wr");
        p.a_l = rat(p_al, "--al");
        p.a_v = rat(p_av, "--av");
        p.a_r = rat(p_ar, "--ar");
        p.h_l = rat(p_hl, "--hl");
        p.h_v = rat(p_hv, "--hv");
        p.h_r = rat(p_hr, "--hr");
        p.d_l = p.w_l - p.a_l;
        p.d_v = p.w_v - p.a_v;
        p.d_r = p.w_r - p.a_r;
      }
      chords::validate(p);
      emit(chords::to_json(chords::classify_closed_form(p)), classify_out);
      return 0;
    }
    if (montecarlo->parsed()) {
      if (mc_convention != "default") {
        throw std::invalid_argument("unknown sampling convention: " + mc_convention);
      }
      std::cout << chords::to_json(chords::monte_carlo(mc_samples, mc_seed, mc_threads)) << "\n";
      return 0;
    }
    if (crossvalidate->parsed()) {
      const chords::CrossValidateResult r =
          chords::cross_validate(cv_samples, cv_seed, cv_threads);
      std::cout << chords::to_json(r) << "\n";
      return (r.disagreements == 0 && r.complement_mismatches == 0) ? 0 : 2;
    }
    if (construct->parsed()) {
      const bool has_sn = construct->count("--sn") > 0;
      const bool has_snf = construct->count("--sn-function") > 0;
      const bool has_mv = !mv_args.empty();
      if (static_cast<int>(has_sn) + static_cast<int>(has_snf) + static_cast<int>(has_mv) != 1) {
        throw std::invalid_argument(
            "pick exactly one of --sn, --sn-function, --mountain-valley");
      }
      if (has_sn) {
        emit(chords::to_json(chords::sn_intervals(sn_n)), construct_out);
      } else if (has_snf) {
        emit(chords::to_json(chords::sn_realization(snf_n)), construct_out);
      } else {
        const chords::PLFunction f = chords::make_mountain_valley(
            chords::rational_from_string(mv_args[0]), chords::rational_from_string(mv_args[1]),
            chords::rational_from_string(mv_args[2]), chords::rational_from_string(mv_args[3]));
        emit(chords::to_json(f), construct_out);
      }
      return 0;
    }
    if (verify->parsed()) {
      return run_verify(verify_function, verify_expect);
    }
    if (plot->parsed()) {
      const chords::PLFunction f = chords::parse_plfunction(read_file(plot_function));
      emit(chords::render_plot_svg(f, chords::chord_set(f)), plot_out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
