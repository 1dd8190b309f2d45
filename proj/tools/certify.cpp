// certify: command-line front end.
//
//   certify paper-claims [--cap N] [--out report.json]
//   certify verify <claims-file.json>
//   certify classify <coxeter-matrix.json>
//   certify helly-fuzz --dim D --trials N --seed S
//   certify tree-exhaustive [--max-vertices 9]
//
// Exit code 0 iff no claim was refuted (and no harness failure).

#include "certify/claims.hpp"
#include "certify/helly.hpp"
#include "certify/io.hpp"
#include "certify/tree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int emit_report(const certify::run::Report& report, const std::string& out_path) {
  nlohmann::json j = certify::io::report_to_json(report);
  std::string text = j.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  std::cout << text;
  return report.any_refuted() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of finite group-theoretic computations"};
  app.require_subcommand(1);

  // paper-claims
  auto* paper = app.add_subcommand("paper-claims", "run the built-in claims registry");
  std::optional<std::uint64_t> cap_override;
  std::string out_path;
  paper->add_option("--cap", cap_override, "override every claim's closure/order cap");
  paper->add_option("--out", out_path, "also write the report to this file");

  // verify
  auto* verify = app.add_subcommand("verify", "run claims from a JSON file");
  std::string claims_path;
  verify->add_option("claims-file", claims_path, "JSON array of claims")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "classify a Coxeter matrix");
  std::string matrix_path;
  classify->add_option("coxeter-matrix", matrix_path, "JSON {rank, m}, 0 = infinite label")
      ->required();

  // helly-fuzz
  auto* helly = app.add_subcommand("helly-fuzz", "randomized Helly-property harness");
  int dim = 2;
  std::uint64_t trials = 1000, seed = 1;
  helly->add_option("--dim", dim, "dimension, 1..3")->required();
  helly->add_option("--trials", trials, "number of random families");
  helly->add_option("--seed", seed, "base seed");

  // tree-exhaustive
  auto* trees = app.add_subcommand("tree-exhaustive",
                                   "fixed-point and subtree-Helly sweeps over all trees");
  int max_vertices = 9;
  trees->add_option("--max-vertices", max_vertices, "cap on tree size (<= 9)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (paper->parsed()) {
      certify::run::RunOptions opts;
      opts.cap_override = cap_override;
      return emit_report(certify::run::run_claims(certify::run::builtin_claims(), opts),
                         out_path);
    }
    if (verify->parsed()) {
      auto claims = certify::io::claims_from_json(load_json_file(claims_path));
      return emit_report(certify::run::run_claims(claims), "");
    }
    if (classify->parsed()) {
      auto m = certify::io::coxeter_from_json(load_json_file(matrix_path));
      std::cout << certify::io::classification_to_json(m).dump(2) << "\n";
      return 0;
    }
    if (helly->parsed()) {
      certify::geo::HellyStats stats = certify::geo::helly_harness(dim, trials, seed);
      std::cout << certify::io::helly_stats_to_json(stats).dump(2) << "\n";
      return stats.violations == 0 ? 0 : 1;
    }
    if (trees->parsed()) {
      certify::tree::TreeSweepStats fixed = certify::tree::tree_exhaustive(max_vertices);
      certify::tree::SubtreeSweepStats helly_sweep =
          certify::tree::subtree_helly_exhaustive(std::min(max_vertices, 7));
      nlohmann::json j = certify::io::tree_stats_to_json(fixed);
      j["subtree_helly"] = nlohmann::json{{"trees", helly_sweep.trees},
                                          {"families", helly_sweep.families},
                                          {"failures", helly_sweep.failures}};
      std::cout << j.dump(2) << "\n";
      return (fixed.failures == 0 && helly_sweep.failures == 0) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
