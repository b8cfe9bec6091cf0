// Copyright 2026 The qmc-lasserre Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "qmc/certify.hpp"
#include "qmc/exact_oracle.hpp"
#include "qmc/graph.hpp"
#include "qmc/moment_model.hpp"
#include "qmc/sdp_solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitCertification = 4;

struct CommonArgs {
  std::string input;
  std::string out;
  std::string family;
  std::string level = "2";
  int n = 5;
  double p = 0.5;
  bool unit_weights = false;
  int d = 2;
  double tol = 1e-8;
  int max_iter = 200000;
  std::uint64_t seed = 1;
  int samples = 1024;
  std::string trace;
  int count = 1;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_level = true) {
  cmd->add_option("input", a.input, "graph file (edge list: 'i j w')");
  cmd->add_option("--family", a.family,
                  "generate instance: star|path|cycle|complete|gnp");
  cmd->add_option("--n", a.n, "family size parameter");
  cmd->add_option("--p", a.p, "gnp edge probability");
  cmd->add_flag("--unit-weights", a.unit_weights, "gnp: unit weights");
  if (with_level)
    cmd->add_option("--level", a.level, "relaxation level: 1, 1.5, or 2");
  cmd->add_option("--d", a.d, "degree parameter for thresholding");
  cmd->add_option("--tol", a.tol, "solver residual tolerance");
  cmd->add_option("--max-iter", a.max_iter, "solver iteration cap");
  cmd->add_option("--seed", a.seed, "random seed");
  cmd->add_option("--samples", a.samples, "product-state samples");
  cmd->add_option("--out", a.out, "output report path (default stdout)");
  cmd->add_option("--trace", a.trace, "solver iteration-trace CSV path");
}

qmc::WeightedGraph load_graph(const CommonArgs& a) {
  if (!a.family.empty())
    return qmc::generate_family(a.family, a.n, a.p, a.seed, a.unit_weights);
  if (a.input.empty())
    throw std::invalid_argument("no input graph: give a file or --family");
  return qmc::parse_graph_file(a.input);
}

// Reports are written atomically: full content to a temp file, then rename.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move report into place: " + path);
}

qmc::MomentProblem build_level(const qmc::WeightedGraph& g, const std::string& level) {
  if (level == "1") return qmc::build_lasserre(g, 1);
  if (level == "1.5") return qmc::build_lasserre_15(g);
  if (level == "2") return qmc::build_lasserre(g, 2);
  throw std::invalid_argument("unknown level '" + level + "'");
}

int cmd_solve(const CommonArgs& a) {
  qmc::WeightedGraph g = load_graph(a);
  qmc::MomentProblem p = build_level(g, a.level);
  qmc::SolveOptions opts;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  opts.trace_csv_path = a.trace;
  qmc::SdpSolution sol = qmc::solve(p, opts);
  nlohmann::ordered_json report;
  report["instance"] = {{"n", g.n},
                        {"edges", g.edges.size()},
                        {"total_weight", g.total_weight()}};
  report["problem"] = p.debug_dump();
  report["sdp"] = {{"level", a.level},
                   {"objective", sol.objective},
                   {"residuals",
                    {{"primal", sol.primal_residual}, {"psd", sol.psd_residual}}},
                   {"iterations", sol.iterations}};
  emit(a.out, report.dump(2));
  return kExitOk;
}

int cmd_pipeline(const CommonArgs& a, bool certify) {
  if (a.level != "2")
    throw std::invalid_argument("rounding requires --level 2");
  qmc::WeightedGraph g = load_graph(a);
  qmc::PipelineOptions opts;
  opts.d = a.d;
  opts.seed = a.seed;
  opts.samples = a.samples;
  opts.tol = a.tol;
  opts.max_iter = a.max_iter;
  opts.run_checks = certify;
  opts.trace_csv_path = a.trace;
  nlohmann::ordered_json report = qmc::approximation_report(g, opts);
  emit(a.out, report.dump(2));
  if (certify && !report.value("checks_pass", true)) return kExitCertification;
  return kExitOk;
}

int cmd_exact(const CommonArgs& a) {
  qmc::WeightedGraph g = load_graph(a);
  if (g.n > 12) throw std::invalid_argument("exact: n > 12 unsupported");
  double lam = qmc::max_eigenvalue(qmc::build_hamiltonian(g));
  nlohmann::ordered_json report;
  report["instance"] = {{"n", g.n}, {"edges", g.edges.size()}};
  report["exact"] = {{"lambda_max", lam}};
  emit(a.out, report.dump(2));
  return kExitOk;
}

int cmd_bench(const CommonArgs& a) {
  if (a.family.empty())
    throw std::invalid_argument("bench: --family is required");
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "instance,n,edges,sdp,best_energy,ratio_vs_sdp,ratio_vs_exact\n";
  double min_ratio = 1.0;
  for (int k = 0; k < a.count; ++k) {
    std::uint64_t seed = a.seed + static_cast<std::uint64_t>(k);
    qmc::WeightedGraph g =
        qmc::generate_family(a.family, a.n, a.p, seed, a.unit_weights);
    if (g.edges.empty()) continue;
    qmc::PipelineOptions opts;
    opts.d = a.d;
    opts.seed = seed;
    opts.samples = a.samples;
    opts.tol = a.tol;
    opts.max_iter = a.max_iter;
    opts.run_checks = false;
    nlohmann::ordered_json r = qmc::approximation_report(g, opts);
    double vs_sdp = r["ratios"]["vs_sdp"].get<double>();
    double vs_exact = r["ratios"].contains("vs_exact")
                          ? r["ratios"]["vs_exact"].get<double>()
                          : -1.0;
    min_ratio = std::min(min_ratio, vs_sdp);
    rows.push_back({{"instance", a.family + "-" + std::to_string(k)},
                    {"n", g.n},
                    {"edges", g.edges.size()},
                    {"sdp", r["sdp"]["objective"]},
                    {"best_energy", r["ratios"]["best_energy"]},
                    {"ratio_vs_sdp", vs_sdp},
                    {"ratio_vs_exact", vs_exact}});
    csv << a.family << "-" << k << "," << g.n << "," << g.edges.size() << ","
        << r["sdp"]["objective"] << "," << r["ratios"]["best_energy"] << ","
        << vs_sdp << "," << vs_exact << "\n";
  }
  nlohmann::ordered_json report = {{"family", a.family},
                                   {"count", a.count},
                                   {"rows", rows},
                                   {"min_ratio_vs_sdp", min_ratio}};
  emit(a.out, report.dump(2));
  if (!a.out.empty()) emit(a.out + ".csv", csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Max Cut: moment-SDP relaxations, rounding, certification"};
  app.require_subcommand(1);

  CommonArgs a;
  auto* solve = app.add_subcommand("solve", "build and solve a relaxation");
  add_common(solve, a);
  auto* round = app.add_subcommand("round", "solve level 2 and round");
  add_common(round, a);
  auto* exact = app.add_subcommand("exact", "exact optimum by diagonalization");
  add_common(exact, a, false);
  auto* certify = app.add_subcommand("certify", "round and run every check");
  add_common(certify, a);
  auto* bench = app.add_subcommand("bench", "pipeline over a family, ratio table");
  add_common(bench, a);
  bench->add_option("--count", a.count, "number of instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(a);
    if (round->parsed()) return cmd_pipeline(a, false);
    if (certify->parsed()) return cmd_pipeline(a, true);
    if (exact->parsed()) return cmd_exact(a);
    if (bench->parsed()) return cmd_bench(a);
  } catch (const qmc::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const qmc::CertificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
