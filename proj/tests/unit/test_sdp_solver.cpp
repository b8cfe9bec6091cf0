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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "qmc/exact_oracle.hpp"
#include "qmc/sdp_solver.hpp"

using namespace qmc;

TEST_SUITE("sdp_solver") {

TEST_CASE("project_psd clips the negative eigenspace") {
  Eigen::Matrix2d flip;
  flip << 0, 1, 1, 0;
  Eigen::Matrix2d proj = project_psd(flip);
  CHECK(proj(0, 0) == doctest::Approx(0.5));
  CHECK(proj(0, 1) == doctest::Approx(0.5));
  CHECK(proj(1, 0) == doctest::Approx(0.5));
  CHECK(proj(1, 1) == doctest::Approx(0.5));

  Eigen::Matrix2d psd;
  psd << 2, 1, 1, 2;
  CHECK((project_psd(psd) - psd).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::Matrix2d neg = -psd;
  CHECK(project_psd(neg).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("project_affine enforces fixed entries and signed classes") {
  MomentProblem p{Level::L1, WeightedGraph{}, PauliBasis(1, 1)};
  p.block_dims = {2};
  p.fixed.push_back({{0, 0, 1}, 0.25});
  p.classes.push_back({{{{0, 0, 0}, 1}, {{0, 1, 1}, -1}}});

  std::vector<Eigen::MatrixXd> blocks = {Eigen::MatrixXd(2, 2)};
  blocks[0] << 3.0, 9.0, 9.0, -1.0;
  project_affine(blocks, p);
  // The signed class averages (+3, +1) to 2, so entries become (2, -2).
  CHECK(blocks[0](0, 0) == doctest::Approx(2.0));
  CHECK(blocks[0](1, 1) == doctest::Approx(-2.0));
  CHECK(blocks[0](0, 1) == doctest::Approx(0.25));
  CHECK(affine_residual(p, blocks) < 1e-12);

  // Idempotence.
  std::vector<Eigen::MatrixXd> again = blocks;
  project_affine(again, p);
  CHECK((again[0] - blocks[0]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single edge solves to 4 at every level") {
  WeightedGraph g = parse_graph_text("0 1 1\n");
  SolveOptions opts;
  opts.tol = 1e-8;
  for (auto* build : {+[](const WeightedGraph& gg) { return build_lasserre(gg, 1); },
                      +[](const WeightedGraph& gg) { return build_lasserre_15(gg); },
                      +[](const WeightedGraph& gg) { return build_lasserre(gg, 2); }}) {
    MomentProblem p = build(g);
    SdpSolution sol = solve(p, opts);
    CHECK(sol.objective == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(sol.primal_residual < 1e-6);
    CHECK(sol.psd_residual < 1e-8);
  }
}

TEST_CASE("solution blocks satisfy the constraints they report") {
  WeightedGraph g = parse_graph_text("0 1 1\n1 2 0.5\n");
  MomentProblem p = build_lasserre(g, 2);
  SdpSolution sol = solve(p, {});
  CHECK(affine_residual(p, sol.M) <= sol.primal_residual + 1e-12);
  CHECK(evaluate_objective(p, sol.M) == doctest::Approx(sol.objective));
  // The relaxation upper-bounds the true optimum.
  CHECK(sol.objective >= max_eigenvalue(build_hamiltonian(g)) - 1e-5);
}

TEST_CASE("solves are deterministic") {
  WeightedGraph g = parse_graph_text("0 1 1\n1 2 1\n0 2 1\n");
  MomentProblem p = build_lasserre(g, 2);
  SdpSolution a = solve(p, {});
  SdpSolution b = solve(p, {});
  CHECK(a.objective == b.objective);
  CHECK(a.iterations == b.iterations);
  CHECK((a.M[0] - b.M[0]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("iteration cap raises with the best iterate attached") {
  WeightedGraph g = parse_graph_text("0 1 1\n");
  MomentProblem p = build_lasserre(g, 2);
  SolveOptions opts;
  opts.max_iter = 3;
  try {
    solve(p, opts);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.best.iterations <= 3);
    CHECK(e.best.M.size() == 1);
  }
}

TEST_CASE("iteration trace lands in the CSV") {
  WeightedGraph g = parse_graph_text("0 1 1\n");
  MomentProblem p = build_lasserre(g, 1);
  SolveOptions opts;
  opts.trace_csv_path = "trace_test_tmp.csv";
  solve(p, opts);
  std::ifstream in(opts.trace_csv_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "iteration,objective,primal_residual,dual_residual");
  std::string row;
  CHECK(std::getline(in, row));
  in.close();
  std::remove(opts.trace_csv_path.c_str());
}

}  // TEST_SUITE
