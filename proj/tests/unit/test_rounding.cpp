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

#include <random>

#include "qmc/rounding.hpp"
#include "qmc/sdp_solver.hpp"

using namespace qmc;

namespace {

// Random disjoint union of paths and cycles with random weights.
LargeEdgeGraph random_deg2_graph(std::mt19937_64& rng, int max_edges) {
  std::uniform_real_distribution<double> weight(0.1, 2.0);
  LargeEdgeGraph gl;
  int next = 0;
  while (static_cast<int>(gl.edges.size()) < max_edges) {
    int len = 2 + static_cast<int>(rng() % 5);  // vertices in the segment
    bool close = len >= 3 && (rng() % 2 == 0);
    int first = next;
    for (int k = 0; k + 1 < len; ++k) {
      if (static_cast<int>(gl.edges.size()) == max_edges) break;
      gl.edges.push_back({next, next + 1, weight(rng)});
      ++next;
    }
    ++next;
    if (close && next - first == len &&
        static_cast<int>(gl.edges.size()) < max_edges)
      gl.edges.push_back({first, next - 1, weight(rng)});
  }
  gl.n = next;
  gl.x.assign(gl.edges.size(), 1.0);
  return gl;
}

EdgeValues values_from(int n, const std::vector<std::tuple<int, int, double>>& v) {
  EdgeValues vals{n, Eigen::MatrixXd::Zero(n, n)};
  for (auto [i, j, val] : v) {
    vals.v(i, j) = val;
    vals.v(j, i) = val;
  }
  return vals;
}

}  // namespace

TEST_SUITE("rounding") {

TEST_CASE("threshold constants") {
  CHECK(alpha_threshold(1) == doctest::Approx(2.0 / 3.0));
  CHECK(alpha_threshold(2) == doctest::Approx(5.0 / 9.0));
  CHECK(alpha_threshold(3) == doctest::Approx(0.5));
  CHECK_THROWS(alpha_threshold(0));
}

TEST_CASE("threshold is strict at the boundary") {
  WeightedGraph g = parse_graph_text("0 1 1\n0 2 1\n");
  EdgeValues vals = values_from(3, {{0, 1, -5.0 / 9.0}, {0, 2, -5.0 / 9.0 - 1e-6}});
  LargeEdgeGraph gl = threshold(vals, g, 2);
  REQUIRE(gl.edges.size() == 1);
  CHECK(gl.edges[0].j == 2);
  CHECK(gl.x[0] == doctest::Approx(5.0 / 9.0 + 1e-6));
}

TEST_CASE("edge values come from a level-2 solution") {
  WeightedGraph g = parse_graph_text("0 1 1\n");
  MomentProblem p2 = build_lasserre(g, 2);
  SdpSolution sol = solve(p2, {});
  EdgeValues vals = edge_values(sol, p2);
  CHECK(vals.v_at(0, 1) == doctest::Approx(-1.0).epsilon(1e-5));
  CHECK(vals.x_at(0, 1) == doctest::Approx(1.0).epsilon(1e-5));

  MomentProblem p1 = build_lasserre(g, 1);
  CHECK_THROWS(edge_values(solve(p1, {}), p1));
}

TEST_CASE("degree bound check and repair") {
  WeightedGraph star = generate_family("star", 3, 0, 0);
  EdgeValues vals =
      values_from(4, {{0, 1, -0.9}, {0, 2, -0.8}, {0, 3, -0.95}});
  LargeEdgeGraph gl = threshold(vals, star, 2);
  REQUIRE(gl.edges.size() == 3);
  CHECK_THROWS_AS(assert_degree_bound(gl), CertificationError);
  CHECK(repair_degree_bound(gl) == 1);
  CHECK(gl.edges.size() == 2);
  REQUIRE(gl.repaired_away.size() == 1);
  CHECK(gl.repaired_away[0].j == 2);  // lowest x goes first
  assert_degree_bound(gl);
}

TEST_CASE("chain and cycle matchings are exact on known instances") {
  LargeEdgeGraph path;
  path.n = 4;
  path.edges = {{0, 1, 3.0}, {1, 2, 5.0}, {2, 3, 4.0}};
  path.x.assign(3, 1.0);
  MatchingResult m = max_weight_matching_deg2(path);
  CHECK(m.weight == doctest::Approx(7.0));
  CHECK(m.contains(0, 1));
  CHECK(m.contains(2, 3));
  CHECK_FALSE(m.contains(1, 2));

  LargeEdgeGraph c5;
  c5.n = 5;
  c5.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {0, 4, 1.0}};
  c5.x.assign(5, 1.0);
  CHECK(max_weight_matching_deg2(c5).weight == doctest::Approx(2.0));

  LargeEdgeGraph tri;
  tri.n = 3;
  tri.edges = {{0, 1, 1.0}, {1, 2, 3.0}, {0, 2, 2.0}};
  tri.x.assign(3, 1.0);
  MatchingResult t = max_weight_matching_deg2(tri);
  CHECK(t.weight == doctest::Approx(3.0));
  CHECK(t.contains(1, 2));

  LargeEdgeGraph deg3;
  deg3.n = 4;
  deg3.edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
  deg3.x.assign(3, 1.0);
  CHECK_THROWS(max_weight_matching_deg2(deg3));
}

TEST_CASE("dynamic program agrees with brute force") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    int max_edges = 2 + static_cast<int>(rng() % 15);
    LargeEdgeGraph gl = random_deg2_graph(rng, max_edges);
    MatchingResult fast = max_weight_matching_deg2(gl);
    MatchingResult slow = brute_force_matching(gl.n, gl.edges);
    CHECK(fast.weight == doctest::Approx(slow.weight).epsilon(1e-12));
    // The fast result must itself be a matching over the graph's edges.
    std::vector<int> used(gl.n, 0);
    for (const auto& e : fast.F) {
      ++used[e.i];
      ++used[e.j];
    }
    for (int v = 0; v < gl.n; ++v) CHECK(used[v] <= 1);
  }
}

TEST_CASE("matching state assembly") {
  MatchingResult m;
  m.F = {{0, 1, 1.0}, {3, 4, 1.0}};
  RoundedState s = assemble_matching_state(m, 5);
  CHECK(s.singlets.size() == 2);
  CHECK(s.unmatched == std::vector<int>{2});
}

}  // TEST_SUITE
