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

#include "qmc/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmc {

namespace {

// Strictness margin at the threshold; boundary noise from the first-order
// solver must not admit an edge.
constexpr double kThresholdEps = 1e-9;

}  // namespace

EdgeValues edge_values(const SdpSolution& sol, const MomentProblem& p) {
  if (p.level != Level::L2)
    throw std::invalid_argument("edge_values: need a level-2 solution");
  const int n = p.basis.n();
  EdgeValues vals{n, Eigen::MatrixXd::Zero(n, n)};
  const Eigen::MatrixXd& m = sol.M.at(0);
  const Pauli ops[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.0;
      for (Pauli s : ops) v += m(p.basis.index_of_two(i, s, j, s), 0);
      v /= 3.0;
      vals.v(i, j) = v;
      vals.v(j, i) = v;
    }
  return vals;
}

double alpha_threshold(int d) {
  if (d < 1) throw std::invalid_argument("alpha_threshold: d >= 1 required");
  return (d + 3.0) / (3.0 * (d + 1.0));
}

LargeEdgeGraph threshold(const EdgeValues& vals, const WeightedGraph& g, int d) {
  LargeEdgeGraph gl;
  gl.n = g.n;
  gl.d = d;
  gl.alpha = alpha_threshold(d);
  for (const auto& e : g.edges) {
    double x = vals.x_at(e.i, e.j);
    x = std::clamp(x, -1.0, 1.0);  // snap solver overshoot
    if (x > gl.alpha + kThresholdEps) {
      gl.edges.push_back(e);
      gl.x.push_back(x);
    }
  }
  return gl;
}

namespace {

std::vector<int> degrees(const LargeEdgeGraph& gl) {
  std::vector<int> deg(gl.n, 0);
  for (const auto& e : gl.edges) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

}  // namespace

void assert_degree_bound(const LargeEdgeGraph& gl, double slack) {
  std::vector<int> deg(gl.n, 0);
  for (std::size_t k = 0; k < gl.edges.size(); ++k)
    if (gl.x[k] > gl.alpha + slack) {
      ++deg[gl.edges[k].i];
      ++deg[gl.edges[k].j];
    }
  for (int v = 0; v < gl.n; ++v)
    if (deg[v] > gl.d)
      throw CertificationError("degree bound violated at vertex " +
                               std::to_string(v) + ": " + std::to_string(deg[v]) +
                               " large edges incident, d = " + std::to_string(gl.d));
}

int repair_degree_bound(LargeEdgeGraph& gl) {
  int removed = 0;
  for (;;) {
    auto deg = degrees(gl);
    int bad = -1;
    for (int v = 0; v < gl.n; ++v)
      if (deg[v] > gl.d) { bad = v; break; }
    if (bad < 0) break;
    std::size_t drop = gl.edges.size();
    double lowest = 2.0;
    for (std::size_t k = 0; k < gl.edges.size(); ++k)
      if ((gl.edges[k].i == bad || gl.edges[k].j == bad) && gl.x[k] < lowest) {
        lowest = gl.x[k];
        drop = k;
      }
    gl.repaired_away.push_back(gl.edges[drop]);
    gl.edges.erase(gl.edges.begin() + drop);
    gl.x.erase(gl.x.begin() + drop);
    ++removed;
  }
  return removed;
}

bool MatchingResult::contains(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : F)
    if (e.i == i && e.j == j) return true;
  return false;
}

namespace {

// Max-weight matching on an ordered chain of edges where consecutive edges
// share a vertex. Returns (weight, chosen indices into `chain`).
std::pair<double, std::vector<int>> chain_matching(
    const std::vector<WeightedEdge>& chain) {
  const int m = static_cast<int>(chain.size());
  std::vector<double> dp(m + 1, 0.0);
  std::vector<bool> take(m + 1, false);
  for (int k = 1; k <= m; ++k) {
    double skip = dp[k - 1];
    double pick = (k >= 2 ? dp[k - 2] : 0.0) + chain[k - 1].w;
    take[k] = pick > skip;
    dp[k] = std::max(skip, pick);
  }
  std::vector<int> chosen;
  for (int k = m; k >= 1;) {
    if (take[k]) {
      chosen.push_back(k - 1);
      k -= 2;
    } else {
      --k;
    }
  }
  return {dp[m], chosen};
}

}  // namespace

MatchingResult max_weight_matching_deg2(const LargeEdgeGraph& gl) {
  auto deg = degrees(gl);
  for (int v = 0; v < gl.n; ++v)
    if (deg[v] > 2)
      throw std::invalid_argument(
          "max_weight_matching_deg2: vertex " + std::to_string(v) +
          " has degree " + std::to_string(deg[v]));

  // adjacency as (edge index, other endpoint)
  std::vector<std::vector<std::pair<int, int>>> adj(gl.n);
  for (std::size_t k = 0; k < gl.edges.size(); ++k) {
    adj[gl.edges[k].i].push_back({static_cast<int>(k), gl.edges[k].j});
    adj[gl.edges[k].j].push_back({static_cast<int>(k), gl.edges[k].i});
  }

  MatchingResult result;
  std::vector<bool> edge_seen(gl.edges.size(), false);
  std::vector<bool> vertex_seen(gl.n, false);

  auto walk = [&](int start) {
    // Collect the component's edges in chain order starting at `start`.
    std::vector<int> chain_idx;
    int prev_edge = -1, at = start;
    vertex_seen[at] = true;
    for (;;) {
      int next_edge = -1, next_v = -1;
      for (auto [ek, other] : adj[at])
        if (ek != prev_edge && !edge_seen[ek]) {
          next_edge = ek;
          next_v = other;
          break;
        }
      if (next_edge < 0) break;
      edge_seen[next_edge] = true;
      chain_idx.push_back(next_edge);
      prev_edge = next_edge;
      at = next_v;
      if (at == start) break;  // closed a cycle
      vertex_seen[at] = true;
    }
    return chain_idx;
  };

  auto commit = [&](const std::vector<WeightedEdge>& chain,
                    const std::vector<int>& chosen, double w) {
    result.weight += w;
    for (int k : chosen) result.F.push_back(chain[k]);
  };

  // Paths first (start at degree-<=1 vertices), then leftover cycles.
  for (int pass = 0; pass < 2; ++pass) {
    for (int v = 0; v < gl.n; ++v) {
      if (vertex_seen[v]) continue;
      if (pass == 0 && deg[v] > 1) continue;
      if (deg[v] == 0) {
        vertex_seen[v] = true;
        continue;
      }
      std::vector<int> idx = walk(v);
      std::vector<WeightedEdge> chain;
      for (int k : idx) chain.push_back(gl.edges[k]);
      bool is_cycle = pass == 1;
      if (!is_cycle || chain.size() < 3) {
        // Even a "cycle" of length 2 cannot occur in a simple graph; for
        // paths the plain chain DP is exact.
        auto [w, chosen] = chain_matching(chain);
        commit(chain, chosen, w);
      } else {
        // Cycle: either the closing edge is out (chain without it) or in
        // (forced, neighbors excluded).
        std::vector<WeightedEdge> open(chain.begin(), chain.end() - 1);
        auto [w_out, pick_out] = chain_matching(open);
        std::vector<WeightedEdge> inner(chain.begin() + 1, chain.end() - 2);
        auto [w_in_rest, pick_in] = chain_matching(inner);
        double w_in = chain.back().w + w_in_rest;
        if (w_in > w_out) {
          result.weight += w_in;
          result.F.push_back(chain.back());
          for (int k : pick_in) result.F.push_back(inner[k]);
        } else {
          commit(open, pick_out, w_out);
        }
      }
    }
  }
  for (auto& e : result.F)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(result.F.begin(), result.F.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
  return result;
}

MatchingResult brute_force_matching(int n, const std::vector<WeightedEdge>& edges) {
  if (edges.size() > 20)
    throw std::invalid_argument("brute_force_matching: more than 20 edges");
  MatchingResult best;
  const int m = static_cast<int>(edges.size());
  std::vector<WeightedEdge> current;
  std::vector<bool> used(n, false);
  double current_w = 0.0;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      if (current_w > best.weight) {
        best.weight = current_w;
        best.F = current;
      }
      return;
    }
    self(self, k + 1);
    const auto& e = edges[k];
    if (!used[e.i] && !used[e.j]) {
      used[e.i] = used[e.j] = true;
      current.push_back(e);
      current_w += e.w;
      self(self, k + 1);
      current_w -= e.w;
      current.pop_back();
      used[e.i] = used[e.j] = false;
    }
  };
  rec(rec, 0);
  return best;
}

RoundedState assemble_matching_state(const MatchingResult& m, int n) {
  std::vector<std::pair<int, int>> singlets;
  for (const auto& e : m.F) singlets.push_back({e.i, e.j});
  return make_matching_state(n, singlets);
}

}  // namespace qmc
