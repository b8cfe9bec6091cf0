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

#include "qmc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "qmc/exact_oracle.hpp"

namespace qmc {

bool CertificateReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json CertificateReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name},
                   {"pass", c.pass},
                   {"margin", c.margin},
                   {"witness", c.witness}});
  return arr;
}

std::vector<CheckEntry> check_edge_bounds(const EdgeValues& vals, double tol) {
  std::vector<CheckEntry> out;
  for (int i = 0; i < vals.n; ++i)
    for (int j = i + 1; j < vals.n; ++j) {
      double v = vals.v_at(i, j);
      double margin = std::min(v + 1.0, 1.0 / 3.0 - v);
      CheckEntry e;
      e.name = "edge-bound";
      e.margin = margin;
      e.pass = margin >= -tol;
      e.witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      out.push_back(std::move(e));
    }
  return out;
}

namespace {

// Enumerates simple cycles of exactly `len` vertices in the complete graph,
// canonicalized: smallest vertex first, second vertex below the last.
void for_each_cycle(int n, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cyc;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cyc.size()) == len) {
      if (cyc[1] < cyc.back()) fn(cyc);
      return;
    }
    for (int v = cyc.front() + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cyc.push_back(v);
      self(self);
      cyc.pop_back();
      used[v] = false;
    }
  };
  for (int start = 0; start + len <= n; ++start) {
    cyc = {start};
    std::fill(used.begin(), used.end(), false);
    used[start] = true;
    rec(rec);
  }
}

std::string cycle_witness(const std::vector<int>& cyc) {
  std::ostringstream out;
  out << "cycle (";
  for (std::size_t k = 0; k < cyc.size(); ++k) out << (k ? "," : "") << cyc[k];
  out << ")";
  return out.str();
}

}  // namespace

std::vector<CheckEntry> check_odd_cycles(const EdgeValues& vals, int max_len,
                                         double tol) {
  if (max_len != 3 && max_len != 5 && max_len != 7)
    throw std::invalid_argument("check_odd_cycles: max_len must be 3, 5, or 7");
  if (max_len == 7 && vals.n > 12)
    throw std::invalid_argument("check_odd_cycles: n > 12 with max_len 7");
  std::vector<CheckEntry> out;
  for (int len = 3; len <= max_len; len += 2) {
    if (vals.n < len) break;
    CheckEntry e;
    e.name = "odd-cycle-" + std::to_string(len);
    e.margin = std::numeric_limits<double>::infinity();
    for_each_cycle(vals.n, len, [&](const std::vector<int>& cyc) {
      double sum = 0.0;
      for (int k = 0; k < len; ++k)
        sum += vals.v_at(cyc[k], cyc[(k + 1) % len]);
      double margin = sum - (2.0 - len);
      if (margin < e.margin) {
        e.margin = margin;
        e.witness = cycle_witness(cyc);
      }
    });
    if (std::isinf(e.margin)) continue;  // no cycle of this length
    e.pass = e.margin >= -tol;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CheckEntry> check_star_bounds(const EdgeValues& vals, double tol) {
  std::vector<CheckEntry> out;
  for (int i = 0; i < vals.n; ++i) {
    std::vector<double> xs;
    for (int j = 0; j < vals.n; ++j)
      if (j != i) xs.push_back(vals.x_at(i, j));
    std::sort(xs.rbegin(), xs.rend());
    CheckEntry e;
    e.name = "star-bound";
    e.margin = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sum += 1.0 + 3.0 * xs[k];
      double margin = 2.0 * (k + 2.0) - sum;  // sub-star with k+1 leaves
      if (margin < e.margin) {
        e.margin = margin;
        e.witness = "vertex " + std::to_string(i) + ", top-" +
                    std::to_string(k + 1) + " sub-star";
      }
    }
    e.pass = e.margin >= -tol;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CheckEntry> check_matching_scaling(const EdgeValues& vals,
                                               const LargeEdgeGraph& gl,
                                               double tol) {
  constexpr double kScale = 9.0 / 14.0;
  std::vector<CheckEntry> out;

  std::vector<double> degree_sum(gl.n, 0.0);
  std::vector<int> deg(gl.n, 0);
  for (std::size_t k = 0; k < gl.edges.size(); ++k) {
    const auto& e = gl.edges[k];
    degree_sum[e.i] += kScale * gl.x[k];
    degree_sum[e.j] += kScale * gl.x[k];
    ++deg[e.i];
    ++deg[e.j];
  }
  for (int v = 0; v < gl.n; ++v)
    if (deg[v] > 2)
      throw std::invalid_argument("check_matching_scaling: degree above 2");
  {
    CheckEntry e;
    e.name = "matching-scaling-degree";
    e.margin = std::numeric_limits<double>::infinity();
    e.witness = "no large edges";
    for (int v = 0; v < gl.n; ++v) {
      if (deg[v] == 0) continue;
      double margin = 1.0 - degree_sum[v];
      if (margin < e.margin) {
        e.margin = margin;
        e.witness = "vertex " + std::to_string(v);
      }
    }
    if (std::isinf(e.margin)) e.margin = 1.0;
    e.pass = e.margin >= -tol;
    out.push_back(std::move(e));
  }

  // Odd-set inequalities on odd cycle components of the large-edge graph.
  {
    CheckEntry e;
    e.name = "matching-scaling-odd-set";
    e.margin = std::numeric_limits<double>::infinity();
    e.witness = "no odd cycle components";
    std::vector<std::vector<std::pair<int, double>>> adj(gl.n);
    for (std::size_t k = 0; k < gl.edges.size(); ++k) {
      adj[gl.edges[k].i].push_back({gl.edges[k].j, gl.x[k]});
      adj[gl.edges[k].j].push_back({gl.edges[k].i, gl.x[k]});
    }
    std::vector<bool> seen(gl.n, false);
    for (int start = 0; start < gl.n; ++start) {
      if (seen[start] || deg[start] != 2) continue;
      // walk the component; it is a cycle iff every vertex has degree 2
      std::vector<int> comp;
      double xsum = 0.0;
      bool is_cycle = true;
      int prev = -1, at = start;
      for (;;) {
        seen[at] = true;
        comp.push_back(at);
        if (deg[at] != 2) { is_cycle = false; break; }
        int next = -1;
        for (auto [other, x] : adj[at])
          if (other != prev) { next = other; break; }
        // accumulate the edge at -> next once
        for (auto [other, x] : adj[at])
          if (other == next) { xsum += x; break; }
        prev = at;
        at = next;
        if (at == start) break;
      }
      if (!is_cycle) {
        // path component: mark the rest visited, no odd-set check needed
        continue;
      }
      if (comp.size() % 2 == 0) continue;
      double lhs = kScale * xsum;
      double margin = (comp.size() - 1.0) / 2.0 - lhs;
      if (margin < e.margin) {
        e.margin = margin;
        e.witness = "odd cycle component of size " + std::to_string(comp.size());
      }
    }
    if (std::isinf(e.margin)) e.margin = 1.0;
    e.pass = e.margin >= -tol;
    out.push_back(std::move(e));
  }
  return out;
}

std::pair<double, double> lp_combine(double a1, double b1, double a2, double b2) {
  auto g = [](double a, double b, double s) { return a * s + b * (1.0 - s); };
  auto upper = [&](double s) { return std::max(g(a1, b1, s), g(a2, b2, s)); };
  double best_s = 0.0, best = upper(0.0);
  if (upper(1.0) < best) {
    best_s = 1.0;
    best = upper(1.0);
  }
  double denom = (a1 - b1) - (a2 - b2);
  if (denom != 0.0) {
    double s = (b2 - b1) / denom;
    if (s > 0.0 && s < 1.0 && upper(s) < best) {
      best_s = s;
      best = upper(s);
    }
  }
  return {best_s, best};
}

namespace {

nlohmann::ordered_json graph_json(const WeightedGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({e.i, e.j, e.w});
  return {{"n", g.n}, {"edges", edges}};
}

}  // namespace

nlohmann::ordered_json approximation_report(const WeightedGraph& g,
                                            const PipelineOptions& opts) {
  g.validate();
  nlohmann::ordered_json report;
  report["instance"] = graph_json(g);
  report["config"] = {{"level", 2},      {"d", opts.d},
                      {"seed", opts.seed}, {"samples", opts.samples},
                      {"tol", opts.tol},   {"max_iter", opts.max_iter}};

  MomentProblem problem = build_lasserre(g, 2);
  SolveOptions sopts;
  sopts.tol = opts.tol;
  sopts.max_iter = opts.max_iter;
  sopts.trace_csv_path = opts.trace_csv_path;
  SdpSolution sol = solve(problem, sopts);
  report["sdp"] = {{"level", 2},
                   {"objective", sol.objective},
                   {"residuals",
                    {{"primal", sol.primal_residual}, {"psd", sol.psd_residual}}},
                   {"iterations", sol.iterations}};

  EdgeValues vals = edge_values(sol, problem);
  LargeEdgeGraph gl = threshold(vals, g, opts.d);
  int repaired = repair_degree_bound(gl);

  MatchingResult matching = opts.d <= 2
                                ? max_weight_matching_deg2(gl)
                                : brute_force_matching(gl.n, gl.edges);
  RoundedState rho_f = assemble_matching_state(matching, g.n);
  double energy_f = state_energy(rho_f, g);

  nlohmann::ordered_json l_edges = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < gl.edges.size(); ++k)
    l_edges.push_back({{"i", gl.edges[k].i},
                       {"j", gl.edges[k].j},
                       {"w", gl.edges[k].w},
                       {"x", gl.x[k]}});
  nlohmann::ordered_json f_edges = nlohmann::ordered_json::array();
  nlohmann::ordered_json ystar = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) ystar.push_back(matching.contains(e.i, e.j) ? 1 : 0);
  for (const auto& e : matching.F) f_edges.push_back({e.i, e.j, e.w});
  report["rounding"] = {{"alpha", gl.alpha},
                        {"L", l_edges},
                        {"repaired_edges", repaired},
                        {"matching",
                         {{"edges", f_edges},
                          {"weight", matching.weight},
                          {"y_star", ystar}}},
                        {"energy_matching", energy_f}};

  LocalVectorSystem vecs = local_vectors(sol, g.n);
  double best_ps = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < opts.samples; ++s) {
    RoundedState ps = sample_product_state(vecs, opts.seed + static_cast<std::uint64_t>(s));
    best_ps = std::max(best_ps, state_energy(ps, g));
  }
  if (opts.samples == 0) best_ps = 0.0;
  double expected_ps = expected_product_energy(vals, g);
  report["product"] = {{"expected", expected_ps},
                       {"best_sample", best_ps},
                       {"samples", opts.samples},
                       {"seed", opts.seed}};

  double best_energy = std::max(energy_f, best_ps);
  report["exact"] = nullptr;
  nlohmann::ordered_json ratios = {{"best_energy", best_energy},
                                   {"vs_sdp", sol.objective > 0
                                                  ? best_energy / sol.objective
                                                  : 1.0}};
  if (g.n <= 12) {
    double lam = max_eigenvalue(build_hamiltonian(g));
    report["exact"] = {{"lambda_max", lam}};
    ratios["vs_exact"] = lam > 0 ? best_energy / lam : 1.0;
  }
  report["ratios"] = ratios;

  if (opts.run_checks) {
    CertificateReport cert;
    for (auto& e : check_edge_bounds(vals)) cert.add(std::move(e));
    int max_len = g.n > 12 ? 5 : opts.odd_cycle_max_len;
    for (auto& e : check_odd_cycles(vals, max_len)) cert.add(std::move(e));
    for (auto& e : check_star_bounds(vals)) cert.add(std::move(e));
    for (auto& e : check_matching_scaling(vals, gl)) cert.add(std::move(e));
    report["checks"] = cert.to_json();
    report["checks_pass"] = cert.all_pass();
  }
  return report;
}

}  // namespace qmc
