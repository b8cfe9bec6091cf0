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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmc/graph.hpp"
#include "qmc/product_rounding.hpp"
#include "qmc/rounding.hpp"

namespace qmc {

/// Default slack for certificate checks; looser than the solver tolerance
/// to absorb accumulated rounding in entry averaging.
constexpr double kCertifyTol = 1e-5;

struct CheckEntry {
  std::string name;
  bool pass = true;
  double margin = 0.0;  // signed slack; fail iff margin < -tol
  std::string witness;
};

struct CertificateReport {
  std::vector<CheckEntry> checks;

  bool all_pass() const;
  void add(CheckEntry e) { checks.push_back(std::move(e)); }
  nlohmann::ordered_json to_json() const;
};

/// -1 <= v_e <= 1/3 on every pair; one entry per pair.
std::vector<CheckEntry> check_edge_bounds(const EdgeValues& vals,
                                          double tol = kCertifyTol);

/// sum_C v_e >= 2 - |C| over all odd cycles up to max_len in {3,5,7};
/// one entry per length, witnessing the tightest cycle.
std::vector<CheckEntry> check_odd_cycles(const EdgeValues& vals, int max_len,
                                         double tol = kCertifyTol);

/// Monogamy star bounds: for every vertex and every size-k sub-star of its
/// incident pairs, sum (1 + 3x) <= 2(k + 1); one entry per vertex.
std::vector<CheckEntry> check_star_bounds(const EdgeValues& vals,
                                          double tol = kCertifyTol);

/// (9/14) x lands in the matching polytope of the large-edge graph:
/// per-vertex degree inequalities plus odd-set inequalities on odd cycle
/// components (degree <= 2 makes those exhaustive).
std::vector<CheckEntry> check_matching_scaling(const EdgeValues& vals,
                                               const LargeEdgeGraph& gl,
                                               double tol = kCertifyTol);

/// min over s in [0,1] of max(a1 s + b1 (1-s), a2 s + b2 (1-s));
/// returns (s*, value).
std::pair<double, double> lp_combine(double a1, double b1, double a2, double b2);

struct PipelineOptions {
  int d = 2;
  std::uint64_t seed = 1;
  int samples = 1024;
  double tol = 1e-7;
  int max_iter = 200000;
  int odd_cycle_max_len = 7;
  bool run_checks = true;
  std::string trace_csv_path;
};

/// Runs the full approximate-and-certify pipeline: solve level 2, round to
/// the matching state and the best sampled product state, compare with the
/// SDP value and (n <= 12) the exact optimum, and attach every check.
nlohmann::ordered_json approximation_report(const WeightedGraph& g,
                                            const PipelineOptions& opts = {});

}  // namespace qmc
