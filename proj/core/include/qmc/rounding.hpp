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

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "qmc/exact_oracle.hpp"
#include "qmc/moment_model.hpp"
#include "qmc/sdp_solver.hpp"

namespace qmc {

/// Per-pair averaged two-point moments v_ij, defined for every pair of the
/// complete graph; x_ij = -v_ij.
struct EdgeValues {
  int n = 0;
  Eigen::MatrixXd v;  // symmetric, zero diagonal

  double v_at(int i, int j) const { return v(i, j); }
  double x_at(int i, int j) const { return -v(i, j); }
};

/// Extracts edge values from a solved level-2 moment matrix.
EdgeValues edge_values(const SdpSolution& sol, const MomentProblem& p);

double alpha_threshold(int d);  // (d + 3) / (3 (d + 1))

/// Edges of G whose x value strictly exceeds alpha(d), with their x values.
struct LargeEdgeGraph {
  int n = 0;
  int d = 2;
  double alpha = 5.0 / 9.0;
  std::vector<WeightedEdge> edges;
  std::vector<double> x;  // parallel to edges
  /// Edges dropped by the degree repair rule, empty when none.
  std::vector<WeightedEdge> repaired_away;
};

LargeEdgeGraph threshold(const EdgeValues& vals, const WeightedGraph& g, int d);

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws CertificationError naming the offending star when some vertex
/// exceeds degree d in the large-edge graph.
void assert_degree_bound(const LargeEdgeGraph& gl, double slack = 0.0);

/// Drops the lowest-x edge at vertices whose degree exceeds d; returns the
/// number of edges removed (solver-noise repair, normally zero).
int repair_degree_bound(LargeEdgeGraph& gl);

struct MatchingResult {
  std::vector<WeightedEdge> F;
  double weight = 0.0;
  bool contains(int i, int j) const;
};

/// Maximum-weight matching on a graph of maximum degree <= 2 (disjoint
/// paths and cycles) by dynamic programming.
MatchingResult max_weight_matching_deg2(const LargeEdgeGraph& gl);

/// Exact maximum-weight matching by subset enumeration; |E| <= 20.
MatchingResult brute_force_matching(int n, const std::vector<WeightedEdge>& edges);

RoundedState assemble_matching_state(const MatchingResult& m, int n);

}  // namespace qmc
