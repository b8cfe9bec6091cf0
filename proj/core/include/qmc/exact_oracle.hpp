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
#include <utility>
#include <vector>

#include "qmc/graph.hpp"

namespace qmc {

/// The 2^n-dimensional operator sum_ij w_ij (I - X_i X_j - Y_i Y_j - Z_i Z_j).
/// Real because Y (x) Y has real entries. Capped at n <= 12.
struct DenseHamiltonian {
  int n = 0;
  Eigen::MatrixXd H;
};

DenseHamiltonian build_hamiltonian(const WeightedGraph& g);

double max_eigenvalue(const DenseHamiltonian& h);

/// A rounded solution: either singlets on a matching with maximally mixed
/// unmatched vertices, or a product state given by unit Bloch vectors.
struct RoundedState {
  enum class Kind { Matching, Product };
  Kind kind = Kind::Matching;
  std::vector<std::pair<int, int>> singlets;  // matching edges
  std::vector<int> unmatched;
  std::vector<Eigen::Vector3d> bloch;  // one unit vector per vertex (Product)
};

RoundedState make_matching_state(int n, std::vector<std::pair<int, int>> singlets);
RoundedState make_product_state(std::vector<Eigen::Vector3d> bloch);

/// Closed-form energy: matchings earn w(1 + 3 [e in F]) per edge, product
/// states earn w(1 - b_i . b_j).
double state_energy(const RoundedState& s, const WeightedGraph& g);

/// Explicit density matrix of a rounded state; test-scale only (n <= 8).
Eigen::MatrixXcd assemble_density(const RoundedState& s, int n);

}  // namespace qmc
