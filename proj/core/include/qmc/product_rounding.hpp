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
#include <cstdint>
#include <utility>

#include "qmc/exact_oracle.hpp"
#include "qmc/rounding.hpp"
#include "qmc/sdp_solver.hpp"

namespace qmc {

/// Unit vectors u(I), u(X_i), u(Y_i), u(Z_i) factoring the one-local
/// principal submatrix of a moment matrix: row r of U is the vector for
/// basis element r, so U U^T reproduces the submatrix.
struct LocalVectorSystem {
  int n = 0;
  Eigen::MatrixXd U;  // (3n + 1) x l, rows ordered as the level-1 basis

  Eigen::VectorXd identity_vector() const { return U.row(0); }
  Eigen::VectorXd vector(int site, Pauli op) const {
    return U.row(1 + 3 * site + static_cast<int>(op) - 1);
  }
};

/// Gram factorization of the one-local block of a solved moment matrix.
/// Eigenvalues below -1e-6 are a hard error; small negatives are zeroed.
LocalVectorSystem local_vectors(const SdpSolution& sol, int n);

/// One Gaussian projection shared by all vertices; Bloch vector of vertex
/// i is the normalized image of (u(X_i), u(Y_i), u(Z_i)). Deterministic
/// for a given seed.
RoundedState sample_product_state(const LocalVectorSystem& v, std::uint64_t seed);

/// Gauss series 2F1(1/2, 1/2; 5/2; z) for z in [0, 1]; the z = 1 value is
/// the closed form 3 pi / 8.
double hyp2f1_half_half_52(double z);

/// Expected per-edge alignment after Gaussian rounding:
/// F(t) = (8 / (3 pi)) t 2F1(1/2, 1/2; 5/2; t^2), odd, F(1) = 1.
double ratio_F(double t);

/// Minimizes (1 - F(t)) / (1 - 3 t) over [lo, hi]; returns (t*, ratio).
std::pair<double, double> worst_case_ratio(double lo, double hi);

/// Reporting lower bound sum_ij w_ij (1 - F(v_ij)) over the graph's edges.
double expected_product_energy(const EdgeValues& vals, const WeightedGraph& g);

}  // namespace qmc
