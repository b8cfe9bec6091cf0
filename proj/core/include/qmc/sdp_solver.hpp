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
#include <string>
#include <vector>

#include "qmc/moment_model.hpp"

namespace qmc {

struct SdpSolution {
  std::vector<Eigen::MatrixXd> M;
  double objective = 0.0;
  double primal_residual = 0.0;  // max violation of fixed/class/linear constraints
  double psd_residual = 0.0;     // most negative eigenvalue, clamped at 0
  int iterations = 0;
};

struct SolveOptions {
  double tol = 1e-8;
  int max_iter = 200000;
  double over_relax = 1.6;
  double step = 1.0;  // initial penalty on the unit-Frobenius-scaled objective
  /// Nonempty: write "iteration,objective,primal,dual" per check interval.
  std::string trace_csv_path;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, SdpSolution best)
      : std::runtime_error(what), best(std::move(best)) {}
  SdpSolution best;
};

/// Eigendecomposition with negative eigenvalues clipped to zero.
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& s);

/// Euclidean projection onto the affine feasible subspace of `p`
/// (fixed entries, signed classes, linear constraints), preserving symmetry.
void project_affine(std::vector<Eigen::MatrixXd>& blocks, const MomentProblem& p);

/// Maximizes the objective over the affine slice of the PSD cone by a
/// first-order splitting between the two projections with over-relaxation
/// and residual-balanced step adaptation. Deterministic; throws
/// NonConvergenceError (carrying
/// the best iterate) if the residual target is not met within max_iter.
SdpSolution solve(const MomentProblem& p, const SolveOptions& opts = {});

}  // namespace qmc
