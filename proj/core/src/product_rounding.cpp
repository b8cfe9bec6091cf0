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

#include "qmc/product_rounding.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qmc {

LocalVectorSystem local_vectors(const SdpSolution& sol, int n) {
  const int dim = 3 * n + 1;
  const Eigen::MatrixXd& m = sol.M.at(0);
  if (m.rows() < dim)
    throw std::invalid_argument("local_vectors: moment block smaller than the one-local basis");
  Eigen::MatrixXd s = m.topLeftCorner(dim, dim);
  s = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("local_vectors: eigendecomposition failed");
  if (eig.eigenvalues().minCoeff() < -1e-6)
    throw std::runtime_error("local_vectors: one-local block is far from PSD");
  Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
  LocalVectorSystem v;
  v.n = n;
  v.U = eig.eigenvectors() * lam.cwiseSqrt().asDiagonal();
  return v;
}

RoundedState sample_product_state(const LocalVectorSystem& v, std::uint64_t seed) {
  const Eigen::Index l = v.U.cols();
  std::vector<Eigen::Vector3d> bloch(v.n);
  // Counter-based substreams: the sample for (seed, attempt) never depends
  // on thread scheduling.
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd r(l);
    for (Eigen::Index k = 0; k < l; ++k) r[k] = gauss(rng);
    bool degenerate = false;
    for (int i = 0; i < v.n; ++i) {
      Eigen::Vector3d b(v.vector(i, Pauli::X).dot(r),
                        v.vector(i, Pauli::Y).dot(r),
                        v.vector(i, Pauli::Z).dot(r));
      double norm = b.norm();
      if (norm < 1e-12) {
        degenerate = true;
        break;
      }
      bloch[i] = b / norm;
    }
    if (!degenerate) break;
  }
  return make_product_state(std::move(bloch));
}

double hyp2f1_half_half_52(double z) {
  if (z < 0.0 || z > 1.0)
    throw std::domain_error("hyp2f1_half_half_52: z outside [0,1]");
  if (z == 1.0) return 3.0 * std::numbers::pi / 8.0;  // Gauss closed form
  double term = 1.0, sum = 1.0;
  for (int m = 0; term >= 1e-14; ++m) {
    // Pochhammer ratio for (1/2)_m (1/2)_m / ((5/2)_m m!) advanced one step.
    double a = m + 0.5;
    term *= (a * a) / ((m + 2.5) * (m + 1.0)) * z;
    sum += term;
  }
  return sum;
}

double ratio_F(double t) {
  if (t < -1.0 || t > 1.0) throw std::domain_error("ratio_F: t outside [-1,1]");
  // Gamma(2) = 1, Gamma(3/2) = sqrt(pi)/2, so the prefactor is 8 / (3 pi).
  return 8.0 / (3.0 * std::numbers::pi) * t * hyp2f1_half_half_52(t * t);
}

namespace {

double objective_ratio(double t) { return (1.0 - ratio_F(t)) / (1.0 - 3.0 * t); }

}  // namespace

std::pair<double, double> worst_case_ratio(double lo, double hi) {
  if (!(lo < hi) || lo < -1.0 || hi > 1.0 / 3.0)
    throw std::invalid_argument("worst_case_ratio: need -1 <= lo < hi <= 1/3");
  const int grid = 10000;
  double best_t = lo, best = objective_ratio(lo);
  for (int k = 0; k <= grid; ++k) {
    double t = lo + (hi - lo) * k / grid;
    double r = objective_ratio(t);
    if (r < best) {
      best = r;
      best_t = t;
    }
  }
  // Golden-section refinement around the grid minimum.
  double a = std::max(lo, best_t - (hi - lo) / grid);
  double b = std::min(hi, best_t + (hi - lo) / grid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  while (b - a > 1e-10) {
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    if (objective_ratio(c) < objective_ratio(d))
      b = d;
    else
      a = c;
  }
  double t_star = 0.5 * (a + b);
  double r_star = objective_ratio(t_star);
  if (r_star < best) return {t_star, r_star};
  return {best_t, best};
}

double expected_product_energy(const EdgeValues& vals, const WeightedGraph& g) {
  double e = 0.0;
  for (const auto& edge : g.edges) {
    double v = std::clamp(vals.v_at(edge.i, edge.j), -1.0, 1.0);
    e += edge.w * (1.0 - ratio_F(v));
  }
  return e;
}

}  // namespace qmc
