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

#include "qmc/exact_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qmc {

DenseHamiltonian build_hamiltonian(const WeightedGraph& g) {
  g.validate();
  if (g.n > 12) throw std::invalid_argument("build_hamiltonian: n > 12");
  if (g.n < 1) throw std::invalid_argument("build_hamiltonian: empty graph");
  const std::size_t dim = std::size_t{1} << g.n;
  DenseHamiltonian h{g.n, Eigen::MatrixXd::Zero(dim, dim)};
  for (const auto& e : g.edges) {
    const std::size_t mask = (std::size_t{1} << e.i) | (std::size_t{1} << e.j);
    for (std::size_t s = 0; s < dim; ++s) {
      bool bi = (s >> e.i) & 1, bj = (s >> e.j) & 1;
      // I - XX - YY - ZZ vanishes on aligned pairs and acts as
      // 2(|01><01| + |10><10| - |01><10| - |10><01|) on anti-aligned ones.
      if (bi != bj) {
        h.H(s, s) += 2.0 * e.w;
        h.H(s ^ mask, s) -= 2.0 * e.w;
      }
    }
  }
  return h;
}

double max_eigenvalue(const DenseHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h.H, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("max_eigenvalue: eigensolver failed");
  return eig.eigenvalues().maxCoeff();
}

RoundedState make_matching_state(int n, std::vector<std::pair<int, int>> singlets) {
  RoundedState s;
  s.kind = RoundedState::Kind::Matching;
  std::set<int> covered;
  for (auto& [i, j] : singlets) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j)
      throw std::invalid_argument("make_matching_state: bad edge");
    if (!covered.insert(i).second || !covered.insert(j).second)
      throw std::invalid_argument("make_matching_state: edges share a vertex");
  }
  s.singlets = std::move(singlets);
  for (int v = 0; v < n; ++v)
    if (!covered.count(v)) s.unmatched.push_back(v);
  return s;
}

RoundedState make_product_state(std::vector<Eigen::Vector3d> bloch) {
  RoundedState s;
  s.kind = RoundedState::Kind::Product;
  for (const auto& b : bloch)
    if (std::abs(b.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("make_product_state: Bloch vector not unit norm");
  s.bloch = std::move(bloch);
  return s;
}

double state_energy(const RoundedState& s, const WeightedGraph& g) {
  double energy = 0.0;
  if (s.kind == RoundedState::Kind::Matching) {
    if (static_cast<int>(2 * s.singlets.size() + s.unmatched.size()) != g.n)
      throw std::invalid_argument("state_energy: state does not cover the vertex set");
    std::set<std::pair<int, int>> matched(s.singlets.begin(), s.singlets.end());
    for (const auto& e : g.edges) {
      bool in_f = matched.count({e.i, e.j}) > 0;
      energy += e.w * (in_f ? 4.0 : 1.0);
    }
  } else {
    if (static_cast<int>(s.bloch.size()) != g.n)
      throw std::invalid_argument("state_energy: Bloch vector count mismatch");
    for (const auto& e : g.edges)
      energy += e.w * (1.0 - s.bloch[e.i].dot(s.bloch[e.j]));
  }
  return energy;
}

Eigen::MatrixXcd assemble_density(const RoundedState& s, int n) {
  if (n > 8) throw std::invalid_argument("assemble_density: n > 8");
  const std::size_t dim = std::size_t{1} << n;
  if (s.kind == RoundedState::Kind::Matching) {
    if (static_cast<int>(2 * s.singlets.size() + s.unmatched.size()) != n)
      throw std::invalid_argument("assemble_density: vertex set mismatch");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dim, dim);
    rho *= std::pow(0.5, static_cast<double>(s.unmatched.size()));
    for (const auto& [i, j] : s.singlets) {
      Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim, dim);
      const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
      for (std::size_t a = 0; a < dim; ++a) {
        bool bi = (a >> i) & 1, bj = (a >> j) & 1;
        if (bi != bj) {
          proj(a, a) = 0.5;
          proj(a ^ mask, a) = -0.5;
        }
      }
      rho = proj * rho;
    }
    return rho;
  }
  if (static_cast<int>(s.bloch.size()) != n)
    throw std::invalid_argument("assemble_density: Bloch vector count mismatch");
  // Entry (a, b) is the product over vertices of the one-qubit factors
  // (I + b . sigma) / 2 evaluated at the corresponding bits.
  Eigen::MatrixXcd rho(dim, dim);
  std::vector<Eigen::Matrix2cd> factors(n);
  for (int v = 0; v < n; ++v) {
    const auto& b = s.bloch[v];
    factors[v] << std::complex<double>(1.0 + b.z(), 0.0),
        std::complex<double>(b.x(), -b.y()),
        std::complex<double>(b.x(), b.y()),
        std::complex<double>(1.0 - b.z(), 0.0);
    factors[v] *= 0.5;
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      std::complex<double> val = 1.0;
      for (int v = 0; v < n; ++v) val *= factors[v]((a >> v) & 1, (b >> v) & 1);
      rho(a, b) = val;
    }
  return rho;
}

}  // namespace qmc
