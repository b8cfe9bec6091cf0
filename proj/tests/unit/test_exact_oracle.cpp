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

#include <complex>
#include <random>

#include "qmc/exact_oracle.hpp"

using namespace qmc;

namespace {

double trace_energy(const RoundedState& s, const WeightedGraph& g) {
  Eigen::MatrixXcd rho = assemble_density(s, g.n);
  Eigen::MatrixXcd h = build_hamiltonian(g).H.cast<std::complex<double>>();
  return (h * rho).trace().real();
}

}  // namespace

TEST_SUITE("exact_oracle") {

TEST_CASE("pinned optima of small instances") {
  // Single edge: the singlet scores 4.
  CHECK(max_eigenvalue(build_hamiltonian(parse_graph_text("0 1 1\n"))) ==
        doctest::Approx(4.0).epsilon(1e-12));
  // Triangle: total-spin decomposition gives 6.
  CHECK(max_eigenvalue(build_hamiltonian(generate_family("complete", 3, 0, 0))) ==
        doctest::Approx(6.0).epsilon(1e-12));
  // Stars: 2(n + 1) for n leaves.
  for (int n = 1; n <= 6; ++n)
    CHECK(max_eigenvalue(build_hamiltonian(generate_family("star", n, 0, 0))) ==
          doctest::Approx(2.0 * (n + 1)).epsilon(1e-12));
}

TEST_CASE("hamiltonian entries are symmetric and weight-linear") {
  WeightedGraph g = generate_family("gnp", 6, 0.5, 17);
  DenseHamiltonian h = build_hamiltonian(g);
  CHECK((h.H - h.H.transpose()).cwiseAbs().maxCoeff() == 0.0);
  WeightedGraph doubled = g;
  for (auto& e : doubled.edges) e.w *= 2.0;
  CHECK((build_hamiltonian(doubled).H - 2.0 * h.H).cwiseAbs().maxCoeff() < 1e-12);
  WeightedGraph big;
  big.n = 13;
  CHECK_THROWS(build_hamiltonian(big));
}

TEST_CASE("matching state energy: closed form equals the trace") {
  WeightedGraph path = generate_family("path", 4, 0, 0);
  RoundedState s = make_matching_state(4, {{0, 1}, {2, 3}});
  CHECK(state_energy(s, path) == doctest::Approx(4.0 + 1.0 + 4.0));
  CHECK(trace_energy(s, path) == doctest::Approx(state_energy(s, path)).epsilon(1e-12));

  RoundedState one = make_matching_state(4, {{1, 2}});
  CHECK(state_energy(one, path) == doctest::Approx(1.0 + 4.0 + 1.0));
  CHECK(trace_energy(one, path) == doctest::Approx(state_energy(one, path)).epsilon(1e-12));
}

TEST_CASE("product state energy: closed form equals the trace") {
  WeightedGraph g = parse_graph_text("0 1 1\n1 2 2\n0 2 0.5\n");
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Eigen::Vector3d> bloch;
    for (int v = 0; v < g.n; ++v) {
      Eigen::Vector3d b(gauss(rng), gauss(rng), gauss(rng));
      bloch.push_back(b.normalized());
    }
    RoundedState s = make_product_state(std::move(bloch));
    CHECK(state_energy(s, g) ==
          doctest::Approx(trace_energy(s, g)).epsilon(1e-12));
  }
}

TEST_CASE("state construction is validated") {
  CHECK_THROWS(make_matching_state(4, {{0, 1}, {1, 2}}));  // shared vertex
  CHECK_THROWS(make_matching_state(3, {{0, 3}}));          // out of range
  CHECK_THROWS(make_matching_state(2, {{1, 1}}));          // loop
  CHECK_THROWS(make_product_state({Eigen::Vector3d(0.5, 0, 0)}));
  RoundedState ok = make_matching_state(5, {{3, 1}});
  CHECK(ok.singlets[0] == std::pair{1, 3});
  CHECK(ok.unmatched == std::vector<int>{0, 2, 4});
}

TEST_CASE("density matrices are states") {
  RoundedState s = make_matching_state(3, {{0, 2}});
  Eigen::MatrixXcd rho = assemble_density(s, 3);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
  CHECK(eig.eigenvalues().minCoeff() > -1e-12);
}

}  // TEST_SUITE
