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

#include <cmath>
#include <numbers>

#include "qmc/product_rounding.hpp"

using namespace qmc;

namespace {

// Vector system for two sites whose nine cross inner products are v on the
// diagonal axes and 0 off them; exercises the rounding distribution at a
// prescribed correlation.
LocalVectorSystem isotropic_pair(double v) {
  LocalVectorSystem sys;
  sys.n = 2;
  sys.U = Eigen::MatrixXd::Zero(7, 7);
  sys.U(0, 0) = 1.0;  // identity direction
  double ortho = std::sqrt(1.0 - v * v);
  for (int axis = 0; axis < 3; ++axis) {
    sys.U(1 + axis, 1 + axis) = 1.0;
    sys.U(4 + axis, 1 + axis) = v;
    sys.U(4 + axis, 4 + axis) = ortho;
  }
  return sys;
}

double empirical_correlation(double v, int samples) {
  LocalVectorSystem sys = isotropic_pair(v);
  double acc = 0.0;
  for (int s = 0; s < samples; ++s) {
    RoundedState st = sample_product_state(sys, 1000 + s);
    acc += st.bloch[0].dot(st.bloch[1]);
  }
  return acc / samples;
}

}  // namespace

TEST_SUITE("product_rounding") {

TEST_CASE("hypergeometric series endpoints") {
  CHECK(hyp2f1_half_half_52(0.0) == 1.0);
  CHECK(hyp2f1_half_half_52(1.0) ==
        doctest::Approx(3.0 * std::numbers::pi / 8.0).epsilon(1e-13));
  CHECK_THROWS(hyp2f1_half_half_52(-0.1));
  CHECK_THROWS(hyp2f1_half_half_52(1.1));
}

TEST_CASE("rounding curve values") {
  CHECK(ratio_F(0.0) == 0.0);
  CHECK(ratio_F(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ratio_F(-1.0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ratio_F(0.5) == -ratio_F(-0.5));
  CHECK(ratio_F(5.0 / 9.0) == doctest::Approx(0.48779).epsilon(1e-4));
  // Matching-edge guarantee constant.
  CHECK(3.0 / 8.0 * (1.0 - ratio_F(-5.0 / 9.0)) ==
        doctest::Approx(0.557931).epsilon(1e-5));
}

TEST_CASE("worst-case ratio over the feasible interval") {
  auto [t, r] = worst_case_ratio(-1.0, 1.0 / 3.0);
  CHECK(r == doctest::Approx(0.498766).epsilon(1e-4));
  CHECK(t > -1.0);
  CHECK(t < 1.0 / 3.0);
  // The reported minimizer is consistent with its value.
  CHECK((1.0 - ratio_F(t)) / (1.0 - 3.0 * t) == doctest::Approx(r).epsilon(1e-9));
  CHECK_THROWS(worst_case_ratio(0.5, 0.6));
}

TEST_CASE("sampled correlations follow the curve") {
  const int samples = 20000;
  for (double v : {-1.0, -5.0 / 9.0, 0.0, 1.0 / 3.0}) {
    double emp = empirical_correlation(v, v == -1.0 ? 100 : samples);
    double tol = v == -1.0 ? 1e-9 : 0.02;
    CHECK(std::abs(emp - ratio_F(v)) < tol);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  LocalVectorSystem sys = isotropic_pair(-0.4);
  RoundedState a = sample_product_state(sys, 7);
  RoundedState b = sample_product_state(sys, 7);
  RoundedState c = sample_product_state(sys, 8);
  CHECK((a.bloch[0] - b.bloch[0]).norm() == 0.0);
  CHECK((a.bloch[1] - b.bloch[1]).norm() == 0.0);
  CHECK((a.bloch[0] - c.bloch[0]).norm() > 0.0);
}

TEST_CASE("expected energy accumulates the curve over edges") {
  WeightedGraph g = parse_graph_text("0 1 2.0\n1 2 1.0\n");
  EdgeValues vals{3, Eigen::MatrixXd::Zero(3, 3)};
  vals.v(0, 1) = vals.v(1, 0) = -1.0;
  vals.v(1, 2) = vals.v(2, 1) = 0.25;
  double expect = 2.0 * (1.0 - ratio_F(-1.0)) + 1.0 * (1.0 - ratio_F(0.25));
  CHECK(expected_product_energy(vals, g) == doctest::Approx(expect).epsilon(1e-12));
}

}  // TEST_SUITE
