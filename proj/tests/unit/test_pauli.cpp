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

#include <vector>

#include "qmc/pauli.hpp"
#include "test_util.hpp"

using namespace qmc;

namespace {

std::vector<PauliString> all_strings(int n) {
  std::vector<PauliString> out;
  int total = 1;
  for (int q = 0; q < n; ++q) total *= 4;
  for (int code = 0; code < total; ++code) {
    std::vector<SitePauli> letters;
    int c = code;
    for (int q = 0; q < n; ++q) {
      int op = c % 4;
      c /= 4;
      if (op != 0) letters.push_back({q, static_cast<Pauli>(op)});
    }
    out.push_back(PauliString(n, std::move(letters)));
  }
  return out;
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("multiplication matches dense matrices") {
  for (int n = 1; n <= 2; ++n) {
    auto strings = all_strings(n);
    for (const auto& a : strings)
      for (const auto& b : strings) {
        PhasedPauli p = multiply(a, b);
        Eigen::MatrixXcd lhs =
            testutil::string_matrix(a) * testutil::string_matrix(b);
        CHECK((lhs - testutil::phased_matrix(p)).cwiseAbs().maxCoeff() ==
              doctest::Approx(0.0).epsilon(1e-12));
      }
  }
}

TEST_CASE("multiplication is associative") {
  for (int n = 1; n <= 3; ++n) {
    auto strings = all_strings(n);
    for (const auto& a : strings)
      for (const auto& b : strings)
        for (const auto& c : strings) {
          PhasedPauli ab = multiply(a, b);
          PhasedPauli bc = multiply(b, c);
          PhasedPauli left = multiply(ab.string, c);
          PhasedPauli right = multiply(a, bc.string);
          CHECK(left.string == right.string);
          CHECK((left.phase_exp + ab.phase_exp) % 4 ==
                (right.phase_exp + bc.phase_exp) % 4);
        }
  }
}

TEST_CASE("hermitian flag tracks the dense product") {
  for (const auto& a : all_strings(2))
    for (const auto& b : all_strings(2)) {
      PhasedPauli p = multiply(a, b);
      Eigen::MatrixXcd m =
          testutil::string_matrix(a) * testutil::string_matrix(b);
      bool herm = (m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
      CHECK(p.hermitian() == herm);
      if (p.hermitian()) {
        // Hermitian products are real multiples of a string.
        double sign = p.real_sign();
        CHECK((m - sign * testutil::string_matrix(p.string))
                  .cwiseAbs()
                  .maxCoeff() == doctest::Approx(0.0).epsilon(1e-12));
      }
    }
}

TEST_CASE("basis sizes") {
  CHECK(PauliBasis(4, 2).size() == 67);   // 1 + 3n + 9 n(n-1)/2
  CHECK(PauliBasis(5, 1).size() == 16);   // 1 + 3n
  CHECK(PauliBasis(3, 1).size() == 10);
  CHECK(PauliBasis(4, 1).size() == 13);
}

TEST_CASE("basis indexing round-trips") {
  PauliBasis basis(4, 2);
  for (int i = 0; i < basis.size(); ++i) CHECK(basis.index_of(basis[i]) == i);
  CHECK(basis[0].is_identity());
  CHECK(basis.index_of_single(2, Pauli::Y) ==
        basis.index_of(PauliString::single(4, 2, Pauli::Y)));
  CHECK(basis.index_of_two(1, Pauli::X, 3, Pauli::Z) ==
        basis.index_of(PauliString::two(4, 1, Pauli::X, 3, Pauli::Z)));
  CHECK_FALSE(basis.contains(PauliString(5)));
}

TEST_CASE("string validation") {
  CHECK_THROWS(PauliString(2, {{0, Pauli::X}, {0, Pauli::Y}}));
  CHECK_THROWS(PauliString(2, {{5, Pauli::X}}));
  CHECK_THROWS(PauliString(0));
  CHECK(PauliString(3, {{2, Pauli::Z}, {0, Pauli::X}}).letters()[0].site == 0);
}

}  // TEST_SUITE
