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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qmc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

struct SitePauli {
  int site;
  Pauli op;
  friend bool operator==(const SitePauli&, const SitePauli&) = default;
};

/// A tensor product of single-qubit Pauli operators, stored sparsely:
/// only the non-identity factors are kept, sorted by site index.
class PauliString {
 public:
  explicit PauliString(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PauliString: need n >= 1");
  }
  PauliString(int n, std::vector<SitePauli> letters);

  static PauliString single(int n, int site, Pauli op);
  static PauliString two(int n, int si, Pauli a, int sj, Pauli b);

  int qubits() const { return n_; }
  int weight() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<SitePauli>& letters() const { return letters_; }
  Pauli at(int site) const;

  /// Rendering like "X1*Y3"; the identity renders as "I".
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_;
  std::vector<SitePauli> letters_;  // sorted by site, no identity entries
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& s) const;
};

/// A Pauli string together with a phase i^phase_exp, phase_exp in {0,1,2,3}.
struct PhasedPauli {
  int phase_exp;
  PauliString string;

  bool hermitian() const { return phase_exp % 2 == 0; }
  /// +1 or -1; only meaningful when hermitian().
  int real_sign() const { return phase_exp == 0 ? 1 : -1; }
};

/// Product of two Pauli strings with exact phase tracking.
/// multiply(a, b) returns (p, s) with the matrix identity a*b = i^p * s.
PhasedPauli multiply(const PauliString& a, const PauliString& b);

/// The ordered set of Pauli strings on n qubits with weight <= k, k in {1,2}.
/// Order: identity first, then weight-1 strings lexicographic by
/// (site, X < Y < Z), then weight-2 strings by (site pair, letter pair).
class PauliBasis {
 public:
  PauliBasis(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const PauliString& operator[](int idx) const { return elements_.at(idx); }
  const std::vector<PauliString>& elements() const { return elements_; }

  /// Inverse of the basis ordering; throws std::out_of_range for strings
  /// not in the basis (e.g. weight above k).
  int index_of(const PauliString& s) const;
  bool contains(const PauliString& s) const;

  /// Index of sigma acting on a single site.
  int index_of_single(int site, Pauli op) const;
  /// Index of sigma_i (x) sigma_j; level-2 bases only.
  int index_of_two(int si, Pauli a, int sj, Pauli b) const;

 private:
  int n_, k_;
  std::vector<PauliString> elements_;
  std::unordered_map<PauliString, int, PauliStringHash> index_;
};

}  // namespace qmc
