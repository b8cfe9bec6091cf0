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

#include "qmc/pauli.hpp"

#include <algorithm>

namespace qmc {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(int n, std::vector<SitePauli> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw std::invalid_argument("PauliString: need n >= 1");
  std::sort(letters_.begin(), letters_.end(),
            [](const SitePauli& a, const SitePauli& b) { return a.site < b.site; });
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (l.site < 0 || l.site >= n) throw std::invalid_argument("PauliString: site out of range");
    if (l.op == Pauli::I) throw std::invalid_argument("PauliString: identity letter not stored");
    if (i > 0 && letters_[i - 1].site == l.site)
      throw std::invalid_argument("PauliString: duplicate site");
  }
}

PauliString PauliString::single(int n, int site, Pauli op) {
  if (op == Pauli::I) return PauliString(n);
  return PauliString(n, {{site, op}});
}

PauliString PauliString::two(int n, int si, Pauli a, int sj, Pauli b) {
  return PauliString(n, {{si, a}, {sj, b}});
}

Pauli PauliString::at(int site) const {
  for (const auto& l : letters_)
    if (l.site == site) return l.op;
  return Pauli::I;
}

std::string PauliString::str() const {
  if (letters_.empty()) return "I";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += '*';
    out += pauli_char(l.op);
    out += std::to_string(l.site);
  }
  return out;
}

std::size_t PauliStringHash::operator()(const PauliString& s) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(s.qubits());
  for (const auto& l : s.letters()) {
    std::size_t v = (static_cast<std::size_t>(l.site) << 2) |
                    static_cast<std::size_t>(l.op);
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

// Single-site product sigma_a * sigma_b = i^phase * sigma_c.
// Cyclic order X -> Y -> Z carries phase exponent 1, reverse carries 3.
void single_multiply(Pauli a, Pauli b, Pauli& out, int& phase_exp) {
  if (a == Pauli::I) { out = b; phase_exp = 0; return; }
  if (b == Pauli::I) { out = a; phase_exp = 0; return; }
  if (a == b) { out = Pauli::I; phase_exp = 0; return; }
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // The remaining letter: indices {1,2,3} sum to 6.
  out = static_cast<Pauli>(6 - ia - ib);
  // XY=iZ, YZ=iX, ZX=iY.
  bool forward = (ib - ia + 3) % 3 == 1;
  phase_exp = forward ? 1 : 3;
}

}  // namespace

PhasedPauli multiply(const PauliString& a, const PauliString& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("multiply: mismatched qubit counts");
  std::vector<SitePauli> out;
  int phase = 0;
  auto ia = a.letters().begin(), ea = a.letters().end();
  auto ib = b.letters().begin(), eb = b.letters().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->site < ib->site)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->site < ia->site) {
      out.push_back(*ib++);
    } else {
      Pauli c;
      int p;
      single_multiply(ia->op, ib->op, c, p);
      phase = (phase + p) % 4;
      if (c != Pauli::I) out.push_back({ia->site, c});
      ++ia;
      ++ib;
    }
  }
  return {phase, PauliString(a.qubits(), std::move(out))};
}

PauliBasis::PauliBasis(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("PauliBasis: need n >= 1");
  if (k < 1 || k > 2) throw std::invalid_argument("PauliBasis: unsupported level k");
  const Pauli ops[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  elements_.push_back(PauliString(n));
  for (int s = 0; s < n; ++s)
    for (Pauli op : ops) elements_.push_back(PauliString::single(n, s, op));
  if (k == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (Pauli a : ops)
          for (Pauli b : ops) elements_.push_back(PauliString::two(n, i, a, j, b));
  }
  index_.reserve(elements_.size());
  for (int idx = 0; idx < size(); ++idx) index_.emplace(elements_[idx], idx);
}

int PauliBasis::index_of(const PauliString& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw std::out_of_range("PauliBasis: string not in basis: " + s.str());
  return it->second;
}

bool PauliBasis::contains(const PauliString& s) const {
  return index_.find(s) != index_.end();
}

int PauliBasis::index_of_single(int site, Pauli op) const {
  return index_of(PauliString::single(n_, site, op));
}

int PauliBasis::index_of_two(int si, Pauli a, int sj, Pauli b) const {
  return index_of(PauliString::two(n_, si, a, sj, b));
}

}  // namespace qmc
