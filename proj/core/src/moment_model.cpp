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

#include "qmc/moment_model.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qmc {

std::string level_name(Level level) {
  switch (level) {
    case Level::L1: return "1";
    case Level::L15: return "1.5";
    case Level::L2: return "2";
  }
  return "?";
}

std::vector<Eigen::MatrixXd> MomentProblem::zero_blocks() const {
  std::vector<Eigen::MatrixXd> out;
  for (int d : block_dims) out.push_back(Eigen::MatrixXd::Zero(d, d));
  return out;
}

std::vector<Eigen::MatrixXd> MomentProblem::identity_blocks() const {
  std::vector<Eigen::MatrixXd> out;
  for (int d : block_dims) out.push_back(Eigen::MatrixXd::Identity(d, d));
  return out;
}

std::string MomentProblem::debug_dump() const {
  std::ostringstream out;
  out << "level=" << level_name(level) << " blocks=[";
  for (std::size_t b = 0; b < block_dims.size(); ++b)
    out << (b ? "," : "") << block_dims[b];
  out << "] classes=" << classes.size() << " fixed=" << fixed.size()
      << " linear=" << linear.size() << " objective_terms=" << objective.size();
  return out.str();
}

namespace {

const Pauli kXYZ[3] = {Pauli::X, Pauli::Y, Pauli::Z};

// Moment-block constraints shared by every level: unit diagonal,
// non-Hermitian products fixed to zero, Hermitian products joined into
// signed classes keyed by the canonical product string.
void add_moment_block_constraints(MomentProblem& p) {
  const PauliBasis& basis = p.basis;
  std::unordered_map<PauliString, EntryClass, PauliStringHash> by_product;
  for (int a = 0; a < basis.size(); ++a) {
    p.fixed.push_back({{0, a, a}, 1.0});
    for (int b = a + 1; b < basis.size(); ++b) {
      PhasedPauli prod = multiply(basis[a], basis[b]);
      if (!prod.hermitian()) {
        p.fixed.push_back({{0, a, b}, 0.0});
      } else {
        by_product[prod.string].members.push_back({{0, a, b}, prod.real_sign()});
      }
    }
  }
  for (auto& [str, cls] : by_product)
    if (cls.members.size() >= 2) p.classes.push_back(std::move(cls));
}

void add_edge_objective(MomentProblem& p) {
  const PauliBasis& basis = p.basis;
  for (const auto& e : p.graph.edges) {
    for (Pauli s : kXYZ) {
      int r, c;
      if (p.level == Level::L2) {
        // Equivalent placement on the (sigma_i sigma_j, I) entries.
        r = 0;
        c = basis.index_of_two(e.i, s, e.j, s);
      } else {
        r = basis.index_of_single(e.i, s);
        c = basis.index_of_single(e.j, s);
      }
      p.objective.push_back({{0, r, c}, -e.w / 2.0});
      p.objective.push_back({{0, c, r}, -e.w / 2.0});
    }
    p.constant_term += e.w;
  }
}

using Mat4c = Eigen::Matrix4cd;

Eigen::Matrix2cd pauli_matrix(Pauli op) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (op) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -1i, 1i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Real 8x8 embedding of a Hermitian 4x4: [[Re, -Im], [Im, Re]].
Eigen::Matrix<double, 8, 8> real_embedding(const Mat4c& k) {
  Eigen::Matrix<double, 8, 8> out;
  out.topLeftCorner(4, 4) = k.real();
  out.bottomRightCorner(4, 4) = k.real();
  out.topRightCorner(4, 4) = -k.imag();
  out.bottomLeftCorner(4, 4) = k.imag();
  return out;
}

// Linking constraint: moment entry (0, mr, mc) equals Tr[(sig (x) eta) rho]
// with rho read from the 8x8 block:  Tr[K rho] = (1/2) Tr[embed(K) R].
LinearConstraint link_constraint(int blk, int mr, int mc, Pauli sig, Pauli eta) {
  LinearConstraint lc;
  if (mr > mc) std::swap(mr, mc);
  lc.terms.push_back({{0, mr, mc}, 1.0});
  Mat4c k;
  const auto s = pauli_matrix(sig), t = pauli_matrix(eta);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = s(r, c) * t;
  const auto emb = real_embedding(k);
  for (int d = 0; d < 8; ++d)
    for (int f = d; f < 8; ++f) {
      double coeff = (d == f) ? -0.5 * emb(d, d) : -emb(d, f);
      if (coeff != 0.0) lc.terms.push_back({{blk, d, f}, coeff});
    }
  lc.rhs = 0.0;
  return lc;
}

}  // namespace

MomentProblem build_lasserre(const WeightedGraph& g, int level) {
  if (level != 1 && level != 2)
    throw std::invalid_argument("build_lasserre: level must be 1 or 2");
  g.validate();
  MomentProblem p{level == 1 ? Level::L1 : Level::L2, g, PauliBasis(g.n, level)};
  p.block_dims = {p.basis.size()};
  add_moment_block_constraints(p);
  add_edge_objective(p);
  return p;
}

MomentProblem build_lasserre_15(const WeightedGraph& g) {
  g.validate();
  MomentProblem p{Level::L15, g, PauliBasis(g.n, 1)};
  p.block_dims = {p.basis.size()};
  add_moment_block_constraints(p);
  add_edge_objective(p);

  // One density block per unordered vertex pair. The objective only reads
  // edges, but marginal physicality of the non-edge pairs is what separates
  // this level from level 1 (e.g. it forbids simultaneous singlets across
  // the leaves of a star).
  int blk = 0;
  for (int i = 0; i < g.n; ++i)
   for (int j = i + 1; j < g.n; ++j) {
    ++blk;
    p.block_dims.push_back(8);

    // Structural shape of the embedding [[A, -B], [B, A]]:
    // equal diagonal 4x4 blocks, antisymmetric off-diagonal block.
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        p.classes.push_back({{{{blk, a, b}, 1}, {{blk, 4 + a, 4 + b}, 1}}});
    for (int a = 0; a < 4; ++a) p.fixed.push_back({{blk, a, 4 + a}, 0.0});
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        p.classes.push_back({{{{blk, a, 4 + b}, 1}, {{blk, b, 4 + a}, -1}}});

    // Unit trace of rho: the embedding carries it twice.
    LinearConstraint trace;
    for (int d = 0; d < 8; ++d) trace.terms.push_back({{blk, d, d}, 1.0});
    trace.rhs = 2.0;
    p.linear.push_back(std::move(trace));

    // Pauli-expectation linkage, two-local and one-local.
    for (Pauli sig : kXYZ)
      for (Pauli eta : kXYZ)
        p.linear.push_back(link_constraint(blk,
                                           p.basis.index_of_single(i, sig),
                                           p.basis.index_of_single(j, eta),
                                           sig, eta));
    for (Pauli sig : kXYZ) {
      p.linear.push_back(
          link_constraint(blk, 0, p.basis.index_of_single(i, sig), sig, Pauli::I));
      p.linear.push_back(
          link_constraint(blk, 0, p.basis.index_of_single(j, sig), Pauli::I, sig));
    }
   }
  return p;
}

double evaluate_objective(const MomentProblem& p,
                          const std::vector<Eigen::MatrixXd>& blocks) {
  if (blocks.size() != p.block_dims.size())
    throw std::invalid_argument("evaluate_objective: block count mismatch");
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].rows() != p.block_dims[b] || blocks[b].cols() != p.block_dims[b])
      throw std::invalid_argument("evaluate_objective: block dimension mismatch");
  double v = p.constant_term;
  for (const auto& [pos, coeff] : p.objective)
    v += coeff * blocks[pos.block](pos.row, pos.col);
  return v;
}

double affine_residual(const MomentProblem& p,
                       const std::vector<Eigen::MatrixXd>& blocks) {
  double r = 0.0;
  for (const auto& [pos, val] : p.fixed)
    r = std::max(r, std::abs(blocks[pos.block](pos.row, pos.col) - val));
  for (const auto& cls : p.classes) {
    double mean = 0.0;
    for (const auto& m : cls.members)
      mean += m.sign * blocks[m.pos.block](m.pos.row, m.pos.col);
    mean /= static_cast<double>(cls.members.size());
    for (const auto& m : cls.members)
      r = std::max(r, std::abs(m.sign * blocks[m.pos.block](m.pos.row, m.pos.col) - mean));
  }
  for (const auto& lc : p.linear) {
    double s = -lc.rhs;
    for (const auto& [pos, coeff] : lc.terms)
      s += coeff * blocks[pos.block](pos.row, pos.col);
    r = std::max(r, std::abs(s));
  }
  return r;
}

}  // namespace qmc
