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

#include "qmc/sdp_solver.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <numeric>

namespace qmc {

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("project_psd: not square");
  Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("project_psd: eigendecomposition failed");
  // Eigenvalues are ascending; rebuild from whichever side is thinner.
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const int d = static_cast<int>(lam.size());
  int neg = 0;
  while (neg < d && lam[neg] < 0.0) ++neg;
  const int pos = d - neg;
  if (pos <= neg) {
    if (pos == 0) return Eigen::MatrixXd::Zero(d, d);
    Eigen::MatrixXd v = eig.eigenvectors().rightCols(pos);
    return v * lam.tail(pos).asDiagonal() * v.transpose();
  }
  if (neg == 0) return sym;
  Eigen::MatrixXd v = eig.eigenvectors().leftCols(neg);
  sym.noalias() -= v * lam.head(neg).asDiagonal() * v.transpose();
  return sym;
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Euclidean projection onto the affine constraint set, in one of two modes.
// When there are no general linear constraints the fixed entries and signed
// classes have disjoint supports, so the projection is closed-form. With
// linear constraints (level 1.5) supports overlap and the projection is a
// precomputed least-squares step in scaled upper-triangle coordinates.
class AffineProjector {
 public:
  explicit AffineProjector(const MomentProblem& p) : p_(p) {
    if (p.linear.empty()) return;
    offsets_.resize(p.block_dims.size());
    int total = 0;
    for (std::size_t b = 0; b < p.block_dims.size(); ++b) {
      offsets_[b] = total;
      total += p.block_dims[b] * (p.block_dims[b] + 1) / 2;
    }
    dim_ = total;

    struct Coeff { int row, col; double v; };
    std::vector<Coeff> entries;
    std::vector<double> rhs;
    int row = 0;
    auto scale = [&](const EntryPos& pos) {
      return pos.row == pos.col ? 1.0 : kSqrt2;
    };
    for (const auto& [pos, val] : p.fixed) {
      entries.push_back({row, coord(pos), 1.0});
      rhs.push_back(val * scale(pos));
      ++row;
    }
    for (const auto& cls : p.classes) {
      const auto& m0 = cls.members.front();
      for (std::size_t m = 1; m < cls.members.size(); ++m) {
        const auto& mk = cls.members[m];
        entries.push_back({row, coord(m0.pos), m0.sign / scale(m0.pos)});
        entries.push_back({row, coord(mk.pos), -mk.sign / scale(mk.pos)});
        rhs.push_back(0.0);
        ++row;
      }
    }
    for (const auto& lc : p.linear) {
      for (const auto& [pos, coeff] : lc.terms)
        entries.push_back({row, coord(pos), coeff / scale(pos)});
      rhs.push_back(lc.rhs);
      ++row;
    }
    a_ = Eigen::MatrixXd::Zero(row, dim_);
    for (const auto& t : entries) a_(t.row, t.col) += t.v;
    b_ = Eigen::Map<Eigen::VectorXd>(rhs.data(), row);
    cod_.compute(a_);
  }

  void apply(std::vector<Eigen::MatrixXd>& blocks) const {
    if (p_.linear.empty()) {
      for (const auto& [pos, val] : p_.fixed) {
        blocks[pos.block](pos.row, pos.col) = val;
        blocks[pos.block](pos.col, pos.row) = val;
      }
      for (const auto& cls : p_.classes) {
        double mean = 0.0;
        for (const auto& m : cls.members)
          mean += m.sign * blocks[m.pos.block](m.pos.row, m.pos.col);
        mean /= static_cast<double>(cls.members.size());
        for (const auto& m : cls.members) {
          blocks[m.pos.block](m.pos.row, m.pos.col) = m.sign * mean;
          blocks[m.pos.block](m.pos.col, m.pos.row) = m.sign * mean;
        }
      }
      return;
    }
    Eigen::VectorXd x(dim_);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int idx = offsets_[b];
      for (int r = 0; r < blocks[b].rows(); ++r)
        for (int c = r; c < blocks[b].cols(); ++c)
          x[idx++] = blocks[b](r, c) * (r == c ? 1.0 : kSqrt2);
    }
    Eigen::VectorXd resid = a_ * x - b_;
    x -= cod_.solve(resid);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      int idx = offsets_[b];
      for (int r = 0; r < blocks[b].rows(); ++r)
        for (int c = r; c < blocks[b].cols(); ++c) {
          double v = x[idx++] / (r == c ? 1.0 : kSqrt2);
          blocks[b](r, c) = v;
          blocks[b](c, r) = v;
        }
    }
  }

 private:
  int coord(const EntryPos& pos) const {
    int r = pos.row, c = pos.col;
    if (r > c) std::swap(r, c);
    int d = p_.block_dims[pos.block];
    // Row-major upper triangle: row r starts at r*d - r*(r-1)/2 - r.
    return offsets_[pos.block] + r * d - r * (r - 1) / 2 + (c - r);
  }

  const MomentProblem& p_;
  std::vector<int> offsets_;
  int dim_ = 0;
  Eigen::MatrixXd a_;
  Eigen::VectorXd b_;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_;
};

double frob_norm(const std::vector<Eigen::MatrixXd>& blocks) {
  double s = 0.0;
  for (const auto& m : blocks) s += m.squaredNorm();
  return std::sqrt(s);
}

double max_abs_diff(const std::vector<Eigen::MatrixXd>& a,
                    const std::vector<Eigen::MatrixXd>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return m;
}

}  // namespace

void project_affine(std::vector<Eigen::MatrixXd>& blocks, const MomentProblem& p) {
  AffineProjector(p).apply(blocks);
}

SdpSolution solve(const MomentProblem& p, const SolveOptions& opts) {
  if (opts.tol <= 0) throw std::invalid_argument("solve: tol must be positive");
  AffineProjector proj(p);

  // Objective gradient, scaled to unit Frobenius norm so the fixed step
  // behaves uniformly across graphs.
  auto c = p.zero_blocks();
  for (const auto& [pos, coeff] : p.objective) c[pos.block](pos.row, pos.col) += coeff;
  double cnorm = frob_norm(c);
  if (cnorm > 0)
    for (auto& m : c) m /= cnorm;

  double rho = opts.step;
  const double alpha = opts.over_relax;

  auto z = p.identity_blocks();
  auto u = p.zero_blocks();
  auto x = p.zero_blocks();
  auto zprev = z;

  std::ofstream trace;
  if (!opts.trace_csv_path.empty()) {
    trace.open(opts.trace_csv_path);
    trace << "iteration,objective,primal_residual,dual_residual\n";
  }

  const int check_every = 20;
  int iter = 0;
  double rinf = 1.0, sinf = 1.0;
  for (iter = 1; iter <= opts.max_iter; ++iter) {
    // x-update: affine projection of z - u shifted along the objective.
    for (std::size_t b = 0; b < x.size(); ++b)
      x[b] = z[b] - u[b] + c[b] * (1.0 / rho);
    proj.apply(x);
    zprev = z;
    for (std::size_t b = 0; b < z.size(); ++b) {
      Eigen::MatrixXd xh = alpha * x[b] + (1.0 - alpha) * z[b];
      z[b] = xh + u[b];
      u[b] = z[b];
    }
    for (std::size_t b = 0; b < z.size(); ++b) {
      z[b] = project_psd(z[b]);
      u[b] -= z[b];
    }
    if (iter % check_every == 0 || iter == opts.max_iter) {
      rinf = max_abs_diff(x, z);
      sinf = max_abs_diff(z, zprev);
      if (trace.is_open())
        trace << iter << "," << evaluate_objective(p, z) << "," << rinf << ","
              << sinf << "\n";
      if (rinf <= opts.tol && sinf <= opts.tol) break;
      // Residual balancing: nudge the penalty toward the lagging residual.
      // u is the scaled dual, so it rescales inversely with rho.
      if (rinf > 10.0 * sinf && rho < 1e4) {
        rho *= 2.0;
        for (auto& m : u) m *= 0.5;
      } else if (sinf > 10.0 * rinf && rho > 1e-4) {
        rho *= 0.5;
        for (auto& m : u) m *= 2.0;
      }
    }
  }

  SdpSolution sol;
  sol.M = z;
  sol.objective = evaluate_objective(p, z);
  sol.primal_residual = std::max(affine_residual(p, z), rinf);
  double psd = 0.0;
  for (const auto& m : z) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
    psd = std::max(psd, std::max(0.0, -eig.eigenvalues().minCoeff()));
  }
  sol.psd_residual = psd;
  sol.iterations = std::min(iter, opts.max_iter);

  if (rinf > opts.tol || sinf > opts.tol)
    throw NonConvergenceError(
        "sdp solve: residual target not met after " +
            std::to_string(opts.max_iter) + " iterations (primal " +
            std::to_string(rinf) + ", dual " + std::to_string(sinf) + ")",
        std::move(sol));
  return sol;
}

}  // namespace qmc
