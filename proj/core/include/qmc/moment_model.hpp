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
#include <string>
#include <vector>

#include "qmc/graph.hpp"
#include "qmc/pauli.hpp"

namespace qmc {

enum class Level { L1, L15, L2 };

std::string level_name(Level level);

/// Position of an entry inside one PSD block. For constraint bookkeeping
/// positions are canonical with row <= col; the matrix variable is
/// symmetric, so one position stands for both mirror entries.
struct EntryPos {
  int block = 0;
  int row = 0;
  int col = 0;
  friend bool operator==(const EntryPos&, const EntryPos&) = default;
};

/// Entries constrained equal up to sign: sign * value is shared by all
/// members of the class.
struct SignedEntry {
  EntryPos pos;
  int sign = 1;  // +1 or -1
};

struct EntryClass {
  std::vector<SignedEntry> members;
};

/// General affine equality  sum_k coeff_k * M(pos_k) = rhs  (level 1.5
/// density-block linkage; unused at levels 1 and 2).
struct LinearConstraint {
  std::vector<std::pair<EntryPos, double>> terms;
  double rhs = 0.0;
};

/// An SDP instance over symmetric PSD blocks: maximize
/// constant_term + sum objective_k * M(pos_k) subject to fixed entries,
/// signed entry classes, linear constraints, and block-PSD.
struct MomentProblem {
  Level level = Level::L2;
  WeightedGraph graph;
  PauliBasis basis;  // index alphabet of block 0, the moment block
  std::vector<int> block_dims;
  std::vector<std::pair<EntryPos, double>> fixed;
  std::vector<EntryClass> classes;  // only classes with >= 2 members kept
  std::vector<LinearConstraint> linear;
  /// Coefficients listed per matrix position, both symmetric positions
  /// present for off-diagonal terms.
  std::vector<std::pair<EntryPos, double>> objective;
  double constant_term = 0.0;

  std::vector<Eigen::MatrixXd> zero_blocks() const;
  std::vector<Eigen::MatrixXd> identity_blocks() const;
  /// Snapshot-friendly summary: block dims, class/fixed/linear counts.
  std::string debug_dump() const;
};

/// Builds the level-1 or level-2 moment SDP for a weighted graph.
MomentProblem build_lasserre(const WeightedGraph& g, int level);

/// Level 1.5: the level-1 moment block plus one 8x8 real block per edge
/// embedding a two-qubit Hermitian density matrix, with linkage between
/// its Pauli expectations and the moment entries.
MomentProblem build_lasserre_15(const WeightedGraph& g);

double evaluate_objective(const MomentProblem& p,
                          const std::vector<Eigen::MatrixXd>& blocks);

/// Max violation over fixed entries, entry classes, and linear constraints.
double affine_residual(const MomentProblem& p,
                       const std::vector<Eigen::MatrixXd>& blocks);

}  // namespace qmc
