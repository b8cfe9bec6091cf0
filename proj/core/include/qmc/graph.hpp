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
#include <string>
#include <vector>

namespace qmc {

struct WeightedEdge {
  int i = 0;
  int j = 0;
  double w = 1.0;
};

/// Simple undirected graph with non-negative edge weights; edges stored
/// with i < j, no duplicates, no loops.
struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;

  double total_weight() const;
  /// Throws std::invalid_argument on loops, duplicates, negative weights,
  /// or endpoints outside [0, n).
  void validate() const;
};

/// Parses the "i j w" edge-list format: one edge per line, 0-indexed,
/// whitespace-separated; '#' starts a comment; optional "n <count>" header.
/// Vertex count is max index + 1 when no header is given.
WeightedGraph parse_graph_file(const std::string& path);
WeightedGraph parse_graph_text(const std::string& text);
std::string write_graph_text(const WeightedGraph& g);

/// Deterministic instance families. For gnp, `param` is the edge
/// probability and weights are uniform (0,1] unless unit_weights is set.
WeightedGraph generate_family(const std::string& name, int n, double param,
                              std::uint64_t seed, bool unit_weights = false);

}  // namespace qmc
