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

#include "qmc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmc {

double WeightedGraph::total_weight() const {
  double t = 0.0;
  for (const auto& e : edges) t += e.w;
  return t;
}

void WeightedGraph::validate() const {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n)
      throw std::invalid_argument("graph: vertex index out of range");
    if (e.i == e.j) throw std::invalid_argument("graph: loop edge");
    if (e.i >= e.j) throw std::invalid_argument("graph: edges must have i < j");
    if (e.w < 0) throw std::invalid_argument("graph: negative weight");
    if (!seen.insert({e.i, e.j}).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
}

WeightedGraph parse_graph_text(const std::string& text) {
  WeightedGraph g;
  bool have_header = false;
  int max_index = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("graph parse error at line " +
                                std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "n") {
      int count;
      if (!(ls >> count) || count < 0) fail("bad vertex-count header");
      if (have_header) fail("duplicate header");
      have_header = true;
      g.n = count;
      continue;
    }
    int i, j;
    double w;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      fail("malformed vertex index '" + first + "'");
      return g;  // unreachable
    }
    if (!(ls >> j >> w)) fail("malformed edge line");
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    if (i == j) fail("loop edge");
    if (i < 0 || j < 0) fail("negative vertex index");
    if (w < 0) fail("negative weight");
    if (i > j) std::swap(i, j);
    for (const auto& e : g.edges)
      if (e.i == i && e.j == j) fail("duplicate edge");
    g.edges.push_back({i, j, w});
    max_index = std::max(max_index, j);
  }
  if (!have_header) g.n = max_index + 1;
  lineno = 0;
  if (have_header && max_index >= g.n)
    throw std::invalid_argument("graph parse error: edge index exceeds header count");
  g.validate();
  return g;
}

WeightedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph_text(ss.str());
}

std::string write_graph_text(const WeightedGraph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  out.precision(17);
  for (const auto& e : g.edges) out << e.i << " " << e.j << " " << e.w << "\n";
  return out.str();
}

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WeightedGraph generate_family(const std::string& name, int n, double param,
                              std::uint64_t seed, bool unit_weights) {
  if (n < 1) throw std::invalid_argument("generate_family: need n >= 1");
  WeightedGraph g;
  if (name == "star") {
    // n leaves attached to center vertex 0.
    g.n = n + 1;
    for (int l = 1; l <= n; ++l) g.edges.push_back({0, l, 1.0});
  } else if (name == "path") {
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, 1.0});
  } else if (name == "cycle") {
    if (n < 3) throw std::invalid_argument("generate_family: cycle needs n >= 3");
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, 1.0});
    g.edges.push_back({0, n - 1, 1.0});
  } else if (name == "complete") {
    g.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1.0});
  } else if (name == "gnp") {
    if (param < 0.0 || param > 1.0)
      throw std::invalid_argument("generate_family: gnp probability outside [0,1]");
    std::mt19937_64 rng(seed);
    g.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double coin = uniform01(rng);
        double w = 1.0 - uniform01(rng);  // uniform (0, 1]
        if (coin < param) g.edges.push_back({i, j, unit_weights ? 1.0 : w});
      }
  } else {
    throw std::invalid_argument("generate_family: unknown family '" + name + "'");
  }
  g.validate();
  return g;
}

}  // namespace qmc
