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

#include <benchmark/benchmark.h>

#include "qmc/exact_oracle.hpp"
#include "qmc/moment_model.hpp"
#include "qmc/product_rounding.hpp"
#include "qmc/sdp_solver.hpp"

namespace {

void BM_BuildLasserre2(benchmark::State& state) {
  qmc::WeightedGraph g =
      qmc::generate_family("gnp", static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmc::build_lasserre(g, 2));
  }
}
BENCHMARK(BM_BuildLasserre2)->Arg(4)->Arg(6)->Arg(8);

void BM_AffineProjection(benchmark::State& state) {
  qmc::WeightedGraph g =
      qmc::generate_family("gnp", static_cast<int>(state.range(0)), 0.5, 7);
  qmc::MomentProblem p = qmc::build_lasserre(g, 2);
  auto blocks = p.identity_blocks();
  for (auto _ : state) {
    qmc::project_affine(blocks, p);
    benchmark::DoNotOptimize(blocks);
  }
}
BENCHMARK(BM_AffineProjection)->Arg(4)->Arg(6)->Arg(8);

void BM_PsdProjection(benchmark::State& state) {
  qmc::WeightedGraph g =
      qmc::generate_family("gnp", static_cast<int>(state.range(0)), 0.5, 7);
  qmc::MomentProblem p = qmc::build_lasserre(g, 2);
  Eigen::MatrixXd m = -p.identity_blocks()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmc::project_psd(m));
  }
}
BENCHMARK(BM_PsdProjection)->Arg(4)->Arg(6)->Arg(8);

void BM_SolveLevel2(benchmark::State& state) {
  qmc::WeightedGraph g =
      qmc::generate_family("cycle", static_cast<int>(state.range(0)), 0, 0);
  qmc::MomentProblem p = qmc::build_lasserre(g, 2);
  qmc::SolveOptions opts;
  opts.tol = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmc::solve(p, opts));
  }
}
BENCHMARK(BM_SolveLevel2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ExactDiagonalization(benchmark::State& state) {
  qmc::WeightedGraph g =
      qmc::generate_family("gnp", static_cast<int>(state.range(0)), 0.5, 7);
  qmc::DenseHamiltonian h = qmc::build_hamiltonian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmc::max_eigenvalue(h));
  }
}
BENCHMARK(BM_ExactDiagonalization)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SampleProductState(benchmark::State& state) {
  qmc::WeightedGraph g = qmc::generate_family("cycle", 6, 0, 0);
  qmc::MomentProblem p = qmc::build_lasserre(g, 2);
  qmc::SolveOptions opts;
  opts.tol = 1e-6;
  qmc::SdpSolution sol = qmc::solve(p, opts);
  qmc::LocalVectorSystem vecs = qmc::local_vectors(sol, g.n);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmc::sample_product_state(vecs, seed++));
  }
}
BENCHMARK(BM_SampleProductState);

}  // namespace

BENCHMARK_MAIN();
