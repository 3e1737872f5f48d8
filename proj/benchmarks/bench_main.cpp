// Copyright 2026 The pptdist Authors
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

#include <random>

#include <benchmark/benchmark.h>

#include "pptdist/channel.hpp"
#include "pptdist/solver.hpp"
#include "pptdist/witness.hpp"

namespace {

using namespace pptdist;

BipartiteOperator bench_hermitian(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int side = d * d;
  Matrix mat(side, side);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      mat(r, c) = Complex(normal(rng), normal(rng));
    }
  }
  return BipartiteOperator(d, d, std::move(mat)).symmetrized();
}

void BM_PartialTranspose(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const BipartiteOperator x = bench_hermitian(d, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_transpose(x));
  }
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(4)->Arg(8)->Arg(10);

void BM_Spectral(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const BipartiteOperator x = bench_hermitian(d, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral(x));
  }
}
BENCHMARK(BM_Spectral)->Arg(2)->Arg(4)->Arg(8)->Arg(10);

void BM_NegativityReport(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const DensityOperator rho = werner(d, 0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(negativity_report(rho));
  }
}
BENCHMARK(BM_NegativityReport)->Arg(2)->Arg(4)->Arg(8);

void BM_DykstraProject(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const BipartiteOperator x = bench_hermitian(d, 3);
  SolverOptions opts;
  opts.max_dykstra = 20000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dykstra_project(x, 2, opts));
  }
}
BENCHMARK(BM_DykstraProject)->Arg(2)->Arg(3);

void BM_SolveFidelityWerner(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const DensityOperator rho = werner(d, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fidelity(rho, 2));
  }
}
BENCHMARK(BM_SolveFidelityWerner)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_KrausOperators(benchmark::State &state) {
  const int d = static_cast<int>(state.range(0));
  const DistillationWitness witness = build_witness(werner(d, 1.0), 2);
  const PptChannel ch = make_channel(witness.a_op, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kraus_operators(ch));
  }
}
BENCHMARK(BM_KrausOperators)->Arg(2)->Arg(3);

} // namespace

BENCHMARK_MAIN();
