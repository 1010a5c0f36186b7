// Copyright 2026 The enuniv Authors
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

#include "enuniv/lie.hpp"
#include "enuniv/models.hpp"
#include "enuniv/rep.hpp"
#include "enuniv/sil.hpp"
#include "enuniv/synth.hpp"

namespace {

using namespace enuniv;

void BM_BracketDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = xy_coupling(n, 0, 1) + exchange(n, 1, 2);
  const auto b = exchange(n, 0, n - 1) + xy_coupling(n, 2, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(a, b));
}
BENCHMARK(BM_BracketDense)->Arg(4)->Arg(8)->Arg(12);

void BM_ClosureOprime(benchmark::State& state) {
  const auto gens = oprime_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(close_lie_algebra(gens).dim());
}
BENCHMARK(BM_ClosureOprime)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_ClosureXYAll(benchmark::State& state) {
  const auto gens = xy_family(static_cast<int>(state.range(0)), Topology::kAllPairs);
  for (auto _ : state) benchmark::DoNotOptimize(close_lie_algebra(gens).dim());
}
BENCHMARK(BM_ClosureXYAll)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DecomposeExchange(benchmark::State& state) {
  const auto basis = close_lie_algebra(
      heisenberg_family(static_cast<int>(state.range(0)), Topology::kAllPairs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isotypic_decompose(basis).sectors.size());
  }
}
BENCHMARK(BM_DecomposeExchange)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BuildSil(benchmark::State& state) {
  const auto spec = default_sil_spec();
  for (auto _ : state) benchmark::DoNotOptimize(build_sil(spec).U.rows());
}
BENCHMARK(BM_BuildSil)->Unit(benchmark::kMillisecond);

void BM_ExpmPulse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = heisenberg_family(n, Topology::kChain).front();
  for (auto _ : state) benchmark::DoNotOptimize(expm_pulse(h, 0.3).rows());
}
BENCHMARK(BM_ExpmPulse)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
