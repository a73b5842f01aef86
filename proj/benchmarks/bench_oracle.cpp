// Copyright 2026 The zCDP Accountant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "zcdp/oracle.hpp"

namespace {

using namespace zcdp;

void BM_DiscreteLaplaceSum(benchmark::State& state) {
  const double tol = std::pow(10.0, -state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        renyi_discrete_laplace(0.1, 10, RenyiOrder::of(2.0), tol));
  }
}
BENCHMARK(BM_DiscreteLaplaceSum)->Arg(8)->Arg(12);

void BM_LaplaceQuadrature(benchmark::State& state) {
  const ContinuousDensityPair pair = laplace_density_pair(1.0);
  const double tol = std::pow(10.0, -state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_continuous(pair, RenyiOrder::of(2.0), tol));
  }
}
BENCHMARK(BM_LaplaceQuadrature)->Arg(6)->Arg(10);

void BM_RapporBruteForce(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto pair = std::get<DiscretePair>(mechanism_worst_pair(Rappor{1.0, d}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_discrete(pair.p, pair.q, RenyiOrder::of(2.0)));
  }
}
BENCHMARK(BM_RapporBruteForce)->Arg(8)->Arg(12);

void BM_RandomPair(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_pure_dp_pair(16, 1.0, ++seed));
  }
}
BENCHMARK(BM_RandomPair);

}  // namespace
