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

#include "zcdp/rdp_curves.hpp"
#include "zcdp/verify.hpp"
#include "zcdp/zcdp_bounds.hpp"

namespace {

using namespace zcdp;

void BM_GenericCurve(benchmark::State& state) {
  const RenyiOrder order = RenyiOrder::of(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdp_generic_dp(1.0, order));
  }
}
BENCHMARK(BM_GenericCurve);

void BM_LaplaceCurve(benchmark::State& state) {
  const RenyiOrder order = RenyiOrder::of(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdp_laplace(1.0, order));
  }
}
BENCHMARK(BM_LaplaceCurve);

void BM_DiscreteLaplaceCurve(benchmark::State& state) {
  const RenyiOrder order = RenyiOrder::of(2.5);
  const std::int64_t delta = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdp_discrete_laplace(1.0, delta, order));
  }
}
BENCHMARK(BM_DiscreteLaplaceCurve)->Arg(1)->Arg(100)->Arg(1000000);

void BM_DiscreteLaplaceNearLimit(benchmark::State& state) {
  // the expansion path walks the delta+1 ratio classes
  const RenyiOrder order = RenyiOrder::of(1.0 + 1e-7);
  const std::int64_t delta = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdp_discrete_laplace(1.0, delta, order));
  }
}
BENCHMARK(BM_DiscreteLaplaceNearLimit)->Arg(100)->Arg(10000);

void BM_BoundedRangeCurve(benchmark::State& state) {
  const RenyiOrder order = RenyiOrder::of(2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdp_br(1.0, order));
  }
}
BENCHMARK(BM_BoundedRangeCurve);

void BM_SupSearch(benchmark::State& state) {
  const RdpCurve curve(Krr{1.0, 20});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sup_rdp_over_alpha(curve, 1000.0, 1e-9));
  }
}
BENCHMARK(BM_SupSearch);

void BM_ZcdpKrrLargeK(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(zcdp_krr(1.0, 1000000));
  }
}
BENCHMARK(BM_ZcdpKrrLargeK);

}  // namespace
