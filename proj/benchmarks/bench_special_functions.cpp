// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "dpgof/special_functions.hpp"

namespace {

void BM_Zeta(benchmark::State& state) {
  const double nu = 1.0 + state.range(0) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::zeta(nu));
}
BENCHMARK(BM_Zeta)->Arg(5)->Arg(15)->Arg(50);

void BM_ZetaPrime(benchmark::State& state) {
  const double nu = 1.0 + state.range(0) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::zeta_prime(nu));
}
BENCHMARK(BM_ZetaPrime)->Arg(5)->Arg(15)->Arg(50);

void BM_Polylog(benchmark::State& state) {
  const double s = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::polylog(2.0, s));
}
BENCHMARK(BM_Polylog)->Arg(50)->Arg(90)->Arg(99);

void BM_BetaFn(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::beta_fn(12.0, 3.5));
}
BENCHMARK(BM_BetaFn);

void BM_SemiInfiniteQuad(benchmark::State& state) {
  const std::function<double(double)> integrand = [](double t) {
    const double z = dpgof::zeta(2.0 + t);
    return z * z * std::exp(-t);
  };
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::quad_semi_infinite(integrand, 1.0));
}
BENCHMARK(BM_SemiInfiniteQuad);

}  // namespace
