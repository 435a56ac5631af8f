// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "dpgof/gof_statistics.hpp"

namespace {

dpgof::FrequencyTable reference_table() {
  dpgof::FrequencyTable t;
  t.add(1, 1999);
  t.add(2, 33);
  t.add(3, 2);
  t.add(4, 1);
  t.add(5, 1);
  return t;
}

dpgof::FrequencyTable wide_table(int distinct) {
  dpgof::RngStream rng = dpgof::RngStream::derive(7);
  const dpgof::DPareto law(1.7);
  dpgof::FrequencyTable t;
  while (static_cast<int>(t.distinct()) < distinct) t.add(law.draw(rng), 1);
  return t;
}

void BM_KernelH(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::kernel_h(2.5, 3, 17));
}
BENCHMARK(BM_KernelH);

void BM_StatK(benchmark::State& state) {
  const auto table = wide_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::stat_k(table, 1.7));
}
BENCHMARK(BM_StatK)->Arg(8)->Arg(32)->Arg(128);

void BM_StatT(benchmark::State& state) {
  const auto table = wide_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::stat_t(table, 1.7, 0.0));
}
BENCHMARK(BM_StatT)->Arg(8)->Arg(32);

void BM_StatZ(benchmark::State& state) {
  const auto table = reference_table();
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::stat_z(table, 5.9, 0.5));
}
BENCHMARK(BM_StatZ);

void BM_FitMle(benchmark::State& state) {
  const auto table = reference_table();
  for (auto _ : state) benchmark::DoNotOptimize(dpgof::fit_mle(table));
}
BENCHMARK(BM_FitMle);

void BM_Sampler(benchmark::State& state) {
  const dpgof::DPareto law(state.range(0) / 10.0);
  dpgof::RngStream rng = dpgof::RngStream::derive(11);
  for (auto _ : state) benchmark::DoNotOptimize(law.draw(rng));
}
BENCHMARK(BM_Sampler)->Arg(15)->Arg(20)->Arg(30);

}  // namespace
