// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "dpgof/bootstrap.hpp"

namespace {

void BM_BootstrapTestK(benchmark::State& state) {
  const dpgof::DPareto law(2.0);
  dpgof::RngStream rng = dpgof::RngStream::derive(3);
  const auto table = dpgof::FrequencyTable::from_sample(law.sample(20, rng));
  dpgof::BootstrapConfig cfg;
  cfg.replicates = static_cast<int>(state.range(0));
  cfg.master_seed = 5;
  for (auto _ : state)
    benchmark::DoNotOptimize(dpgof::bootstrap_test(table, dpgof::StatisticId::k_stat(), cfg));
}
BENCHMARK(BM_BootstrapTestK)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
