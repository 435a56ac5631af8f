// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dpgof/bootstrap.hpp"

namespace dpgof {

enum class AltKind { NullDPareto, SumDu, MaxDu };

// One data-generating law for the Monte Carlo study: the null itself, or the
// null perturbed by an independent discrete-uniform DU{0..k} component through
// a sum or a maximum.
struct AlternativeSpec {
  AltKind kind = AltKind::NullDPareto;
  double nu = 2.0;
  int du_bound = 0;  // k; ignored for the null, k = 0 degenerates to the null

  std::string label() const;
};

// Draws n observations. One value consumes the base draw first and then, for
// perturbed kinds, the uniform draw, in that fixed order; a DU(0) component
// consumes nothing, so k = 0 cells are stream-aligned with null cells.
Sample draw_alternative(const AlternativeSpec& spec, std::int64_t n, RngStream& rng,
                        const EvalControl& ctl = {});

struct PowerStudyConfig {
  int mc = 1000;       // outer Monte Carlo replications
  std::int64_t n = 20; // sample size per replication
  BootstrapConfig boot{};
  std::vector<StatisticId> tests;
  std::vector<AlternativeSpec> alternatives;
};

struct PowerCell {
  AlternativeSpec alternative{};
  std::vector<double> rejection_rate;  // per test; NaN when no replication was usable
  std::vector<int> failures;           // per test: replications without a usable decision
  // 0 = retain, 1 = reject, 2 = failed; indexed [test][outer replication]
  std::vector<std::vector<std::uint8_t>> rejections;
  int degenerate_data_fits = 0;
  long long degenerate_bootstrap_fits = 0;
};

struct PowerTable {
  PowerStudyConfig config{};
  std::vector<PowerCell> cells;
};

using PowerProgress = std::function<void(std::size_t cell_index, int completed, int total)>;

// Full size/power grid. Outer replications parallelize across the worker
// budget; every bootstrap below them runs serially so that the single budget
// is respected. All randomness is keyed by (master_seed, cell, replication,
// replicate), making results independent of scheduling. Tests share the outer
// samples and the bootstrap refits within a cell, so test columns are paired.
PowerTable run_power_study(const PowerStudyConfig& cfg, const PowerProgress& progress = {});

// Rates in percent to one decimal, one row per alternative, one column per
// test; failed cells print NA.
std::string power_table_csv(const PowerTable& table);

}  // namespace dpgof
