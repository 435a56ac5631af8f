// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpgof/gof_statistics.hpp"

namespace dpgof {

struct BootstrapConfig {
  int replicates = 500;  // b
  double alpha = 0.05;
  std::uint64_t master_seed = 0;
  int worker_count = 1;
  EvalControl eval{};
};

// Extra stream-key words so nested drivers (the power study) can hand every
// bootstrap invocation its own disjoint family of replicate streams. Replicate
// i always draws from stream (master_seed, word0, word1, i+1); the enclosing
// data draw, if any, owns stream (master_seed, word0, word1, 0).
struct StreamContext {
  std::uint64_t word0 = 0;
  std::uint64_t word1 = 0;
};

struct GofReport {
  StatValue statistic{};
  ShapeFit fit{};
  double critical_value = 0.0;
  double p_value = 0.0;
  int replicates = 0;
  int degenerate_replicates = 0;  // refits clamped at the shape cap, kept in the null sample
  bool reject = false;
  std::vector<double> replicate_values;  // null-distribution draws by replicate index
};

// Empirical (1 - alpha) quantile with the order-statistic rank rule: the
// b(1-alpha)-th order statistic when b(1-alpha) is an integer, otherwise the
// (floor(b(1-alpha)) + 1)-th.
double critical_value(std::vector<double> replicate_stats, double alpha);

// Fraction of replicate draws at or above the observed value.
double bootstrap_p_value(std::span<const double> replicate_stats, double observed);

// Parametric bootstrap: fit nu on the data, generate b samples from the fitted
// law, refit nu on each, evaluate the statistic at the refitted value, and
// read off the critical value and p-value. Deterministic in master_seed
// regardless of worker_count.
GofReport bootstrap_test(const FrequencyTable& data, const StatisticId& id,
                         const BootstrapConfig& cfg, StreamContext ctx = {});

// Same, with the replicate samples and refits shared across several
// statistics (the expensive part of the procedure is statistic-independent).
std::vector<GofReport> bootstrap_test_all(const FrequencyTable& data,
                                          std::span<const StatisticId> ids,
                                          const BootstrapConfig& cfg, StreamContext ctx = {});

// Lower-level pass used by the simulation harness: per-replicate statistic
// draws with evaluation failures recorded as NaN instead of thrown.
struct BootstrapDraws {
  ShapeFit fit{};
  std::vector<StatValue> observed;          // per statistic; NaN value marks failure
  std::vector<std::vector<double>> values;  // values[t][i], NaN marks failure
  std::vector<int> eval_failures;           // per statistic, count of NaN replicates
  int degenerate_replicates = 0;
};
BootstrapDraws bootstrap_draws(const FrequencyTable& data, std::span<const StatisticId> ids,
                               const BootstrapConfig& cfg, StreamContext ctx,
                               bool tolerate_eval_errors);

}  // namespace dpgof
