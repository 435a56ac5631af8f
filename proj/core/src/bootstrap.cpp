// SPDX-License-Identifier: Apache-2.0
#include "dpgof/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dpgof/errors.hpp"
#include "parallel_for.hpp"

namespace dpgof {

namespace {

void require_cfg(const BootstrapConfig& cfg) {
  if (cfg.replicates < 1) throw DomainError("bootstrap: replicate count must be >= 1");
  if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0))
    throw DomainError("bootstrap: alpha must lie in (0, 1)");
  if (cfg.worker_count < 1) throw DomainError("bootstrap: worker_count must be >= 1");
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double critical_value(std::vector<double> replicate_stats, double alpha) {
  if (replicate_stats.empty()) throw DomainError("critical_value: empty replicate list");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw DomainError("critical_value: alpha must lie in (0, 1)");
  const auto b = static_cast<double>(replicate_stats.size());
  const double r = b * (1.0 - alpha);
  const double nearest = std::round(r);
  // b(1-alpha) computed in floating point may sit an ulp off an integer; treat
  // anything within relative 1e-9 of one as the integral case of the rule.
  std::size_t rank;
  if (nearest >= 1.0 && std::abs(r - nearest) <= 1e-9 * b) {
    rank = static_cast<std::size_t>(nearest);
  } else {
    rank = static_cast<std::size_t>(std::floor(r)) + 1;
  }
  rank = std::clamp<std::size_t>(rank, 1, replicate_stats.size());
  std::nth_element(replicate_stats.begin(), replicate_stats.begin() + (rank - 1),
                   replicate_stats.end());
  return replicate_stats[rank - 1];
}

double bootstrap_p_value(std::span<const double> replicate_stats, double observed) {
  if (replicate_stats.empty()) throw DomainError("bootstrap_p_value: empty replicate list");
  std::size_t at_or_above = 0;
  for (const double v : replicate_stats)
    if (v >= observed) ++at_or_above;
  return static_cast<double>(at_or_above) / static_cast<double>(replicate_stats.size());
}

BootstrapDraws bootstrap_draws(const FrequencyTable& data, std::span<const StatisticId> ids,
                               const BootstrapConfig& cfg, StreamContext ctx,
                               bool tolerate_eval_errors) {
  require_cfg(cfg);
  if (ids.empty()) throw DomainError("bootstrap: no statistics requested");
  if (data.total() < 1) throw DomainError("bootstrap: data must be non-empty");

  BootstrapDraws out;
  out.fit = fit_mle(data, cfg.eval);

  out.observed.reserve(ids.size());
  for (const StatisticId& id : ids) {
    try {
      out.observed.push_back(evaluate_statistic(id, data, out.fit.nu_hat, cfg.eval));
    } catch (const std::exception& e) {
      if (!tolerate_eval_errors)
        throw NumericError("observed statistic " + id.label() + ": " + e.what());
      out.observed.push_back({id, kNaN, out.fit.nu_hat});
    }
  }

  const int b = cfg.replicates;
  const std::int64_t n = data.total();
  const DPareto null_law(out.fit.nu_hat, cfg.eval);
  out.values.assign(ids.size(), std::vector<double>(static_cast<std::size_t>(b), kNaN));
  std::vector<std::uint8_t> degenerate(static_cast<std::size_t>(b), 0);

  detail::parallel_for(b, cfg.worker_count, [&](int i) {
    RngStream rng = RngStream::derive(cfg.master_seed, ctx.word0, ctx.word1,
                                      static_cast<std::uint64_t>(i) + 1);
    const Sample replicate = null_law.sample(n, rng);
    const FrequencyTable table = FrequencyTable::from_sample(replicate);
    const ShapeFit refit = fit_mle(table, cfg.eval);
    degenerate[static_cast<std::size_t>(i)] = refit.degenerate ? 1 : 0;
    for (std::size_t t = 0; t < ids.size(); ++t) {
      try {
        out.values[t][static_cast<std::size_t>(i)] =
            evaluate_statistic(ids[t], table, refit.nu_hat, cfg.eval).value;
      } catch (const std::exception& e) {
        if (!tolerate_eval_errors)
          throw NumericError("bootstrap replicate " + std::to_string(i) + ", statistic " +
                             ids[t].label() + ": " + e.what());
        // value stays NaN
      }
    }
  });

  out.degenerate_replicates = 0;
  for (const std::uint8_t d : degenerate) out.degenerate_replicates += d;
  out.eval_failures.assign(ids.size(), 0);
  for (std::size_t t = 0; t < ids.size(); ++t)
    for (const double v : out.values[t])
      if (std::isnan(v)) ++out.eval_failures[t];
  return out;
}

std::vector<GofReport> bootstrap_test_all(const FrequencyTable& data,
                                          std::span<const StatisticId> ids,
                                          const BootstrapConfig& cfg, StreamContext ctx) {
  const BootstrapDraws draws = bootstrap_draws(data, ids, cfg, ctx, false);
  std::vector<GofReport> reports;
  reports.reserve(ids.size());
  for (std::size_t t = 0; t < ids.size(); ++t) {
    GofReport r;
    r.statistic = draws.observed[t];
    r.fit = draws.fit;
    r.replicate_values = draws.values[t];
    r.critical_value = critical_value(r.replicate_values, cfg.alpha);
    r.p_value = bootstrap_p_value(r.replicate_values, r.statistic.value);
    r.replicates = cfg.replicates;
    r.degenerate_replicates = draws.degenerate_replicates;
    r.reject = r.statistic.value > r.critical_value;
    reports.push_back(std::move(r));
  }
  return reports;
}

GofReport bootstrap_test(const FrequencyTable& data, const StatisticId& id,
                         const BootstrapConfig& cfg, StreamContext ctx) {
  const StatisticId ids[] = {id};
  return bootstrap_test_all(data, ids, cfg, ctx).front();
}

}  // namespace dpgof
