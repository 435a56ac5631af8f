// SPDX-License-Identifier: Apache-2.0
#include "dpgof/sim_study.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>

#include "dpgof/errors.hpp"
#include "parallel_for.hpp"

namespace dpgof {

std::string AlternativeSpec::label() const {
  char buf[64];
  switch (kind) {
    case AltKind::NullDPareto:
      std::snprintf(buf, sizeof(buf), "DPareto(%g)", nu);
      break;
    case AltKind::SumDu:
      std::snprintf(buf, sizeof(buf), "DPareto(%g)+DU(%d)", nu, du_bound);
      break;
    case AltKind::MaxDu:
      std::snprintf(buf, sizeof(buf), "max(DPareto(%g),DU(%d))", nu, du_bound);
      break;
  }
  return buf;
}

Sample draw_alternative(const AlternativeSpec& spec, std::int64_t n, RngStream& rng,
                        const EvalControl& ctl) {
  if (n < 1) throw DomainError("draw_alternative: n must be >= 1");
  if (spec.kind != AltKind::NullDPareto && spec.du_bound < 0)
    throw DomainError("draw_alternative: DU bound must be >= 0");
  const DPareto base(spec.nu, ctl);
  const auto du_range = static_cast<std::uint64_t>(spec.du_bound) + 1;
  Sample out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t x1 = base.draw(rng);
    switch (spec.kind) {
      case AltKind::NullDPareto:
        out.push_back(x1);
        break;
      case AltKind::SumDu:
        out.push_back(x1 + static_cast<std::int64_t>(rng.next_below(du_range)));
        break;
      case AltKind::MaxDu:
        out.push_back(std::max(x1, static_cast<std::int64_t>(rng.next_below(du_range))));
        break;
    }
  }
  return out;
}

PowerTable run_power_study(const PowerStudyConfig& cfg, const PowerProgress& progress) {
  if (cfg.mc < 1) throw DomainError("power study: mc must be >= 1");
  if (cfg.n < 2) throw DomainError("power study: n must be >= 2");
  if (cfg.tests.empty()) throw DomainError("power study: no tests configured");
  if (cfg.alternatives.empty()) throw DomainError("power study: no alternatives configured");

  PowerTable table;
  table.config = cfg;
  table.cells.reserve(cfg.alternatives.size());

  // The outer level owns the worker budget; everything below runs serially.
  BootstrapConfig inner = cfg.boot;
  inner.worker_count = 1;

  for (std::size_t cell_index = 0; cell_index < cfg.alternatives.size(); ++cell_index) {
    const AlternativeSpec& alt = cfg.alternatives[cell_index];
    PowerCell cell;
    cell.alternative = alt;
    cell.rejections.assign(cfg.tests.size(),
                           std::vector<std::uint8_t>(static_cast<std::size_t>(cfg.mc), 2));
    std::vector<std::uint8_t> degen_data(static_cast<std::size_t>(cfg.mc), 0);
    std::vector<long long> degen_boot(static_cast<std::size_t>(cfg.mc), 0);

    std::atomic<int> completed{0};
    std::mutex progress_mutex;

    detail::parallel_for(cfg.mc, cfg.boot.worker_count, [&](int rep) {
      const auto rep_word = static_cast<std::uint64_t>(rep);
      RngStream data_rng =
          RngStream::derive(cfg.boot.master_seed, cell_index, rep_word, 0);
      const Sample sample = draw_alternative(alt, cfg.n, data_rng, cfg.boot.eval);
      const FrequencyTable data = FrequencyTable::from_sample(sample);
      const StreamContext ctx{static_cast<std::uint64_t>(cell_index), rep_word};
      const BootstrapDraws draws = bootstrap_draws(data, cfg.tests, inner, ctx, true);
      degen_data[static_cast<std::size_t>(rep)] = draws.fit.degenerate ? 1 : 0;
      degen_boot[static_cast<std::size_t>(rep)] = draws.degenerate_replicates;
      for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
        if (std::isnan(draws.observed[t].value) || draws.eval_failures[t] > 0) continue;
        const double crit = critical_value(draws.values[t], cfg.boot.alpha);
        cell.rejections[t][static_cast<std::size_t>(rep)] =
            draws.observed[t].value > crit ? 1 : 0;
      }
      if (progress) {
        const int done = completed.fetch_add(1, std::memory_order_relaxed) + 1;
        const std::lock_guard<std::mutex> lock(progress_mutex);
        progress(cell_index, done, cfg.mc);
      }
    });

    cell.rejection_rate.assign(cfg.tests.size(), std::numeric_limits<double>::quiet_NaN());
    cell.failures.assign(cfg.tests.size(), 0);
    for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
      int usable = 0;
      int rejected = 0;
      for (const std::uint8_t r : cell.rejections[t]) {
        if (r == 2) continue;
        ++usable;
        rejected += r;
      }
      cell.failures[t] = cfg.mc - usable;
      if (usable > 0)
        cell.rejection_rate[t] = static_cast<double>(rejected) / static_cast<double>(usable);
    }
    for (const std::uint8_t d : degen_data) cell.degenerate_data_fits += d;
    for (const long long d : degen_boot) cell.degenerate_bootstrap_fits += d;
    table.cells.push_back(std::move(cell));
  }
  return table;
}

std::string power_table_csv(const PowerTable& table) {
  std::string out = "alternative";
  for (const StatisticId& id : table.config.tests) {
    out += ',';
    out += id.label();
  }
  out += '\n';
  for (const PowerCell& cell : table.cells) {
    out += cell.alternative.label();
    for (const double rate : cell.rejection_rate) {
      out += ',';
      if (std::isnan(rate)) {
        out += "NA";
      } else {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * rate);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace dpgof
