// SPDX-License-Identifier: Apache-2.0
#include "dpgof/reporting.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dpgof/errors.hpp"
#include "json.hpp"

namespace dpgof {

namespace {

using nlohmann::json;

json fit_json(const ShapeFit& fit) {
  return json{{"nu_hat", fit.nu_hat},
              {"score_residual", fit.score_residual},
              {"bracket", {fit.bracket_lo, fit.bracket_hi}},
              {"degenerate", fit.degenerate}};
}

StatisticId stat_from_json(const json& j) {
  const std::string kind = j.at("stat").get<std::string>();
  if (kind == "K") return StatisticId::k_stat();
  if (kind == "Z") return StatisticId::z_stat(j.at("a").get<double>());
  if (kind == "T") return StatisticId::t_stat(j.at("beta").get<double>());
  if (kind == "Cn") return StatisticId::cn_stat();
  if (kind == "Sben") return StatisticId::sben_stat();
  throw ParseError("power study config: unknown statistic '" + kind + "'");
}

AlternativeSpec alternative_from_json(const json& j) {
  AlternativeSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "null") {
    spec.kind = AltKind::NullDPareto;
  } else if (kind == "sum_du") {
    spec.kind = AltKind::SumDu;
  } else if (kind == "max_du") {
    spec.kind = AltKind::MaxDu;
  } else {
    throw ParseError("power study config: unknown alternative kind '" + kind + "'");
  }
  spec.nu = j.at("nu").get<double>();
  if (spec.kind != AltKind::NullDPareto) spec.du_bound = j.at("k").get<int>();
  return spec;
}

}  // namespace

std::string gof_report_json(const GofReport& report, const BootstrapConfig& cfg,
                            const ReportMeta& meta) {
  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  doc["input"] = {{"path", meta.input_path}, {"format", format_name(meta.format)}};
  // worker_count is an execution detail with no effect on the results; it is
  // excluded so equal seeds give byte-identical reports.
  doc["config"] = {{"statistic", report.statistic.id.label()},
                   {"replicates", cfg.replicates},
                   {"alpha", cfg.alpha},
                   {"seed", cfg.master_seed}};
  doc["fit"] = fit_json(report.fit);
  doc["result"] = {{"statistic", report.statistic.id.label()},
                   {"value", report.statistic.value},
                   {"nu_used", report.statistic.nu_used},
                   {"critical_value", report.critical_value},
                   {"p_value", report.p_value},
                   {"replicates", report.replicates},
                   {"degenerate_replicates", report.degenerate_replicates},
                   {"reject", report.reject}};
  return doc.dump(2) + "\n";
}

std::string gof_report_text(const GofReport& report, const BootstrapConfig& cfg) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof(buf), "fit:   nu_hat = %.6f  (score residual %.3g%s)\n",
                report.fit.nu_hat, report.fit.score_residual,
                report.fit.degenerate ? ", degenerate all-ones fit" : "");
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "%s = %.6g   critical(%g) = %.6g   p = %.4g   -> %s H0\n",
                report.statistic.id.label().c_str(), report.statistic.value, cfg.alpha,
                report.critical_value, report.p_value, report.reject ? "reject" : "retain");
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "bootstrap: b = %d, degenerate refits = %d, seed = %llu, workers = %d\n",
                report.replicates, report.degenerate_replicates,
                static_cast<unsigned long long>(cfg.master_seed), cfg.worker_count);
  out += buf;
  return out;
}

std::string loglog_text(const LogLogDiagnostic& diag) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "log-log fit over %zu points: slope = %.4f, intercept = %.4f, r^2 = %.6f\n",
                diag.points.size(), diag.slope, diag.intercept, diag.r_squared);
  return buf;
}

std::string power_table_json(const PowerTable& table) {
  json doc;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  json tests = json::array();
  for (const StatisticId& id : table.config.tests) tests.push_back(id.label());
  json alternatives = json::array();
  for (const AlternativeSpec& alt : table.config.alternatives)
    alternatives.push_back(alt.label());
  doc["config"] = {{"mc", table.config.mc},
                   {"n", table.config.n},
                   {"replicates", table.config.boot.replicates},
                   {"alpha", table.config.boot.alpha},
                   {"seed", table.config.boot.master_seed},
                   {"workers", table.config.boot.worker_count},
                   {"tests", tests},
                   {"alternatives", alternatives}};
  json cells = json::array();
  for (const PowerCell& cell : table.cells) {
    json results;
    for (std::size_t t = 0; t < table.config.tests.size(); ++t) {
      const double rate = cell.rejection_rate[t];
      json entry = {{"failures", cell.failures[t]}};
      if (std::isnan(rate)) {
        entry["rejection_rate"] = nullptr;
      } else {
        entry["rejection_rate"] = rate;
      }
      results[table.config.tests[t].label()] = entry;
    }
    cells.push_back(json{{"alternative", cell.alternative.label()},
                         {"results", results},
                         {"degenerate_data_fits", cell.degenerate_data_fits},
                         {"degenerate_bootstrap_fits", cell.degenerate_bootstrap_fits}});
  }
  doc["cells"] = cells;
  return doc.dump(2) + "\n";
}

PowerStudyConfig parse_power_study_config(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("power study config: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != 1)
      throw ParseError("power study config: unsupported version");
    PowerStudyConfig cfg;
    cfg.mc = doc.value("mc", 1000);
    cfg.n = doc.value("n", std::int64_t{20});
    cfg.boot.replicates = doc.value("b", 500);
    cfg.boot.alpha = doc.value("alpha", 0.05);
    cfg.boot.master_seed = doc.value("seed", std::uint64_t{0});
    cfg.boot.worker_count = doc.value("workers", 1);
    for (const json& j : doc.at("tests")) cfg.tests.push_back(stat_from_json(j));
    for (const json& j : doc.at("alternatives"))
      cfg.alternatives.push_back(alternative_from_json(j));
    if (cfg.tests.empty()) throw ParseError("power study config: tests must be non-empty");
    if (cfg.alternatives.empty())
      throw ParseError("power study config: alternatives must be non-empty");
    return cfg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("power study config: ") + e.what());
  }
}

PowerStudyConfig parse_power_study_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  return parse_power_study_config(in);
}

}  // namespace dpgof
