// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: data ingestion, bootstrap goodness-of-fit tests,
// log-log diagnostics, power studies, and sampling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dpgof/bootstrap.hpp"
#include "dpgof/data_io.hpp"
#include "dpgof/reporting.hpp"
#include "dpgof/sim_study.hpp"

namespace {

using namespace dpgof;

struct TestOptions {
  std::string input;
  std::string format = "freq";
  std::string stat = "K";
  double a = 0.5;
  double beta = 0.0;
  std::string output;
  BootstrapConfig boot{};
};

StatisticId statistic_from_options(const TestOptions& opt) {
  if (opt.stat == "K") return StatisticId::k_stat();
  if (opt.stat == "Z") return StatisticId::z_stat(opt.a);
  if (opt.stat == "T") return StatisticId::t_stat(opt.beta);
  if (opt.stat == "Cn") return StatisticId::cn_stat();
  if (opt.stat == "Sben") return StatisticId::sben_stat();
  throw ParseError("unknown statistic '" + opt.stat + "' (expected K, Z, T, Cn or Sben)");
}

int run_test(const TestOptions& opt) {
  const InputFormat fmt = parse_format_name(opt.format);
  const FrequencyTable data = ingest_file(opt.input, fmt);
  std::printf("input: %s (%s, n = %lld, %zu distinct values)\n", opt.input.c_str(),
              opt.format.c_str(), static_cast<long long>(data.total()), data.distinct());
  const StatisticId id = statistic_from_options(opt);
  const GofReport report = bootstrap_test(data, id, opt.boot);
  const ReportMeta meta{opt.input, fmt};
  std::fputs(gof_report_text(report, opt.boot).c_str(), stdout);
  if (!opt.output.empty()) {
    std::ofstream out(opt.output);
    if (!out) throw ParseError("cannot open output file '" + opt.output + "'");
    out << gof_report_json(report, opt.boot, meta);
    std::printf("report written to %s\n", opt.output.c_str());
  }
  return report.reject ? 0 : 0;
}

int run_loglog(const std::string& input, const std::string& format,
               const std::string& output) {
  const InputFormat fmt = parse_format_name(format);
  const FrequencyTable data = ingest_file(input, fmt);
  const LogLogDiagnostic diag = loglog_fit(data);
  std::fputs(loglog_text(diag).c_str(), stdout);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw ParseError("cannot open output file '" + output + "'");
    out << loglog_csv(data, diag);
    std::printf("points written to %s\n", output.c_str());
  }
  return 0;
}

int run_power_study(const std::string& config_path, const std::string& output_prefix,
                    bool have_seed, std::uint64_t seed, bool have_workers, int workers,
                    bool quiet) {
  PowerStudyConfig cfg = parse_power_study_config_file(config_path);
  if (have_seed) cfg.boot.master_seed = seed;
  if (have_workers) cfg.boot.worker_count = workers;

  PowerProgress progress;
  if (!quiet) {
    const int step = std::max(1, cfg.mc / 10);
    progress = [&, step](std::size_t cell, int done, int total) {
      if (done % step == 0 || done == total)
        std::fprintf(stderr, "cell %zu/%zu: %d/%d replications\n", cell + 1,
                     cfg.alternatives.size(), done, total);
    };
  }
  const PowerTable table = ::dpgof::run_power_study(cfg, progress);

  const std::string csv_path = output_prefix + ".csv";
  const std::string json_path = output_prefix + ".json";
  std::ofstream csv(csv_path);
  if (!csv) throw ParseError("cannot open output file '" + csv_path + "'");
  csv << power_table_csv(table);
  std::ofstream js(json_path);
  if (!js) throw ParseError("cannot open output file '" + json_path + "'");
  js << power_table_json(table);
  std::fputs(power_table_csv(table).c_str(), stdout);
  std::printf("written: %s, %s\n", csv_path.c_str(), json_path.c_str());
  return 0;
}

int run_sample(double nu, std::int64_t n, std::uint64_t seed, const std::string& output) {
  const DPareto law(nu);
  RngStream rng = RngStream::derive(seed);
  const Sample sample = law.sample(n, rng);
  std::string text;
  for (const std::int64_t v : sample) {
    text += std::to_string(v);
    text += '\n';
  }
  if (output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(output);
    if (!out) throw ParseError("cannot open output file '" + output + "'");
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit toolkit for the discrete Pareto (Zipf) distribution"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  TestOptions test_opt;
  test_opt.boot.worker_count = std::max(1u, std::thread::hardware_concurrency());

  auto* test = app.add_subcommand("test", "Bootstrap goodness-of-fit test on a dataset");
  test->add_option("input", test_opt.input, "input data file")->required();
  test->add_option("--format", test_opt.format, "input format: raw | freq")
      ->default_val("freq");
  test->add_option("--stat", test_opt.stat, "statistic: K | Z | T | Cn | Sben")
      ->default_val("K");
  test->add_option("--a", test_opt.a, "tuning parameter a for Z")->default_val(0.5);
  test->add_option("--beta", test_opt.beta, "tuning parameter beta for T")->default_val(0.0);
  test->add_option("--boot-reps", test_opt.boot.replicates, "bootstrap replicates b")
      ->default_val(500);
  test->add_option("--alpha", test_opt.boot.alpha, "nominal level")->default_val(0.05);
  test->add_option("--seed", test_opt.boot.master_seed, "master seed")->default_val(0);
  test->add_option("--workers", test_opt.boot.worker_count, "worker threads");
  test->add_option("--output", test_opt.output, "write the JSON report here");

  std::string ll_input;
  std::string ll_format = "freq";
  std::string ll_output;
  auto* loglog = app.add_subcommand("loglog", "Log-log frequency diagnostic and OLS slope");
  loglog->add_option("input", ll_input, "input data file")->required();
  loglog->add_option("--format", ll_format, "input format: raw | freq")->default_val("freq");
  loglog->add_option("--output", ll_output, "write CSV points here");

  std::string ps_config;
  std::string ps_output = "power_study";
  std::uint64_t ps_seed = 0;
  int ps_workers = 1;
  bool ps_quiet = false;
  auto* power = app.add_subcommand("power-study", "Monte Carlo size/power study from a config");
  power->add_option("--config", ps_config, "study config JSON file")->required();
  auto* ps_out_opt =
      power->add_option("--output", ps_output, "output prefix for .csv/.json");
  (void)ps_out_opt;
  auto* ps_seed_opt = power->add_option("--seed", ps_seed, "override the config seed");
  auto* ps_workers_opt =
      power->add_option("--workers", ps_workers, "override the config worker count");
  power->add_flag("--quiet", ps_quiet, "suppress progress output");

  double sm_nu = 2.0;
  std::int64_t sm_n = 0;
  std::uint64_t sm_seed = 0;
  std::string sm_output;
  auto* sample = app.add_subcommand("sample", "Draw from the fitted law");
  sample->add_option("--nu", sm_nu, "shape exponent in (1, 50]")->required();
  sample->add_option("--n", sm_n, "number of draws")->required();
  sample->add_option("--seed", sm_seed, "master seed")->default_val(0);
  sample->add_option("--output", sm_output, "write draws here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*test) return run_test(test_opt);
    if (*loglog) return run_loglog(ll_input, ll_format, ll_output);
    if (*power)
      return run_power_study(ps_config, ps_output, ps_seed_opt->count() > 0, ps_seed,
                             ps_workers_opt->count() > 0, ps_workers, ps_quiet);
    if (*sample) return run_sample(sm_nu, sm_n, sm_seed, sm_output);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
