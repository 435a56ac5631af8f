// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: exercises the full pipeline against the published
// reference analyses (shape fits, log-log slopes, statistic values, bootstrap
// p-values, desk-scale size/power) plus the structural property suites.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "dpgof/bootstrap.hpp"
#include "dpgof/data_io.hpp"
#include "dpgof/sim_study.hpp"
#include "oracles.hpp"

using namespace dpgof;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point section_start;

void begin() { section_start = std::chrono::steady_clock::now(); }

void report(const std::string& name, bool ok, const std::string& detail) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - section_start)
                           .count();
  std::printf("[%s] %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str(),
              static_cast<double>(elapsed) / 1000.0);
  std::fflush(stdout);
  if (!ok) ++failures;
}

FrequencyTable expelled_effective() {
  FrequencyTable t;
  t.add(1, 1999);
  t.add(2, 33);
  t.add(3, 2);
  t.add(4, 1);
  t.add(5, 1);
  return t;
}

FrequencyTable expelled_ineffective() {
  FrequencyTable t;
  t.add(1, 1645);
  t.add(2, 183);
  t.add(3, 37);
  t.add(4, 13);
  t.add(5, 1);
  t.add(6, 1);
  return t;
}

// Tolerance: two units in the last displayed significant digit of the
// reference value (reference tables print 2 or 3 significant figures).
bool matches_display(double value, double reference, int digits, std::string& note) {
  const double mag = std::floor(std::log10(std::abs(reference)));
  const double unit = std::pow(10.0, mag - (digits - 1));
  const bool ok = std::abs(value - reference) <= 2.0 * unit + 1e-300;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s%.6g vs %.3g", ok ? "" : "MISMATCH ", value,
                reference);
  note += buf;
  return ok;
}

int hw_workers() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

constexpr std::uint64_t kSeed = 20260808;

// --- criteria ----------------------------------------------------------------

void criterion_1_mle() {
  begin();
  const ShapeFit f1 = fit_mle(expelled_effective());
  const ShapeFit f2 = fit_mle(expelled_ineffective());
  const bool ok = std::abs(f1.nu_hat - 5.89) <= 0.01 && std::abs(f2.nu_hat - 3.50) <= 0.01;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "nu_hat = %.4f (ref 5.89 +- 0.01), %.4f (ref 3.50 +- 0.01)",
                f1.nu_hat, f2.nu_hat);
  report("criterion 1: shape-exponent MLE", ok, buf);
}

void criterion_2_slopes() {
  begin();
  const double s1 = loglog_fit(expelled_effective()).slope;
  const double s2 = loglog_fit(expelled_ineffective()).slope;
  const bool ok = std::abs(s1 - (-5.02)) <= 0.01 && std::abs(s2 - (-4.31)) <= 0.01;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "slopes = %.4f (ref -5.02 +- 0.01), %.4f (ref -4.31 +- 0.01)",
                s1, s2);
  report("criterion 2: log-log slopes", ok, buf);
}

void criterion_3_table_one() {
  begin();
  const FrequencyTable d1 = expelled_effective();
  const double nu1 = fit_mle(d1).nu_hat;
  bool ok = true;
  std::string note;

  const double k_val = stat_k(d1, nu1);
  std::string k_note = "K=";
  const bool k_ok = matches_display(k_val, 5.05e-6, 3, k_note);
  if (!k_ok) {
    // The reference table value is reproduced exactly by the s^2-weighted
    // variant of the statistic (the squared L2 norm of -s*g rather than of g);
    // the implemented statistic follows its defining closed form. Kept red on
    // purpose rather than switching the definition.
    const auto sq = [&](double s) {
      const double g = oracle::mean_g(d1.entries(), nu1, s);
      return s * s * g * g;
    };
    const double weighted_value =
        static_cast<double>(d1.total()) * oracle::integrate(sq, 0.0, 1.0, 1e-13);
    char buf[120];
    std::snprintf(buf, sizeof(buf), " [s^2-weighted variant gives %.4g]", weighted_value);
    k_note += buf;
  }
  ok &= k_ok;
  note += k_note;

  struct Item {
    const char* label;
    double value;
    double reference;
    int digits;
  };
  const std::array<Item, 6> items = {{{" Z(0.5)=", stat_z(d1, nu1, 0.5), 1.81e-4, 3},
                                      {" Z(1)=", stat_z(d1, nu1, 1.0), 3.99e-5, 3},
                                      {" Z(2)=", stat_z(d1, nu1, 2.0), 5.80e-6, 3},
                                      {" T(0)=", stat_t(d1, nu1, 0.0), 4.49e-2, 3},
                                      {" Sben=", stat_sben(d1, nu1), 4.81e-7, 3},
                                      {" Cn=", stat_cn(d1, nu1), 2.57e-4, 3}}};
  for (const Item& item : items) {
    note += item.label;
    ok &= matches_display(item.value, item.reference, item.digits, note);
  }
  report("criterion 3: dataset-1 statistic values", ok, note);
}

void criterion_4_table_two() {
  begin();
  const FrequencyTable d2 = expelled_ineffective();
  const double nu2 = fit_mle(d2).nu_hat;
  bool ok = true;
  std::string note;
  struct Item {
    const char* label;
    double value;
    double reference;
    int digits;
  };
  const std::array<Item, 4> items = {{{"T(0)=", stat_t(d2, nu2, 0.0), 2.93, 3},
                                      {" T(2)=", stat_t(d2, nu2, 2.0), 0.86, 2},
                                      {" Cn=", stat_cn(d2, nu2), 0.26, 2},
                                      {" Sben=", stat_sben(d2, nu2), 2.35e-4, 3}}};
  for (const Item& item : items) {
    note += item.label;
    ok &= matches_display(item.value, item.reference, item.digits, note);
  }
  report("criterion 4: dataset-2 statistic values", ok, note);
}

void criterion_5_bootstrap_pvalues() {
  begin();
  BootstrapConfig cfg;
  cfg.replicates = 500;
  cfg.alpha = 0.05;
  cfg.master_seed = kSeed;
  cfg.worker_count = hw_workers();
  const GofReport r1 = bootstrap_test(expelled_effective(), StatisticId::k_stat(), cfg);
  const GofReport r2 = bootstrap_test(expelled_ineffective(), StatisticId::k_stat(), cfg);
  const bool ok = r1.p_value >= 0.32 && r1.p_value <= 0.52 && r2.p_value < 0.01;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "p1 = %.3f (ref band [0.32, 0.52]), p2 = %.4f (< 0.01); decisions: %s/%s",
                r1.p_value, r2.p_value, r1.reject ? "reject" : "retain",
                r2.reject ? "reject" : "retain");
  report("criterion 5: bootstrap p-values", ok, buf);
}

void criterion_6_size() {
  begin();
  PowerStudyConfig cfg;
  cfg.mc = 300;
  cfg.n = 20;
  cfg.boot.replicates = 300;
  cfg.boot.alpha = 0.05;
  cfg.boot.master_seed = kSeed;
  cfg.boot.worker_count = hw_workers();
  cfg.tests = {StatisticId::k_stat()};
  cfg.alternatives = {{AltKind::NullDPareto, 2.0, 0}};
  const PowerTable table = run_power_study(cfg);
  const double size = table.cells[0].rejection_rate[0];
  const bool ok = size >= 0.025 && size <= 0.085;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "empirical size = %.3f (band [0.025, 0.085])", size);
  report("criterion 6: desk-scale size", ok, buf);
}

void criterion_7_power() {
  begin();
  PowerStudyConfig cfg;
  cfg.mc = 300;
  cfg.n = 20;
  cfg.boot.replicates = 300;
  cfg.boot.alpha = 0.05;
  cfg.boot.master_seed = kSeed;
  cfg.boot.worker_count = hw_workers();
  cfg.tests = {StatisticId::k_stat(), StatisticId::t_stat(0.0)};
  cfg.alternatives = {{AltKind::SumDu, 2.0, 2},
                      {AltKind::SumDu, 1.5, 2},
                      {AltKind::MaxDu, 3.0, 2}};
  const PowerTable table = run_power_study(cfg);
  const double k_sum2 = table.cells[0].rejection_rate[0];
  const double k_sum15 = table.cells[1].rejection_rate[0];
  const double t_max3 = table.cells[2].rejection_rate[1];
  const bool ok = k_sum2 >= 0.90 && k_sum15 >= 0.72 && t_max3 >= 0.90;
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "K vs sum(2,2) = %.3f (>= 0.90), K vs sum(1.5,2) = %.3f (>= 0.72), "
                "T(0) vs max(3,2) = %.3f (>= 0.90)%s",
                k_sum2, k_sum15, t_max3,
                t_max3 < 0.90
                    ? " [stable across statistic variants and seeds; the 0.96 "
                      "reference is not reproducible from the documented procedure]"
                    : "");
  report("criterion 7: desk-scale power spot-checks", ok, buf);
}

void criterion_8a_stein_identity() {
  begin();
  bool ok = true;
  double worst = 0.0;
  for (const double nu : {1.5, 2.0, 3.0, 5.0}) {
    const DPareto law(nu);
    for (double s = 0.1; s < 0.95; s += 0.1) {
      double cutoff = 1024.0;
      const auto bound = [&](double kk) {
        const double geo =
            2.0 * std::pow(s, kk) * std::pow(kk + 1.0, -nu) / (1.0 - s);
        return (geo + std::pow(kk, -nu)) / law.zeta_value();
      };
      while (bound(cutoff) > 1e-9 && cutoff < 4.0e6) cutoff *= 2.0;
      long double acc = 0.0L;
      for (std::int64_t k = 1; k <= static_cast<std::int64_t>(cutoff); ++k)
        acc += law.pmf(k) * stein_residual(nu, k, s);
      const double err = std::abs(static_cast<double>(acc));
      worst = std::max(worst, err - bound(cutoff));
      ok &= err <= bound(cutoff) + 1e-8;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max excess over tail bound = %.2e (tol 1e-8)", worst);
  report("criterion 8a: residual identity on the (nu, s) grid", ok, buf);
}

void criterion_8b_kernel_quadrature() {
  begin();
  RngStream rng = RngStream::derive(kSeed, 81);
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double nu = 1.1 + 5.0 * rng.next_unit();
    const auto x = static_cast<std::int64_t>(1 + rng.next_below(50));
    const auto y = static_cast<std::int64_t>(1 + rng.next_below(50));
    const double quad = oracle::integrate(
        [&](double s) {
          return oracle::g_residual(nu, x, s) * oracle::g_residual(nu, y, s);
        },
        0.0, 1.0, 1e-12);
    const double err = std::abs(kernel_h(nu, x, y) - quad);
    worst = std::max(worst, err);
    ok &= err <= 1e-10;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max |closed form - quadrature| = %.2e (tol 1e-10)", worst);
  report("criterion 8b: kernel closed form vs quadrature", ok, buf);
}

void criterion_8c_stat_k_routes() {
  begin();
  RngStream rng = RngStream::derive(kSeed, 82);
  bool ok = true;
  double worst_rel = 0.0;
  double worst_abs = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const DPareto law(1.3 + 3.0 * rng.next_unit());
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(29));
    Sample xs = law.sample(n, rng);
    for (auto& v : xs) v = std::min<std::int64_t>(v, 60);
    const FrequencyTable table = compress(xs);
    const double nu = 1.1 + 3.9 * rng.next_unit();
    const double via_kernel = stat_k(table, nu);
    const double via_closed = oracle::k_closed_form(xs, nu);
    const double via_quad = oracle::k_quadrature(table.entries(), nu);
    const double rel = std::abs(via_kernel - via_closed) /
                       std::max({std::abs(via_kernel), std::abs(via_closed), 1e-300});
    worst_rel = std::max(worst_rel, rel);
    worst_abs = std::max(worst_abs, std::abs(via_kernel - via_quad));
    ok &= rel <= 1e-10 && std::abs(via_kernel - via_quad) <= 1e-8;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "closed-form rel diff <= %.2e (tol 1e-10), quadrature abs diff <= %.2e (tol 1e-8)",
                worst_rel, worst_abs);
  report("criterion 8c: statistic route agreement", ok, buf);
}

void criterion_8d_sampler_chisq() {
  begin();
  const double chi2_crit = 18.4668;  // chi-square(4), 99.9th percentile
  bool ok = true;
  std::string note;
  int salt = 0;
  for (const double nu : {1.5, 2.0, 3.0}) {
    const DPareto law(nu);
    RngStream rng = RngStream::derive(kSeed, 83, static_cast<std::uint64_t>(salt++));
    const std::int64_t n = 1'000'000;
    std::array<std::int64_t, 5> obs{};
    for (std::int64_t i = 0; i < n; ++i)
      ++obs[static_cast<std::size_t>(std::min<std::int64_t>(law.draw(rng), 5) - 1)];
    double chi2 = 0.0;
    double cum = 0.0;
    for (int k = 1; k <= 4; ++k) {
      const double e = law.pmf(k) * static_cast<double>(n);
      const double d = static_cast<double>(obs[static_cast<std::size_t>(k - 1)]) - e;
      chi2 += d * d / e;
      cum += law.pmf(k);
    }
    const double e5 = (1.0 - cum) * static_cast<double>(n);
    const double d5 = static_cast<double>(obs[4]) - e5;
    chi2 += d5 * d5 / e5;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "chi2(nu=%g) = %.2f ", nu, chi2);
    note += buf;
    ok &= chi2 < chi2_crit;
  }
  note += "(crit 18.47)";
  report("criterion 8d: sampler chi-square", ok, note);
}

void criterion_8e_bootstrap_determinism() {
  begin();
  const DPareto law(2.0);
  RngStream rng = RngStream::derive(kSeed, 84);
  const FrequencyTable data = compress(law.sample(25, rng));
  BootstrapConfig cfg;
  cfg.replicates = 64;
  cfg.master_seed = kSeed;
  std::vector<GofReport> runs;
  for (const int workers : {1, 4, 8}) {
    cfg.worker_count = workers;
    runs.push_back(bootstrap_test(data, StatisticId::k_stat(), cfg));
  }
  const bool ok = runs[0].replicate_values == runs[1].replicate_values &&
                  runs[0].replicate_values == runs[2].replicate_values &&
                  runs[0].p_value == runs[1].p_value && runs[0].p_value == runs[2].p_value &&
                  runs[0].critical_value == runs[1].critical_value &&
                  runs[0].critical_value == runs[2].critical_value;
  report("criterion 8e: bootstrap determinism across worker counts", ok,
         ok ? "bit-identical reports for workers {1,4,8}" : "reports diverged");
}

void criterion_8f_residual_bounds() {
  begin();
  RngStream rng = RngStream::derive(kSeed, 85);
  bool ok = true;
  const double h = 1e-6;
  for (int i = 0; i < 500; ++i) {
    const double nu = 1.1 + 10.0 * rng.next_unit();
    const double s = 0.005 + 0.99 * rng.next_unit();
    const auto x = static_cast<std::int64_t>(1 + rng.next_below(10'000));
    ok &= std::abs(stein_residual(nu, x, s)) <= 3.0;
    const double fd =
        (stein_residual(nu + h, x, s) - stein_residual(nu - h, x, s)) / (2.0 * h);
    ok &= std::abs(fd) <= 1.0 / static_cast<double>(x) + 1e-6;
  }
  report("criterion 8f: residual magnitude and derivative bounds", ok,
         "|g| <= 3 and |d(nu) g| <= 1/x + 1e-6 on 500 random points");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_1_mle();
  criterion_2_slopes();
  criterion_3_table_one();
  criterion_4_table_two();
  criterion_5_bootstrap_pvalues();
  criterion_6_size();
  criterion_7_power();
  criterion_8a_stein_identity();
  criterion_8b_kernel_quadrature();
  criterion_8c_stat_k_routes();
  criterion_8d_sampler_chisq();
  criterion_8e_bootstrap_determinism();
  criterion_8f_residual_bounds();
  const auto total = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  std::printf("acceptance: %d failure(s), total %llds\n", failures,
              static_cast<long long>(total));
  return failures == 0 ? 0 : 1;
}
