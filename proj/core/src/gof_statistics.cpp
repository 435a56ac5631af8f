// SPDX-License-Identifier: Apache-2.0
#include "dpgof/gof_statistics.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "dpgof/errors.hpp"

namespace dpgof {

namespace {

struct Entry {
  std::int64_t value;
  double count;
  double log_value;
};

std::vector<Entry> entries_of(const FrequencyTable& data) {
  std::vector<Entry> out;
  out.reserve(data.distinct());
  for (const auto& [v, c] : data.entries())
    out.push_back({v, static_cast<double>(c), std::log(static_cast<double>(v))});
  return out;
}

void require_inputs(const FrequencyTable& data, double nu_hat) {
  if (data.total() < 1) throw DomainError("statistic: data must be non-empty");
  if (!(nu_hat > 1.0) || nu_hat > kNuMax)
    throw DomainError("statistic: nu_hat must lie in (1, 50]");
}

// Series for the observation-dependent Mellin term: sum over s >= 1 of
// s^{-nu} / (a + ln(s x)). Truncated where the zeta-tail bound
// S^{1-nu} / ((nu-1)(a + ln(Sx))) drops below tail_tol.
double mellin_series(double nu, double a, double log_x, double tail_tol,
                     std::int64_t max_terms) {
  long double acc = 0.0L;
  for (std::int64_t s = 1; s <= max_terms; ++s) {
    const double sd = static_cast<double>(s);
    const double denom = a + std::log(sd) + log_x;
    acc += std::pow(sd, -nu) / denom;
    if (s >= 8) {
      const double bound = std::pow(sd, 1.0 - nu) / ((nu - 1.0) * denom);
      if (bound <= tail_tol) return static_cast<double>(acc);
    }
  }
  char msg[160];
  std::snprintf(msg, sizeof(msg),
                "stat_z: series truncation bound unreachable within %lld terms "
                "(nu=%.6g, a=%.6g, ln x=%.6g)",
                static_cast<long long>(max_terms), nu, a, log_x);
  throw NumericError(msg);
}

}  // namespace

StatisticId StatisticId::z_stat(double a) {
  if (!(a > 0.0)) throw DomainError("StatisticId: Z tuning parameter a must be positive");
  return {StatKind::Z, a};
}

StatisticId StatisticId::t_stat(double beta) {
  if (!(beta >= 0.0)) throw DomainError("StatisticId: T tuning parameter beta must be >= 0");
  return {StatKind::T, beta};
}

std::string StatisticId::label() const {
  char buf[48];
  switch (kind) {
    case StatKind::K:
      return "K";
    case StatKind::Z:
      std::snprintf(buf, sizeof(buf), "Z(%g)", param);
      return buf;
    case StatKind::T:
      std::snprintf(buf, sizeof(buf), "T(%g)", param);
      return buf;
    case StatKind::Cn:
      return "Cn";
    case StatKind::Sben:
      return "Sben";
  }
  return "?";
}

double kernel_h(double nu, std::int64_t x, std::int64_t y) {
  if (!(nu > 1.0) || nu > kNuMax) throw DomainError("kernel_h: nu must lie in (1, 50]");
  if (x < 1 || y < 1) throw DomainError("kernel_h: x and y must be >= 1");
  if (x > y) std::swap(x, y);  // canonical order makes symmetry bit-exact
  const double xd = static_cast<double>(x);
  const double yd = static_cast<double>(y);
  const double rx = std::exp(-(nu + 1.0) * std::log1p(1.0 / xd));  // (x/(x+1))^{nu+1}
  const double ry = std::exp(-(nu + 1.0) * std::log1p(1.0 / yd));
  const double sum = xd + yd;
  return 1.0 / (sum - 1.0) - (1.0 / xd + 1.0 / yd) +
         rx * ((xd + 1.0) / (yd * sum) - 1.0) + ry * ((yd + 1.0) / (xd * sum) - 1.0) +
         rx * ry * (sum + 2.0) / (sum + 1.0) + 1.0;
}

double stat_k(const FrequencyTable& data, double nu_hat) {
  require_inputs(data, nu_hat);
  const auto es = entries_of(data);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < es.size(); ++i) {
    acc += static_cast<long double>(es[i].count) * es[i].count *
           kernel_h(nu_hat, es[i].value, es[i].value);
    for (std::size_t j = i + 1; j < es.size(); ++j)
      acc += 2.0L * es[i].count * es[j].count * kernel_h(nu_hat, es[i].value, es[j].value);
  }
  return static_cast<double>(acc / static_cast<long double>(data.total()));
}

double stat_z(const FrequencyTable& data, double nu_hat, double a, const EvalControl& ctl) {
  require_inputs(data, nu_hat);
  if (!(a > 0.0)) throw DomainError("stat_z: a must be positive");
  const auto es = entries_of(data);
  const double n = static_cast<double>(data.total());
  const double z = zeta(nu_hat, ctl);

  // (1/n) sum over pairs of 1 / (a + ln(x_j x_k)); ln of the product is the
  // sum of logs, which keeps huge observation products finite.
  long double pair_sum = 0.0L;
  for (std::size_t i = 0; i < es.size(); ++i) {
    pair_sum += static_cast<long double>(es[i].count) * es[i].count /
                (a + 2.0 * es[i].log_value);
    for (std::size_t j = i + 1; j < es.size(); ++j)
      pair_sum += 2.0L * es[i].count * es[j].count /
                  (a + es[i].log_value + es[j].log_value);
  }
  pair_sum /= n;

  // Keep the total truncation error across all n observations below 1e-10.
  const double tail_tol = 1e-10 / n;
  long double series_sum = 0.0L;
  for (const Entry& e : es)
    series_sum += static_cast<long double>(e.count) *
                  mellin_series(nu_hat, a, e.log_value, tail_tol, ctl.max_terms);

  const double data_free = quad_semi_infinite(
      [&](double t) {
        const double zz = zeta(nu_hat + t, ctl);
        return zz * zz * std::exp(-a * t);
      },
      a, ctl);

  return static_cast<double>(z * z * pair_sum + n * data_free - 2.0 * z * series_sum);
}

double stat_t(const FrequencyTable& data, double nu_hat, double beta) {
  require_inputs(data, nu_hat);
  if (!(beta >= 0.0)) throw DomainError("stat_t: beta must be >= 0");
  const auto es = entries_of(data);
  const double c3 = 3.0 + beta;
  const double lgamma_c3 = std::lgamma(c3);
  const auto beta_at = [&](double m) {
    return std::exp(std::lgamma(m) + lgamma_c3 - std::lgamma(m + c3));
  };

  // Stein ratio (x/(x-1))^nu, defined for x >= 2 only.
  std::vector<double> ratio(es.size(), 0.0);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i].value >= 2)
      ratio[i] = std::exp(-nu_hat * std::log1p(-1.0 / static_cast<double>(es[i].value)));

  const double b3 = beta_at(3.0);
  // Symmetric pair kernel; entries are sorted so es[i].value <= es[j].value.
  const auto pair_kernel = [&](std::size_t i, std::size_t j) {
    if (es[j].value == 1) return b3;  // both observations equal 1
    const double sum = static_cast<double>(es[i].value) + static_cast<double>(es[j].value);
    if (es[i].value == 1) return beta_at(sum + 1.0) - ratio[j] * beta_at(sum);
    const double b_lo = beta_at(sum - 1.0);
    const double b_mid = b_lo * (sum - 1.0) / (sum - 1.0 + c3);
    const double b_hi = b_mid * sum / (sum + c3);
    return b_hi - (ratio[i] + ratio[j]) * b_mid + ratio[i] * ratio[j] * b_lo;
  };

  long double acc = 0.0L;
  for (std::size_t i = 0; i < es.size(); ++i) {
    acc += static_cast<long double>(es[i].count) * es[i].count * pair_kernel(i, i);
    for (std::size_t j = i + 1; j < es.size(); ++j)
      acc += 2.0L * es[i].count * es[j].count * pair_kernel(i, j);
  }
  return static_cast<double>(acc / static_cast<long double>(data.total()));
}

double stat_cn(const FrequencyTable& data, double nu_hat, const EvalControl& ctl) {
  require_inputs(data, nu_hat);
  const DPareto fitted(nu_hat, ctl);
  const double n = static_cast<double>(data.total());
  long double acc = 0.0L;
  std::int64_t cumulative = 0;
  for (const auto& [v, c] : data.entries()) {
    cumulative += c;
    const double diff = static_cast<double>(cumulative) / n - fitted.cdf(v);
    acc += static_cast<long double>(diff) * diff * (static_cast<double>(c) / n);
  }
  return static_cast<double>(n * acc);
}

double stat_sben(const FrequencyTable& data, double nu_hat) {
  require_inputs(data, nu_hat);
  const double n = static_cast<double>(data.total());
  const auto& entries = data.entries();

  // The survival-weighted term e_n(k) is a right-continuous step function that
  // changes only at observed values; between them the empirical pmf vanishes,
  // so each gap contributes gap_length * e_n^2.
  std::vector<long double> suffix(entries.size(), 0.0L);
  {
    long double run = 0.0L;
    std::size_t i = entries.size();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      const double v = static_cast<double>(it->first);
      run += static_cast<long double>(it->second) *
             (1.0 - std::exp(-nu_hat * std::log1p(1.0 / v)));
      suffix[--i] = run / n;
    }
  }

  long double acc = 0.0L;
  std::int64_t prev = 0;
  std::size_t i = 0;
  for (const auto& [v, c] : entries) {
    const long double e_val = suffix[i++];
    const long double gap = static_cast<long double>(v - prev - 1);
    acc += gap * e_val * e_val;
    const long double d = e_val - static_cast<long double>(c) / n;
    acc += d * d;
    prev = v;
  }
  return static_cast<double>(acc);
}

StatValue evaluate_statistic(const StatisticId& id, const FrequencyTable& data, double nu_hat,
                             const EvalControl& ctl) {
  double value = 0.0;
  switch (id.kind) {
    case StatKind::K:
      value = stat_k(data, nu_hat);
      break;
    case StatKind::Z:
      value = stat_z(data, nu_hat, id.param, ctl);
      break;
    case StatKind::T:
      value = stat_t(data, nu_hat, id.param);
      break;
    case StatKind::Cn:
      value = stat_cn(data, nu_hat, ctl);
      break;
    case StatKind::Sben:
      value = stat_sben(data, nu_hat);
      break;
  }
  return {id, value, nu_hat};
}

}  // namespace dpgof
