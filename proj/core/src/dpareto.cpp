// SPDX-License-Identifier: Apache-2.0
#include "dpgof/dpareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dpgof {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kScoreTol = 1e-10;
}  // namespace

FrequencyTable FrequencyTable::from_sample(std::span<const std::int64_t> values) {
  if (values.empty()) throw DomainError("FrequencyTable: sample must be non-empty");
  FrequencyTable t;
  for (const std::int64_t v : values) t.add(v, 1);
  return t;
}

void FrequencyTable::add(std::int64_t value, std::int64_t count) {
  if (value < 1) throw DomainError("FrequencyTable: values must be >= 1");
  if (count < 1) throw DomainError("FrequencyTable: multiplicities must be >= 1");
  entries_[value] += count;
  total_ += count;
}

std::int64_t FrequencyTable::max_value() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first;
}

double FrequencyTable::mean_log() const {
  if (total_ == 0) return 0.0;
  long double acc = 0.0L;
  for (const auto& [v, c] : entries_)
    acc += static_cast<long double>(c) * std::log(static_cast<double>(v));
  return static_cast<double>(acc / static_cast<long double>(total_));
}

Sample FrequencyTable::expand() const {
  Sample out;
  out.reserve(static_cast<std::size_t>(total_));
  for (const auto& [v, c] : entries_) out.insert(out.end(), static_cast<std::size_t>(c), v);
  return out;
}

FrequencyTable compress(std::span<const std::int64_t> sample) {
  return FrequencyTable::from_sample(sample);
}

DPareto::DPareto(double nu, const EvalControl& ctl) : nu_(nu) {
  if (!(nu > 1.0) || nu > kNuMax)
    throw DomainError("DPareto: nu must lie in (1, " + std::to_string(kNuMax) + "]");
  zeta_ = zeta(nu, ctl);
}

double DPareto::pmf(std::int64_t k) const {
  if (k < 1) throw DomainError("pmf: k must be >= 1");
  return std::pow(static_cast<double>(k), -nu_) / zeta_;
}

double DPareto::cdf(std::int64_t k) const {
  if (k < 1) throw DomainError("cdf: k must be >= 1");
  if (k <= 64) {
    long double acc = 0.0L;
    for (std::int64_t j = 1; j <= k; ++j) acc += std::pow(static_cast<double>(j), -nu_);
    return static_cast<double>(acc / zeta_);
  }
  return 1.0 - zeta_tail_sum(nu_, k + 1) / zeta_;
}

double DPareto::pgf(double s, const EvalControl& ctl) const {
  if (!(s >= 0.0) || s >= 1.0) throw DomainError("pgf: s must lie in [0, 1)");
  if (s == 0.0) return 0.0;
  return polylog(nu_, s, ctl) / zeta_;
}

std::int64_t DPareto::draw(RngStream& rng) const {
  // Devroye's rejection sampler for the Zipf law. The proposal is the floor of
  // a continuous Pareto variate; acceptance compares against the exact pmf
  // ratio. Expected iterations are O(1) uniformly over the working range.
  const double am1 = nu_ - 1.0;
  const double bm1 = std::expm1(am1 * kLn2);  // 2^{nu-1} - 1
  for (;;) {
    const double u = 1.0 - rng.next_unit();  // (0, 1]
    const double v = rng.next_unit();
    const double xr = std::floor(std::pow(u, -1.0 / am1));
    if (!(xr >= 1.0) || xr >= 9.0e18) continue;  // outside representable support
    const double lg = std::log1p(1.0 / xr);
    const double tm1 = std::expm1(am1 * lg);                // (1 + 1/x)^{nu-1} - 1
    const double t_over_b = std::exp(am1 * (lg - kLn2));    // (1 + 1/x)^{nu-1} / 2^{nu-1}
    if (v * xr * tm1 / bm1 <= t_over_b) return static_cast<std::int64_t>(xr);
  }
}

Sample DPareto::sample(std::int64_t n, RngStream& rng) const {
  if (n < 1) throw DomainError("sample: n must be >= 1");
  Sample out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.push_back(draw(rng));
  return out;
}

double stein_residual(double nu, std::int64_t x, double s) {
  if (x < 1) throw DomainError("stein_residual: x must be >= 1");
  if (!(s > 0.0) || !(s < 1.0)) throw DomainError("stein_residual: s must lie in (0, 1)");
  if (!(nu > 1.0)) throw DomainError("stein_residual: nu must exceed 1");
  const double xd = static_cast<double>(x);
  const double ratio_pow = std::exp(-nu * std::log1p(1.0 / xd));  // (x/(x+1))^nu
  const double sx = std::pow(s, xd);
  return std::pow(s, xd - 1.0) - 1.0 + ratio_pow * (1.0 - sx);
}

double stein_residual_dnu(double nu, std::int64_t x, double s) {
  if (x < 1) throw DomainError("stein_residual_dnu: x must be >= 1");
  if (!(s > 0.0) || !(s < 1.0)) throw DomainError("stein_residual_dnu: s must lie in (0, 1)");
  if (!(nu > 1.0)) throw DomainError("stein_residual_dnu: nu must exceed 1");
  const double xd = static_cast<double>(x);
  const double lg = std::log1p(1.0 / xd);  // -ln(x/(x+1))
  return -std::exp(-nu * lg) * lg * (1.0 - std::pow(s, xd));
}

double mle_score(double nu, double mean_log, const EvalControl& ctl) {
  return zeta_prime(nu, ctl) / zeta(nu, ctl) + mean_log;
}

ShapeFit fit_mle(const FrequencyTable& data, const EvalControl& ctl) {
  if (data.total() < 1) throw DomainError("fit_mle: data must be non-empty");
  const double mean_log = data.mean_log();
  const double lo = kNuMin;
  const double hi = kNuMax;

  const double f_hi = mle_score(hi, mean_log, ctl);
  if (f_hi <= 0.0) {
    // Score is still nonpositive at the cap: no root in range. Happens exactly
    // when mean_log is (numerically) zero, i.e. an all-ones sample.
    return {hi, f_hi, lo, hi, true};
  }
  double a = lo;
  double b = hi;
  double fa = mle_score(a, mean_log, ctl);
  double fb = f_hi;
  if (fa >= 0.0) {
    // Unreachable for representable data (score at the lower edge is about
    // -1e6 + mean_log and mean_log <= ln(2^63)), but keep the fit honest.
    return {a, fa, lo, hi, false};
  }

  // Brent's method; the score is strictly increasing so the root is unique.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 1e-15;
    const double xm = 0.5 * (c - b);
    if (std::abs(fb) <= kScoreTol || fb == 0.0 || std::abs(xm) <= tol1) {
      return {b, fb, lo, hi, false};
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    fb = mle_score(b, mean_log, ctl);
  }
  throw NumericError("fit_mle: Brent iteration did not converge");
}

}  // namespace dpgof
