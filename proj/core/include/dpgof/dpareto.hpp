// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dpgof/rng.hpp"
#include "dpgof/special_functions.hpp"

namespace dpgof {

using Sample = std::vector<std::int64_t>;

// Observed counts as a distinct-value -> multiplicity map. This is the
// canonical internal representation: all double-sum statistics run over
// distinct values with multiplicity weights, O(d^2) instead of O(n^2).
class FrequencyTable {
 public:
  FrequencyTable() = default;

  static FrequencyTable from_sample(std::span<const std::int64_t> values);

  void add(std::int64_t value, std::int64_t count = 1);

  const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }
  std::int64_t total() const { return total_; }
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t max_value() const;

  // (1/n) sum of c_v ln(v).
  double mean_log() const;

  // All observations, ascending; inverse of compress up to ordering.
  Sample expand() const;

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::map<std::int64_t, std::int64_t> entries_;
  std::int64_t total_ = 0;
};

FrequencyTable compress(std::span<const std::int64_t> sample);

// Result of the shape-exponent fit.
struct ShapeFit {
  double nu_hat = 0.0;
  double score_residual = 0.0;  // score equation value at nu_hat
  double bracket_lo = 0.0;      // search bracket containing nu_hat
  double bracket_hi = 0.0;
  bool degenerate = false;  // no root in range (all-ones data); nu_hat clamped
};

// Discrete Pareto (Zipf) law on {1, 2, ...} with P(X = k) proportional to
// k^{-nu}. The normalizing constant is computed once at construction; all
// member calls are pure and safe to share across threads.
class DPareto {
 public:
  explicit DPareto(double nu, const EvalControl& ctl = {});

  double nu() const { return nu_; }
  double zeta_value() const { return zeta_; }

  double pmf(std::int64_t k) const;
  double cdf(std::int64_t k) const;
  double pgf(double s, const EvalControl& ctl = {}) const;

  // One exact draw by rejection against the continuous Pareto envelope.
  std::int64_t draw(RngStream& rng) const;
  Sample sample(std::int64_t n, RngStream& rng) const;

 private:
  double nu_;
  double zeta_;
};

// Residual of the generating-function identity characterizing the law:
//   g_nu(x, s) = s^{x-1} - 1 + (x/(x+1))^nu (1 - s^x),
// with E[g_nu(X, s)] = 0 for all s in (0,1) exactly when X ~ DPareto(nu).
double stein_residual(double nu, std::int64_t x, double s);

// Closed-form partial derivative of the residual in nu.
double stein_residual_dnu(double nu, std::int64_t x, double s);

// Score function of the log likelihood: zeta'(nu)/zeta(nu) + mean_log.
double mle_score(double nu, double mean_log, const EvalControl& ctl = {});

// Maximum-likelihood estimate of nu: the unique root of the score over
// (kNuMin, kNuMax], found by Brent iteration to |score| <= 1e-10. All-ones
// data admits no root; nu_hat clamps to kNuMax with degenerate = true.
ShapeFit fit_mle(const FrequencyTable& data, const EvalControl& ctl = {});

}  // namespace dpgof
