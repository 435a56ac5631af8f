// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "dpgof/dpareto.hpp"

namespace dpgof {

enum class StatKind { K, Z, T, Cn, Sben };

// Identifier of one goodness-of-fit statistic, including the tuning parameter
// where the family has one (Z: Laplace weight decay a > 0; T: Beta weight
// exponent beta >= 0).
struct StatisticId {
  StatKind kind = StatKind::K;
  double param = 0.0;

  static StatisticId k_stat() { return {StatKind::K, 0.0}; }
  static StatisticId z_stat(double a);
  static StatisticId t_stat(double beta);
  static StatisticId cn_stat() { return {StatKind::Cn, 0.0}; }
  static StatisticId sben_stat() { return {StatKind::Sben, 0.0}; }

  std::string label() const;  // "K", "Z(0.5)", "T(2)", "Cn", "Sben"

  friend bool operator==(const StatisticId&, const StatisticId&) = default;
};

struct StatValue {
  StatisticId id{};
  double value = 0.0;
  double nu_used = 0.0;
};

// Closed form of the integral of g_nu(x,s) g_nu(y,s) over s in (0,1).
// Symmetric and positive semidefinite.
double kernel_h(double nu, std::int64_t x, std::int64_t y);

// The proposed statistic: n times the squared L2(0,1) norm of the empirical
// mean of the residual g_nu_hat, evaluated as the multiplicity-weighted
// kernel double sum (1/n) sum_{u,v} c_u c_v h(u,v).
double stat_k(const FrequencyTable& data, double nu_hat);

// Weighted L2 distance between the empirical inverse Mellin transform and its
// fitted counterpart under the weight exp(-a t). The per-observation series is
// truncated with a certified zeta-tail bound; if the bound is unreachable
// within ctl.max_terms the evaluation throws NumericError.
double stat_z(const FrequencyTable& data, double nu_hat, double a, const EvalControl& ctl = {});

// Stein-generator statistic with Beta(., 3+beta) weights. Indicator blocks
// keep the (x/(x-1))^nu ratio away from x = 1; Beta values are computed in
// log space so large sample maxima cannot overflow.
double stat_t(const FrequencyTable& data, double nu_hat, double beta);

// Cramer-von Mises type distance between the empirical and fitted cdf,
// weighted by the empirical pmf (so the sum runs over observed values only).
double stat_cn(const FrequencyTable& data, double nu_hat, const EvalControl& ctl = {});

// Squared discrepancy between the survival-weighted pmf identity and the
// empirical pmf, summed from 1 to the sample maximum.
double stat_sben(const FrequencyTable& data, double nu_hat);

StatValue evaluate_statistic(const StatisticId& id, const FrequencyTable& data, double nu_hat,
                             const EvalControl& ctl = {});

}  // namespace dpgof
