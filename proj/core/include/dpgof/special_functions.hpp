// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "dpgof/errors.hpp"

namespace dpgof {

// Tolerance and budget knobs for series and quadrature evaluation.
//
// abs_tol bounds the certified truncation error of a series or panel
// subdivision; IEEE rounding adds a further O(eps * |result|) on top, which
// only matters for exponents within ~1e-3 of the lower domain edge where the
// zeta values themselves blow up.
struct EvalControl {
  double abs_tol = 1e-12;
  std::int64_t max_terms = 10'000'000;
};

// Working range for the shape exponent. Above kNuMax the law is numerically a
// point mass at 1 (P(X = 1) > 1 - 1e-15); near 1 the normalizing constant
// diverges. Estimation and sampling stay inside this interval.
inline constexpr double kNuMin = 1.0 + 1e-6;
inline constexpr double kNuMax = 50.0;

// Riemann zeta: sum of k^{-nu} over k >= 1, for nu > 1. Direct summation plus
// Euler-Maclaurin tail corrections, opened at an adaptively chosen index.
double zeta(double nu, const EvalControl& ctl = {});

// d/dnu zeta(nu) = -sum ln(k) k^{-nu}; negative everywhere on (1, inf).
double zeta_prime(double nu, const EvalControl& ctl = {});

// Tail sum of k^{-nu} over k >= from (from >= 1). Shares the Euler-Maclaurin
// machinery with zeta; used for cdf values and truncation bounds.
double zeta_tail_sum(double nu, std::int64_t from, const EvalControl& ctl = {});

// Polylogarithm sum of s^k k^{-nu} for s in [0, 1), nu > 1. Plain power series
// with the geometric tail bound (N+1)^{-nu} s^{N+1} / (1-s).
double polylog(double nu, double s, const EvalControl& ctl = {});

// Euler Beta function Gamma(a)Gamma(b)/Gamma(a+b), evaluated in log space.
double beta_fn(double a, double b);
double log_beta(double a, double b);

// Definite integral of f over [lo, hi] by adaptive Simpson subdivision with an
// absolute tolerance. Throws NumericError when the refinement budget runs out.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double abs_tol, int max_depth = 60);

// Integral of f over [0, inf) for integrands dominated by C exp(-a_decay t).
// The envelope constant is probed near 0; the cutoff T is placed where the
// envelope tail bound falls below tolerance, then [0, T] is integrated
// adaptively.
double quad_semi_infinite(const std::function<double(double)>& f, double a_decay,
                          const EvalControl& ctl = {});

}  // namespace dpgof
