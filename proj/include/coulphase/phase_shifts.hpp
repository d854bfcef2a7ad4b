// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#pragma once

#include <optional>

#include "coulphase/core.hpp"

namespace coulphase {

/// One phase-shift request: angular momentum l >= 0 and Sommerfeld
/// parameter eta (any finite real).
struct PhaseQuery {
    int l = 0;
    double eta = 0.0;
};

enum class Method {
    ExactSum,        ///< sigma_0 series plus finite arctangent sum
    ExactGudermann,  ///< gamma-ratio split route (gamma_kernel)
    Order0,          ///< closed-form zeroth-order approximation
    Order1,          ///< zeroth order plus first Stirling correction
    PowerSeries,     ///< odd power series in eta, |eta| < 1
    LargeEta,        ///< pi/4 + eta (ln eta - 1)
    LogApprox,       ///< eta ln(l+1)
};

struct PhaseResult {
    double sigma = 0.0;  ///< phase shift, radians
    Method method = Method::ExactSum;
    /// Rigorous error bound where one is defined: the remainder bound on
    /// Order0, the applied tail estimate for ExactSum, the first omitted
    /// term for PowerSeries.
    std::optional<double> error_bound;
    std::optional<long> terms_used;
};

/// s-wave phase shift from the convergent series
///
///     sigma_0 = -gamma eta - sum_{m>=0} [ atan(eta/(m+1)) - eta/(m+1) ],
///
/// valid for all real eta. The sum is truncated at N terms and the cubic
/// tail estimate eta^3/(6 N^2) is added as a correction; truncation stops
/// once the residual left after that correction is below
/// cfg.series_rel_tol * max(|sigma_0|, 1). error_bound reports the tail
/// estimate.
PhaseResult sigma0_exact(double eta, const EvalConfig& cfg = {});

/// Power-series route, |eta| < 1:
/// sigma_0 = -gamma eta - sum_{k=1}^{k_max} (-1)^k zeta(2k+1)/(2k+1) eta^{2k+1}.
/// error_bound is the first omitted term (alternating series).
/// |eta| >= 1 throws std::domain_error.
PhaseResult sigma0_power_series(double eta, int k_max);

/// Smallest k_max for which the alternating-series remainder of
/// sigma0_power_series is below abs_tol. Requires |eta| < 1.
int power_series_k_for(double eta, double abs_tol);

/// sigma_l = sigma_0 + sum_{m=1}^{l} atan(eta/m). Compensated summation
/// keeps the recursion identity tight for large l.
PhaseResult sigma_l_exact(PhaseQuery q, const EvalConfig& cfg = {});

/// Zeroth-order closed form
/// sigma_l^(0) = (l+1/2) atan(eta/(l+1)) + eta (ln sqrt((l+1)^2+eta^2) - 1),
/// with error_bound = 1/(6 (l+1+sqrt((l+1)^2+eta^2))).
PhaseResult sigma_l_order0(PhaseQuery q);

/// First Stirling correction: -eta / (12 ((l+1)^2 + eta^2)).
double delta_sigma_l(PhaseQuery q);

/// sigma_l^(1) = sigma_l^(0) + delta_sigma_l.
PhaseResult sigma_l_order1(PhaseQuery q);

/// Large-eta s-wave form pi/4 + eta (ln eta - 1); requires eta > 0.
PhaseResult sigma0_large_eta(double eta);

/// High-l logarithmic form eta ln(l+1) (returns 0 for l = 0).
PhaseResult sigma_l_log_approx(PhaseQuery q);

/// Positive root of sigma_0(eta) = 0, located in [1, 3] by a safeguarded
/// secant/bisection hybrid to cfg.root_abs_tol. Throws std::domain_error
/// if the bracket does not straddle a sign change.
double find_sigma0_zero(const EvalConfig& cfg = {});

/// Convenience dispatcher: PowerSeries for |eta| < 0.5, ExactSum
/// otherwise. Every route remains individually callable.
Method auto_method(double eta);

/// Evaluate q by the named route.
PhaseResult evaluate(PhaseQuery q, Method method, const EvalConfig& cfg = {});

}  // namespace coulphase
