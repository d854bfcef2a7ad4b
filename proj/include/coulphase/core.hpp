// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#pragma once

#include <complex>
#include <stdexcept>

namespace coulphase {

/// Complex values use the principal branch throughout: log and sqrt take
/// arg in (-pi, pi], so every function of z is analytic on the cut plane
/// C \ (-inf, 0].
using Complex = std::complex<double>;

/// Thrown when a series or iteration hits its term budget before reaching
/// the requested tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Tolerances and budgets shared by the series evaluators and the root
/// finder. Default-constructed values are suitable for full double
/// precision work.
struct EvalConfig {
    double series_rel_tol = 1e-14;  ///< relative truncation tolerance
    long max_terms = 1000000;       ///< series term budget
    double root_abs_tol = 1e-10;    ///< bracket width for root finding
    int stirling_terms = 3;         ///< default order of asymptotic sums

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

/// Euler--Mascheroni constant, full double precision.
double euler_gamma();

/// Bernoulli number B_{2n} for 1 <= n <= 10 (exact rationals rendered to
/// double). Out-of-range n throws std::domain_error.
double bernoulli_2n(int n);

/// B_{2n} / ((2n-1) 2n), the coefficient of z^{-(2n-1)} in the asymptotic
/// series for the log-gamma remainder. Same domain as bernoulli_2n.
double stirling_coefficient(int n);

/// Riemann zeta at the odd integer 2k+1, k >= 1, by direct summation with
/// an integral tail correction. Relative error is at most
/// cfg.series_rel_tol; exhausting cfg.max_terms throws ConvergenceError.
double zeta_odd(int k, const EvalConfig& cfg = {});

/// atan(y/x) for x > 0, equal to Log((x+iy)/(x-iy)) / (2i) with the
/// principal logarithm. x <= 0 or non-finite input throws
/// std::domain_error.
double half_log_ratio_as_atan(double x, double y);

}  // namespace coulphase
