// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include "coulphase/core.hpp"

#include <cmath>

namespace coulphase {

void EvalConfig::validate() const {
    if (!(series_rel_tol > 0.0))
        throw std::invalid_argument("EvalConfig: series_rel_tol must be > 0");
    if (max_terms < 1)
        throw std::invalid_argument("EvalConfig: max_terms must be >= 1");
    if (!(root_abs_tol > 0.0))
        throw std::invalid_argument("EvalConfig: root_abs_tol must be > 0");
    if (stirling_terms < 1)
        throw std::invalid_argument("EvalConfig: stirling_terms must be >= 1");
}

double euler_gamma() {
    return 0.5772156649015328606;
}

double bernoulli_2n(int n) {
    // B_2 .. B_20 as exact rationals.
    static constexpr double table[10] = {
        1.0 / 6.0,          // B_2
        -1.0 / 30.0,        // B_4
        1.0 / 42.0,         // B_6
        -1.0 / 30.0,        // B_8
        5.0 / 66.0,         // B_10
        -691.0 / 2730.0,    // B_12
        7.0 / 6.0,          // B_14
        -3617.0 / 510.0,    // B_16
        43867.0 / 798.0,    // B_18
        -174611.0 / 330.0,  // B_20
    };
    if (n < 1 || n > 10)
        throw std::domain_error("bernoulli_2n: n must be in [1, 10]");
    return table[n - 1];
}

double stirling_coefficient(int n) {
    return bernoulli_2n(n) / ((2.0 * n - 1.0) * (2.0 * n));
}

double zeta_odd(int k, const EvalConfig& cfg) {
    cfg.validate();
    if (k < 1)
        throw std::domain_error("zeta_odd: k must be >= 1");
    const double s = 2.0 * k + 1.0;

    // Direct sum with Kahan compensation. After N terms the tail is
    // int_N^inf t^-s dt - N^-s/2 + O(s N^-s-1); adding the integral
    // leaves a residual of about N^-s/2, which drives the stop test.
    double sum = 0.0, comp = 0.0;
    for (long m = 1; m <= cfg.max_terms; ++m) {
        const double term = std::pow(static_cast<double>(m), -s);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (0.5 * term <= cfg.series_rel_tol * sum) {
            const double tail = std::pow(static_cast<double>(m), 1.0 - s) / (s - 1.0);
            return sum + tail;
        }
    }
    throw ConvergenceError("zeta_odd: term budget exhausted");
}

double half_log_ratio_as_atan(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("half_log_ratio_as_atan: non-finite input");
    if (!(x > 0.0))
        throw std::domain_error("half_log_ratio_as_atan: requires x > 0");
    return std::atan2(y, x);
}

}  // namespace coulphase
