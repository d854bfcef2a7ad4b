// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#pragma once

#include "coulphase/core.hpp"

namespace coulphase {

// The log-gamma remainder mu(z) is defined on C \ (-inf, 0] by
//
//     Gamma(z) = sqrt(2 pi) e^{-z} z^{z-1/2} e^{mu(z)},
//
// and satisfies mu(z) - mu(z+1) = (z + 1/2) Log(1 + 1/z) - 1 together with
// mu(z) -> 0 as |z| -> inf. Two evaluation routes are provided: the
// convergent Gudermann series (the reference) and the divergent asymptotic
// Stirling series (the approximation under study).

enum class MuMethod { Gudermann, Stirling };

struct MuResult {
    Complex value;     ///< mu(z)
    long terms_used;   ///< series terms consumed (>= 1)
    double bound;      ///< rigorous |mu(z)| bound, see mu_bound()
    MuMethod method;
};

/// Convergent evaluation of mu(z) by the Gudermann series
///
///     mu(z) = sum_{m>=0} [ (z+m+1/2) Log(1 + 1/(z+m)) - 1 ],
///
/// truncated once the remaining tail, after the closing 1/(12(z+N+1))
/// correction, is below cfg.series_rel_tol * max(|sum|, 1). Arguments on
/// the cut throw std::domain_error; exhausting cfg.max_terms throws
/// ConvergenceError.
MuResult mu_gudermann(Complex z, const EvalConfig& cfg = {});

/// Rigorous bound |mu(z)| <= 1/12 * sec^2(phi/2) / |z| with phi = arg z.
/// Throws std::domain_error for z = 0 or z on the cut.
double mu_bound(Complex z);

/// Partial sum of the asymptotic (non-convergent) Stirling series
/// sum_{n=1}^{n_terms} B_{2n}/((2n-1)2n) z^{-(2n-1)}, 1 <= n_terms <= 10.
Complex mu_stirling(Complex z, int n_terms);

/// Third-order asymptotic series for the correction factor e^{mu(z)}:
/// 1 + 1/(12z) + 1/(288 z^2) - 139/(51840 z^3). Requires |z| >= 1.
Complex exp_mu_series(Complex z);

/// Coulomb phase shift sigma_l from the gamma-ratio split
/// sigma_l = sigma_l^(0) + Im mu(1+l+i eta), with mu evaluated by the
/// Gudermann series. This is the exact reference route, independent of
/// the arctangent-series route in phase_shifts.
double gamma_ratio_phase(int l, double eta, const EvalConfig& cfg = {});

}  // namespace coulphase
