// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#pragma once

#include "coulphase/core.hpp"

namespace coulphase {

/// Parameters of a semiclassical phase query. The angular momentum enters
/// as lambda = l + 1/2 = k*b; the Sommerfeld parameter relates to the wave
/// number through eta = k * a_half, where a_half is half the head-on
/// distance of closest approach (distinct from the screening length a).
/// The operations below take only the combinations the closed forms
/// depend on; keeping these identities is the caller's responsibility.
struct SemiclassicalQuery {
    double lambda = 0.0;  ///< semiclassical angular momentum, > 0
    double eta = 0.0;     ///< Sommerfeld parameter
    double b = 0.0;       ///< impact parameter, length units, > 0
    double a = 0.0;       ///< screening length, length units, > 0
    double k = 0.0;       ///< asymptotic wave number, inverse length, > 0
};

/// Point-charge WKB phase shift, lambda > 0:
/// sigma(lambda) = eta/2 ln(eta^2+lambda^2)
///               + lambda asin(eta/sqrt(eta^2+lambda^2)) - eta.
double wkb_phase(double lambda, double eta);

/// Eikonal phase with a sharp cutoff at radius a, 0 < b <= a:
/// -(eta/2) ln[(2a + 2 sqrt(a^2-b^2)) / (2a - 2 sqrt(a^2-b^2))],
/// evaluated in the cancellation-free form -eta ln((a + sqrt(a^2-b^2))/b).
double eikonal_sharp(double b, double a, double eta);

/// b << a limit of eikonal_sharp: eta ln(b/(2a)). Requires b < a.
double eikonal_sharp_limit(double b, double a, double eta);

/// Eikonal phase for exponential screening: eta (ln(b/(2a)) - gamma).
double eikonal_exponential(double b, double a, double eta);

/// Eikonal phase for Gaussian screening: eta (ln(b/(2a)) - gamma/2).
double eikonal_gaussian(double b, double a, double eta);

/// Rutherford deflection function Theta(lambda) = 2 atan(eta/lambda),
/// radians, lambda > 0.
double deflection_classical(double lambda, double eta);

/// How deflection_quantum obtains sigma_l - sigma_{l-1}.
enum class QuantumDeflectionRoute {
    SigmaDifference,  ///< explicit difference of two exact phase shifts
    ArctanIdentity,   ///< closed form 2 atan(eta/l)
};

/// Quantum deflection function Theta_q(l) = 2 (sigma_l - sigma_{l-1}),
/// l >= 1. The default route really computes the difference so the
/// identity Theta_q(l) = 2 atan(eta/l) is exercised rather than assumed.
double deflection_quantum(int l, double eta, const EvalConfig& cfg = {},
                          QuantumDeflectionRoute route = QuantumDeflectionRoute::SigmaDifference);

}  // namespace coulphase
