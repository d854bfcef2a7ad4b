// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include "coulphase/semiclassical.hpp"

#include <cmath>

#include "coulphase/phase_shifts.hpp"

namespace coulphase {

namespace {

void require_positive(double v, const char* who, const char* name) {
    if (!std::isfinite(v) || !(v > 0.0))
        throw std::domain_error(std::string(who) + ": " + name + " must be positive and finite");
}

void require_finite(double v, const char* who, const char* name) {
    if (!std::isfinite(v))
        throw std::domain_error(std::string(who) + ": " + name + " must be finite");
}

}  // namespace

double wkb_phase(double lambda, double eta) {
    require_positive(lambda, "wkb_phase", "lambda");
    require_finite(eta, "wkb_phase", "eta");
    // asin(eta/hypot) stays well conditioned for eta >> lambda.
    const double r = std::hypot(eta, lambda);
    return 0.5 * eta * std::log(eta * eta + lambda * lambda) +
           lambda * std::asin(eta / r) - eta;
}

double eikonal_sharp(double b, double a, double eta) {
    require_positive(b, "eikonal_sharp", "b");
    require_positive(a, "eikonal_sharp", "a");
    require_finite(eta, "eikonal_sharp", "eta");
    if (b > a)
        throw std::domain_error("eikonal_sharp: requires b <= a");
    // -(eta/2) ln[(2a+2s)/(2a-2s)] with s = sqrt(a^2-b^2); since
    // 2a - 2s = 2b^2/(a+s) the ratio is (a+s)^2/b^2, which avoids the
    // cancellation at b << a.
    const double s = std::sqrt((a - b) * (a + b));
    return -eta * std::log((a + s) / b);
}

double eikonal_sharp_limit(double b, double a, double eta) {
    require_positive(b, "eikonal_sharp_limit", "b");
    require_positive(a, "eikonal_sharp_limit", "a");
    require_finite(eta, "eikonal_sharp_limit", "eta");
    if (b >= a)
        throw std::domain_error("eikonal_sharp_limit: requires b < a");
    return eta * std::log(b / (2.0 * a));
}

double eikonal_exponential(double b, double a, double eta) {
    require_positive(b, "eikonal_exponential", "b");
    require_positive(a, "eikonal_exponential", "a");
    require_finite(eta, "eikonal_exponential", "eta");
    return eta * (std::log(b / (2.0 * a)) - euler_gamma());
}

double eikonal_gaussian(double b, double a, double eta) {
    require_positive(b, "eikonal_gaussian", "b");
    require_positive(a, "eikonal_gaussian", "a");
    require_finite(eta, "eikonal_gaussian", "eta");
    return eta * (std::log(b / (2.0 * a)) - 0.5 * euler_gamma());
}

double deflection_classical(double lambda, double eta) {
    require_positive(lambda, "deflection_classical", "lambda");
    require_finite(eta, "deflection_classical", "eta");
    return 2.0 * std::atan(eta / lambda);
}

double deflection_quantum(int l, double eta, const EvalConfig& cfg,
                          QuantumDeflectionRoute route) {
    if (l < 1)
        throw std::domain_error("deflection_quantum: requires l >= 1");
    require_finite(eta, "deflection_quantum", "eta");
    if (route == QuantumDeflectionRoute::ArctanIdentity)
        return 2.0 * std::atan(eta / l);
    const double upper = sigma_l_exact({l, eta}, cfg).sigma;
    const double lower = sigma_l_exact({l - 1, eta}, cfg).sigma;
    return 2.0 * (upper - lower);
}

}  // namespace coulphase
