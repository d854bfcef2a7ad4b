// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include "coulphase/gamma_kernel.hpp"

#include <cmath>

#include "coulphase/phase_shifts.hpp"

namespace coulphase {

namespace {

bool on_cut(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0;
}

void require_off_cut(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error(std::string(who) + ": non-finite argument");
    if (on_cut(z))
        throw std::domain_error(std::string(who) + ": argument on (-inf, 0]");
}

// One Gudermann term g(w) = (w + 1/2) Log(1 + 1/w) - 1. The direct form
// cancels to O(1/w^2), so for |w| >= 2 it is summed as the series
//   g(w) = sum_{n>=2} (-1)^n (n-1)/(2n(n+1)) w^-n,
// which keeps the relative error of each term at machine level. The
// direct form is only used close to the cut where the term is O(1).
Complex gudermann_term(Complex w) {
    if (std::abs(w) < 2.0) {
        return (w + 0.5) * std::log(1.0 + 1.0 / w) - 1.0;
    }
    const Complex x = 1.0 / w;
    Complex power = x * x;
    Complex sum = 0.0;
    for (int n = 2; n < 1000; ++n) {
        const double coeff = (n % 2 == 0 ? 1.0 : -1.0) * (n - 1.0) / (2.0 * n * (n + 1.0));
        const Complex delta = coeff * power;
        sum += delta;
        if (std::abs(delta) <= 1e-18 * std::abs(sum)) break;
        power *= x;
    }
    return sum;
}

}  // namespace

double mu_bound(Complex z) {
    require_off_cut(z, "mu_bound");
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("mu_bound: z = 0");
    const double phi = std::arg(z);
    const double c = std::cos(0.5 * phi);
    return 1.0 / (12.0 * c * c * std::abs(z));
}

MuResult mu_gudermann(Complex z, const EvalConfig& cfg) {
    cfg.validate();
    require_off_cut(z, "mu_gudermann");

    Complex sum = 0.0, comp = 0.0;
    for (long m = 0; m < cfg.max_terms; ++m) {
        const Complex w = z + static_cast<double>(m);
        const Complex term = gudermann_term(w);
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        // Tail of the series from m+1 onward equals mu(z+m+1), estimated
        // by its leading behavior 1/(12(z+m+1)); what that estimate
        // leaves behind is O(1/(360 |z+m+1|^3)).
        const Complex w1 = z + static_cast<double>(m + 1);
        const double norm = std::max(std::abs(sum), 1.0);
        const double threshold = cfg.series_rel_tol * norm;
        const double aw1 = std::abs(w1);
        const double residual_after_tail = 1.0 / (180.0 * aw1 * aw1 * aw1);
        if (std::abs(term) < threshold || residual_after_tail < threshold) {
            const Complex tail = 1.0 / (12.0 * w1);
            return MuResult{sum + tail, m + 1, mu_bound(z), MuMethod::Gudermann};
        }
    }
    throw ConvergenceError("mu_gudermann: term budget exhausted");
}

Complex mu_stirling(Complex z, int n_terms) {
    require_off_cut(z, "mu_stirling");
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("mu_stirling: z = 0");
    if (n_terms < 1 || n_terms > 10)
        throw std::domain_error("mu_stirling: n_terms must be in [1, 10]");
    const Complex inv2 = 1.0 / (z * z);
    Complex power = 1.0 / z;  // z^{-(2n-1)} for n = 1
    Complex sum = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        sum += stirling_coefficient(n) * power;
        power *= inv2;
    }
    return sum;
}

Complex exp_mu_series(Complex z) {
    require_off_cut(z, "exp_mu_series");
    if (std::abs(z) < 1.0)
        throw std::domain_error("exp_mu_series: requires |z| >= 1");
    const Complex x = 1.0 / z;
    return 1.0 + x / 12.0 + x * x / 288.0 - 139.0 / 51840.0 * x * x * x;
}

double gamma_ratio_phase(int l, double eta, const EvalConfig& cfg) {
    if (l < 0)
        throw std::domain_error("gamma_ratio_phase: l must be >= 0");
    if (!std::isfinite(eta))
        throw std::domain_error("gamma_ratio_phase: eta must be finite");
    // M_{l,eta} = (mu(z) - mu(conj z)) / (2i) = Im mu(1+l+i eta).
    const MuResult mu = mu_gudermann(Complex(1.0 + l, eta), cfg);
    return sigma_l_order0({l, eta}).sigma + mu.value.imag();
}

}  // namespace coulphase
