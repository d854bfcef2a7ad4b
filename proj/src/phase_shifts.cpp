// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include "coulphase/phase_shifts.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "coulphase/gamma_kernel.hpp"

namespace coulphase {

namespace {

void require_finite_eta(double eta, const char* who) {
    if (!std::isfinite(eta))
        throw std::domain_error(std::string(who) + ": eta must be finite");
}

void require_query(PhaseQuery q, const char* who) {
    if (q.l < 0)
        throw std::domain_error(std::string(who) + ": l must be >= 0");
    require_finite_eta(q.eta, who);
}

// zeta(2k+1) at default tolerance, memoized; the power-series route needs
// a few dozen of these per call.
double zeta_odd_cached(int k) {
    static std::mutex mutex;
    static std::vector<double> cache;  // cache[k-1] = zeta(2k+1)
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) < k)
        cache.push_back(zeta_odd(static_cast<int>(cache.size()) + 1));
    return cache[k - 1];
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

PhaseResult sigma0_exact(double eta, const EvalConfig& cfg) {
    cfg.validate();
    require_finite_eta(eta, "sigma0_exact");
    if (eta == 0.0)
        return PhaseResult{0.0, Method::ExactSum, 0.0, 0};

    // Work with |eta| and restore the sign at the end; every term of the
    // series is odd in eta, so this keeps sigma0(-eta) == -sigma0(eta)
    // exactly.
    const double a = std::abs(eta);
    const double a3 = a * a * a;

    KahanSum series;
    long n = 0;
    double tail = 0.0;
    bool converged = false;
    while (n < cfg.max_terms) {
        const double x = a / (n + 1.0);
        series.add(std::atan(x) - x);
        ++n;
        // Tail from term n onward is ~ -a^3/(6 n^2); adding that estimate
        // leaves ~ a^3/(6 n^3) from its own discretization error plus
        // ~ a^5/(20 n^4) from the quintic term.
        const double nd = static_cast<double>(n);
        tail = a3 / (6.0 * nd * nd);
        const double residual = a3 / (6.0 * nd * nd * nd) + a3 * a * a / (20.0 * nd * nd * nd * nd);
        const double magnitude = std::max(std::abs(euler_gamma() * a + series.sum), 1.0);
        if (2.0 * residual <= cfg.series_rel_tol * magnitude) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("sigma0_exact: term budget exhausted");

    const double sigma_abs = -euler_gamma() * a - (series.sum - tail);
    const double sigma = eta > 0.0 ? sigma_abs : -sigma_abs;
    return PhaseResult{sigma, Method::ExactSum, tail, n};
}

PhaseResult sigma0_power_series(double eta, int k_max) {
    require_finite_eta(eta, "sigma0_power_series");
    if (!(std::abs(eta) < 1.0))
        throw std::domain_error("sigma0_power_series: requires |eta| < 1");
    if (k_max < 0)
        throw std::domain_error("sigma0_power_series: k_max must be >= 0");
    if (eta == 0.0)
        return PhaseResult{0.0, Method::PowerSeries, 0.0, 0};

    const double a = std::abs(eta);
    KahanSum sum;
    sum.add(-euler_gamma() * a);
    double power = a;  // a^{2k+1}
    const double a2 = a * a;
    for (int k = 1; k <= k_max; ++k) {
        power *= a2;
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // -(-1)^k
        sum.add(sign * zeta_odd_cached(k) / (2.0 * k + 1.0) * power);
    }
    const double next = zeta_odd_cached(k_max + 1) / (2.0 * k_max + 3.0) * power * a2;
    const double sigma = eta > 0.0 ? sum.sum : -sum.sum;
    return PhaseResult{sigma, Method::PowerSeries, next, k_max};
}

int power_series_k_for(double eta, double abs_tol) {
    require_finite_eta(eta, "power_series_k_for");
    if (!(std::abs(eta) < 1.0))
        throw std::domain_error("power_series_k_for: requires |eta| < 1");
    if (!(abs_tol > 0.0))
        throw std::domain_error("power_series_k_for: abs_tol must be > 0");
    const double a = std::abs(eta);
    if (a == 0.0) return 0;
    double power = a * a * a;
    for (int k = 1; k < 100000; ++k) {
        if (zeta_odd_cached(k) / (2.0 * k + 1.0) * power < abs_tol)
            return k - 1;  // first omitted term is a_k
        power *= a * a;
    }
    throw ConvergenceError("power_series_k_for: no k satisfies tolerance");
}

PhaseResult sigma_l_exact(PhaseQuery q, const EvalConfig& cfg) {
    require_query(q, "sigma_l_exact");
    PhaseResult base = sigma0_exact(q.eta, cfg);
    KahanSum sum;
    for (int m = 1; m <= q.l; ++m)
        sum.add(std::atan(q.eta / m));
    base.sigma += sum.sum;
    return base;
}

PhaseResult sigma_l_order0(PhaseQuery q) {
    require_query(q, "sigma_l_order0");
    const double lp1 = q.l + 1.0;
    const double r = std::hypot(lp1, q.eta);
    const double sigma =
        (q.l + 0.5) * std::atan(q.eta / lp1) + q.eta * (std::log(r) - 1.0);
    const double bound = 1.0 / (6.0 * (lp1 + r));
    return PhaseResult{sigma, Method::Order0, bound, std::nullopt};
}

double delta_sigma_l(PhaseQuery q) {
    require_query(q, "delta_sigma_l");
    const double lp1 = q.l + 1.0;
    return -q.eta / (12.0 * (lp1 * lp1 + q.eta * q.eta));
}

PhaseResult sigma_l_order1(PhaseQuery q) {
    PhaseResult r = sigma_l_order0(q);
    r.sigma += delta_sigma_l(q);
    r.method = Method::Order1;
    r.error_bound.reset();
    return r;
}

PhaseResult sigma0_large_eta(double eta) {
    require_finite_eta(eta, "sigma0_large_eta");
    if (!(eta > 0.0))
        throw std::domain_error("sigma0_large_eta: requires eta > 0");
    const double sigma = std::numbers::pi / 4.0 + eta * (std::log(eta) - 1.0);
    return PhaseResult{sigma, Method::LargeEta, std::nullopt, std::nullopt};
}

PhaseResult sigma_l_log_approx(PhaseQuery q) {
    require_query(q, "sigma_l_log_approx");
    return PhaseResult{q.eta * std::log(q.l + 1.0), Method::LogApprox,
                       std::nullopt, std::nullopt};
}

double find_sigma0_zero(const EvalConfig& cfg) {
    cfg.validate();
    auto f = [&cfg](double eta) { return sigma0_exact(eta, cfg).sigma; };

    double lo = 1.0, hi = 3.0;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::domain_error("find_sigma0_zero: [1, 3] does not bracket a sign change");

    // Alternate secant and bisection steps: the secant does the precision
    // work on this smooth monotone crossing, the bisection guarantees the
    // bracket keeps shrinking.
    for (int iter = 0; iter < 400 && (hi - lo) > cfg.root_abs_tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (iter % 2 == 0) {
            const double secant = lo - flo * (hi - lo) / (fhi - flo);
            const double margin = 0.01 * (hi - lo);
            if (secant > lo + margin && secant < hi - margin) mid = secant;
        }
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (fmid < 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

Method auto_method(double eta) {
    return std::abs(eta) < 0.5 ? Method::PowerSeries : Method::ExactSum;
}

PhaseResult evaluate(PhaseQuery q, Method method, const EvalConfig& cfg) {
    require_query(q, "evaluate");
    switch (method) {
        case Method::ExactSum:
            return sigma_l_exact(q, cfg);
        case Method::ExactGudermann: {
            PhaseResult r;
            r.sigma = gamma_ratio_phase(q.l, q.eta, cfg);
            r.method = Method::ExactGudermann;
            return r;
        }
        case Method::Order0:
            return sigma_l_order0(q);
        case Method::Order1:
            return sigma_l_order1(q);
        case Method::PowerSeries: {
            const int k = power_series_k_for(q.eta, cfg.series_rel_tol);
            PhaseResult r = sigma0_power_series(q.eta, k);
            KahanSum sum;
            for (int m = 1; m <= q.l; ++m)
                sum.add(std::atan(q.eta / m));
            r.sigma += sum.sum;
            return r;
        }
        case Method::LargeEta:
            return sigma0_large_eta(q.eta);
        case Method::LogApprox:
            return sigma_l_log_approx(q);
    }
    throw std::invalid_argument("evaluate: unknown method");
}

}  // namespace coulphase
