// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "coulphase/core.hpp"

using namespace coulphase;

TEST_CASE("euler_gamma value and harmonic-sum oracle") {
    CHECK(euler_gamma() == doctest::Approx(0.5772156649015328606).epsilon(1e-15));
    CHECK(euler_gamma() > 0.5);
    CHECK(euler_gamma() < 0.6);

    // gamma = lim_N [ sum_{m=0}^{N} 1/(m+1) - ln(N+1) ]; the partial
    // expression at N = 1e6 sits within 1e-6 of the constant.
    const long N = 1000000;
    double harmonic = 0.0;
    for (long m = N; m >= 0; --m) harmonic += 1.0 / (m + 1.0);
    CHECK(std::abs(harmonic - std::log(N + 1.0) - euler_gamma()) < 1e-6);
}

TEST_CASE("bernoulli numbers and the asymptotic-series coefficients") {
    CHECK(bernoulli_2n(1) == doctest::Approx(1.0 / 6.0).epsilon(1e-16));
    CHECK(bernoulli_2n(2) == doctest::Approx(-1.0 / 30.0).epsilon(1e-16));
    CHECK(bernoulli_2n(3) == doctest::Approx(1.0 / 42.0).epsilon(1e-16));
    CHECK(bernoulli_2n(10) == doctest::Approx(-174611.0 / 330.0).epsilon(1e-16));

    CHECK(stirling_coefficient(1) == doctest::Approx(1.0 / 12.0).epsilon(1e-16));
    CHECK(stirling_coefficient(2) == doctest::Approx(-1.0 / 360.0).epsilon(1e-16));
    CHECK(stirling_coefficient(3) == doctest::Approx(1.0 / 1260.0).epsilon(1e-16));

    CHECK_THROWS_AS(bernoulli_2n(0), std::domain_error);
    CHECK_THROWS_AS(bernoulli_2n(11), std::domain_error);
}

TEST_CASE("zeta at odd integers") {
    // Reference digits computed independently at 50-digit precision.
    CHECK(zeta_odd(1) == doctest::Approx(1.2020569031595942854).epsilon(1e-13));
    CHECK(zeta_odd(2) == doctest::Approx(1.0369277551433699263).epsilon(1e-13));
    CHECK(zeta_odd(3) == doctest::Approx(1.0083492773819228268).epsilon(1e-13));

    SUBCASE("monotone decreasing toward 1") {
        // zeta(2k+1) - 1 ~ 2^-(2k+1) drops below one ulp of 1.0 past
        // k = 25, so strict ordering is only representable up to there.
        double prev = zeta_odd(1);
        for (int k = 2; k <= 25; ++k) {
            const double z = zeta_odd(k);
            CHECK(z > 1.0);
            CHECK(z < prev);
            prev = z;
        }
        for (int k = 26; k <= 40; ++k) {
            const double z = zeta_odd(k);
            CHECK(z >= 1.0);
            CHECK(z <= 1.0 + 1e-15);
        }
    }

    SUBCASE("domain and budget errors") {
        CHECK_THROWS_AS(zeta_odd(0), std::domain_error);
        EvalConfig starved;
        starved.max_terms = 3;
        CHECK_THROWS_AS(zeta_odd(1, starved), ConvergenceError);
    }
}

TEST_CASE("half_log_ratio_as_atan") {
    CHECK(half_log_ratio_as_atan(1.0, 1.0) ==
          doctest::Approx(std::atan(1.0)).epsilon(1e-16));
    CHECK(half_log_ratio_as_atan(1.0, 0.0) == 0.0);
    CHECK(half_log_ratio_as_atan(2.0, 0.5) ==
          doctest::Approx(0.24497866312686415).epsilon(1e-15));
    CHECK_THROWS_AS(half_log_ratio_as_atan(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(half_log_ratio_as_atan(-1.0, 1.0), std::domain_error);

    SUBCASE("agrees with the principal-log evaluation") {
        std::mt19937 rng(20260810);
        std::uniform_real_distribution<double> xs(0.01, 100.0);
        std::uniform_real_distribution<double> ys(-100.0, 100.0);
        for (int i = 0; i < 10000; ++i) {
            const double x = xs(rng), y = ys(rng);
            const std::complex<double> ratio =
                std::complex<double>(x, y) / std::complex<double>(x, -y);
            const double via_log = std::log(ratio).imag() / 2.0;
            CHECK(std::abs(half_log_ratio_as_atan(x, y) - via_log) < 1e-14);
        }
    }
}

TEST_CASE("principal argument flips sign under conjugation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-50.0, 50.0);
    std::uniform_real_distribution<double> im(0.1, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const Complex z(re(rng), im(rng));
        CHECK(std::arg(std::conj(z)) == doctest::Approx(-std::arg(z)).epsilon(1e-15));
    }
}

TEST_CASE("EvalConfig validation") {
    EvalConfig bad;
    bad.series_rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = EvalConfig{};
    bad.max_terms = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = EvalConfig{};
    bad.stirling_terms = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(EvalConfig{}.validate());
}
