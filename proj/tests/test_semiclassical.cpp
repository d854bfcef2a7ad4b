// Copyright (c) 2026 The coulphase authors. Licensed under the Apache License 2.0; see LICENSE.

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "coulphase/phase_shifts.hpp"
#include "coulphase/semiclassical.hpp"

using namespace coulphase;

TEST_CASE("wkb_phase") {
    CHECK(wkb_phase(1.0, 0.0) == 0.0);
    CHECK(wkb_phase(0.5, 1.0) == doctest::Approx(-0.33485386544584987).epsilon(1e-14));
    CHECK_THROWS_AS(wkb_phase(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(wkb_phase(-1.0, 1.0), std::domain_error);

    SUBCASE("approaches the exact phase as l grows") {
        for (double eta : {0.1, 1.0, 5.0}) {
            double prev = std::abs(wkb_phase(2.5, eta) - sigma_l_exact({2, eta}).sigma);
            for (int l = 3; l <= 30; ++l) {
                const double gap =
                    std::abs(wkb_phase(l + 0.5, eta) - sigma_l_exact({l, eta}).sigma);
                CHECK(gap < prev);
                prev = gap;
            }
        }
    }
}

TEST_CASE("eikonal_sharp") {
    CHECK(eikonal_sharp(2.0, 2.0, 5.0) == 0.0);  // b = a
    // -eta ln((a+s)/b) at b = 0.6 a, eta = 2 is exactly -ln 9.
    CHECK(eikonal_sharp(0.6, 1.0, 2.0) == doctest::Approx(-std::log(9.0)).epsilon(1e-15));
    CHECK_THROWS_AS(eikonal_sharp(1.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(eikonal_sharp(0.0, 1.0, 1.0), std::domain_error);

    SUBCASE("matches the textbook two-log form away from the b << a regime") {
        for (double r : {0.3, 0.5, 0.8, 0.99}) {
            const double s = std::sqrt(1.0 - r * r);
            const double naive = -0.5 * std::log((2.0 + 2.0 * s) / (2.0 - 2.0 * s));
            CHECK(eikonal_sharp(r, 1.0, 1.0) == doctest::Approx(naive).epsilon(1e-12));
        }
    }

    SUBCASE("reduces to the logarithmic limit for b << a") {
        const double sharp = eikonal_sharp(0.001, 1.0, 1.0);
        const double limit = eikonal_sharp_limit(0.001, 1.0, 1.0);
        CHECK(std::abs(sharp - limit) / std::abs(limit) < 1e-4);
        CHECK(limit == doctest::Approx(std::log(0.0005)).epsilon(1e-15));
    }
}

TEST_CASE("eikonal_sharp_limit domain") {
    CHECK(eikonal_sharp_limit(0.5, 1.0, 1.0) ==
          doctest::Approx(std::log(0.25)).epsilon(1e-15));
    CHECK(eikonal_sharp_limit(0.5, 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(eikonal_sharp_limit(1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("exponential and Gaussian screening") {
    CHECK(eikonal_exponential(1.0, 1.0, 0.0) == 0.0);
    CHECK(eikonal_exponential(2.0, 1.0, 1.0) ==
          doctest::Approx(-euler_gamma()).epsilon(1e-15));
    CHECK(eikonal_exponential(1.0, 1.0, 2.0) ==
          doctest::Approx(2.0 * (std::log(0.5) - euler_gamma())).epsilon(1e-15));
    CHECK(eikonal_gaussian(2.0, 1.0, 1.0) ==
          doctest::Approx(-0.5 * euler_gamma()).epsilon(1e-15));

    SUBCASE("the two differ by exactly eta*gamma/2") {
        for (double b : {0.1, 1.0, 7.0}) {
            for (double a : {0.5, 2.0, 40.0}) {
                for (double eta : {-3.0, 0.25, 2.0}) {
                    const double diff = eikonal_exponential(b, a, eta) -
                                        eikonal_gaussian(b, a, eta);
                    CHECK(diff == doctest::Approx(-eta * euler_gamma() / 2.0)
                                      .epsilon(1e-13));
                }
            }
        }
    }
}

TEST_CASE("deflection_classical") {
    CHECK(deflection_classical(1.0, 1.0) ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
    CHECK(deflection_classical(3.7, 0.0) == 0.0);
    CHECK_THROWS_AS(deflection_classical(0.0, 1.0), std::domain_error);

    SUBCASE("equals twice the WKB derivative (finite differences)") {
        const double h = 1e-5;
        for (double lambda : {0.5, 1.0, 2.0, 10.0}) {
            for (double eta : {0.1, 1.0, 4.0}) {
                const double fd =
                    2.0 * (wkb_phase(lambda + h, eta) - wkb_phase(lambda - h, eta)) / (2.0 * h);
                CHECK(std::abs(fd - deflection_classical(lambda, eta)) < 1e-8);
            }
        }
    }
}

TEST_CASE("deflection_quantum") {
    CHECK(deflection_quantum(1, 1.0) ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-13));
    CHECK(deflection_quantum(1, 0.0) == 0.0);
    CHECK_THROWS_AS(deflection_quantum(0, 1.0), std::domain_error);

    SUBCASE("explicit difference equals the arctangent identity") {
        for (int l : {1, 2, 5, 20, 60}) {
            for (double eta : {0.1, 1.0, 5.0}) {
                const double explicit_route = deflection_quantum(l, eta);
                const double identity =
                    deflection_quantum(l, eta, {}, QuantumDeflectionRoute::ArctanIdentity);
                CHECK(std::abs(explicit_route - identity) < 1e-12);
                CHECK(identity == doctest::Approx(2.0 * std::atan(eta / l)).epsilon(1e-15));
                // and matches the classical form at lambda = l
                CHECK(std::abs(explicit_route - deflection_classical(l, eta)) < 1e-12);
            }
        }
    }

    SUBCASE("example value") {
        CHECK(deflection_quantum(5, 0.1) ==
              doctest::Approx(2.0 * std::atan(0.02)).epsilon(1e-12));
    }
}
