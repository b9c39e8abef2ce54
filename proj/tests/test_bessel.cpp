#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "ringdecay/specfun.hpp"
#include "support/oracles.hpp"

using namespace ringdecay;

TEST_CASE("bessel_j at the origin")
{
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(17, 0.0) == 0.0);
}

TEST_CASE("first zero of J0 located by bisection on the long-double series")
{
    const long double zero = oracle::bisect([](long double x) { return oracle::bessel_series(0, x); }, 2.0L, 3.0L);
    CHECK(std::abs(bessel_j(0, static_cast<double>(zero))) < 1e-10);
}

TEST_CASE("Jacobi-Anger normalization J0 + 2 sum J_2m = 1")
{
    for (double x : {0.5, 7.3, 40.0}) {
        double sum = bessel_j(0, x);
        for (int m = 1; m <= 60; ++m)
            sum += 2.0 * bessel_j(2 * m, x);
        CAPTURE(x);
        CHECK(std::abs(sum - 1.0) < 1e-10);
    }
}

TEST_CASE("bessel_j against Boost across orders and arguments")
{
    const int orders[] = {0, 1, 2, 3, 5, 10, 24, 50, 99, 100, 101, 250, 1000};
    const double xs[] = {1e-6, 0.01, 0.3, 1.0, 1.9, 2.1, 5.0, 9.9, 12.0, 20.0, 49.5, 99.0,
                         100.0, 101.0, 240.0, 700.0, 1000.0, 3000.0, 1e4};
    double worst = 0.0;
    for (int n : orders) {
        for (double x : xs) {
            const double diff = std::abs(bessel_j(n, x) - oracle::boost_j(n, x));
            if (diff > worst)
                worst = diff;
            CAPTURE(n);
            CAPTURE(x);
            CHECK(diff <= kBesselAbsTolerance);
        }
    }
    MESSAGE("worst |J - boost| = " << worst);
}

TEST_CASE("bessel_j matches the power-series oracle at small arguments")
{
    for (int n : {0, 1, 4, 9}) {
        for (double x : {0.1, 1.5, 3.0, 6.0}) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(bessel_j(n, x) == doctest::Approx(static_cast<double>(oracle::bessel_series(n, x))).epsilon(1e-13));
        }
    }
}

TEST_CASE("bessel_j_sequence agrees with single evaluations")
{
    for (double x : {1e-3, 0.7, 8.0, 63.0, 400.0}) {
        const auto seq = bessel_j_sequence(150, x);
        REQUIRE(seq.size() == 151);
        for (int n = 0; n <= 150; n += 7) {
            CAPTURE(x);
            CAPTURE(n);
            CHECK(std::abs(seq[static_cast<std::size_t>(n)] - bessel_j(n, x)) < 1e-14);
        }
    }
}

TEST_CASE("very high orders underflow cleanly")
{
    CHECK(bessel_j(1'000'000, 10.0) == 0.0);
    const double v = bessel_j(100'000, 5e3);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 1e-300);
    // Near the turning point the value is O(n^{-1/3}).
    CHECK(std::abs(bessel_j(5000, 5000.0) - oracle::boost_j(5000, 5000.0)) < 1e-12);
}

TEST_CASE("negative argument follows parity")
{
    CHECK(bessel_j(3, -2.5) == doctest::Approx(-bessel_j(3, 2.5)).epsilon(1e-15));
    CHECK(bessel_j(4, -2.5) == doctest::Approx(bessel_j(4, 2.5)).epsilon(1e-15));
}

TEST_CASE("bessel_j domain errors")
{
    CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(kMaxBesselOrder + 1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j_sequence(3, std::numeric_limits<double>::infinity()), std::domain_error);
}
