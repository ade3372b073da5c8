#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "logdpp/specfun.hpp"
#include "support.hpp"

using namespace logdpp;
using Catch::Approx;

TEST_CASE("harmonic numbers") {
    CHECK(specfun::harmonic(0) == 0.0);
    CHECK(specfun::harmonic(1) == 1.0);
    CHECK(specfun::harmonic(4) == Approx(25.0 / 12.0).epsilon(1e-14));
    CHECK_THROWS(specfun::harmonic(-1));
}

TEST_CASE("digamma values") {
    const double g = specfun::euler_gamma;
    CHECK(specfun::digamma(1.0) == Approx(-g).margin(1e-13));
    CHECK(specfun::digamma(2.0) == Approx(1.0 - g).margin(1e-13));
    CHECK(specfun::digamma(0.5) ==
          Approx(-g - 2.0 * std::log(2.0)).margin(1e-13));
    CHECK_THROWS(specfun::digamma(0.0));
    CHECK_THROWS(specfun::digamma(-3.0));
}

TEST_CASE("digamma recurrence property") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.1, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(rng);
        CHECK(specfun::digamma(x + 1.0) - specfun::digamma(x) ==
              Approx(1.0 / x).margin(1e-12));
    }
}

TEST_CASE("digamma on negative non-integers") {
    // psi(-1/2) = 2 - gamma - 2 log 2
    CHECK(specfun::digamma(-0.5) ==
          Approx(2.0 - specfun::euler_gamma - 2.0 * std::log(2.0)).margin(1e-12));
}

TEST_CASE("harmonic matches digamma shift") {
    for (long n : {1L, 10L, 100L, 10000L})
        CHECK(specfun::harmonic(n) ==
              Approx(specfun::digamma(double(n) + 1.0) + specfun::euler_gamma)
                  .margin(1e-11));
}

TEST_CASE("log_gamma") {
    CHECK(specfun::log_gamma(1.0) == 0.0);
    CHECK(specfun::log_gamma(2.0) == 0.0);
    CHECK(specfun::log_gamma(0.5) ==
          Approx(0.5 * std::log(specfun::pi)).margin(1e-13));
    CHECK_THROWS(specfun::log_gamma(0.0));
}

TEST_CASE("sum_j_log_j and its asymptotic expansion") {
    CHECK(specfun::sum_j_log_j(1) == 0.0);
    CHECK(specfun::sum_j_log_j(2) == Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    double direct10 = 0.0;
    for (int j = 2; j <= 10; ++j)
        direct10 += j * std::log(double(j));
    CHECK(specfun::sum_j_log_j(10) == Approx(direct10).epsilon(1e-13));
    const double d3 =
        specfun::sum_j_log_j(1000) - specfun::sum_j_log_j_asymptotic(1000);
    const double d4 =
        specfun::sum_j_log_j(10000) - specfun::sum_j_log_j_asymptotic(10000);
    CHECK(std::abs(d4 - d3) < 1e-3); // the O(1) constant has converged
}

TEST_CASE("sine integral") {
    CHECK(specfun::sine_integral(0.0) == 0.0);
    const double oracle = support::integrate(
        [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0,
        specfun::pi);
    CHECK(specfun::sine_integral(specfun::pi) == Approx(oracle).margin(1e-10));
    CHECK(specfun::sine_integral(specfun::pi) == Approx(1.8519370).margin(1e-7));
    CHECK(specfun::sine_integral(1e6) ==
          Approx(0.5 * specfun::pi).margin(1e-6));
    // continuity across the series/continued-fraction switch
    CHECK(specfun::sine_integral(15.999999) ==
          Approx(specfun::sine_integral(16.000001)).margin(1e-9));
    // spot values against the oracle on both branches
    for (double x : {0.5, 2.0, 8.0, 15.0, 20.0, 40.0}) {
        const double ref = support::integrate(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x);
        CHECK(specfun::sine_integral(x) == Approx(ref).margin(1e-10));
    }
}

TEST_CASE("integral of Si(t)/t grows like (pi/2) log x plus a constant") {
    auto f = [](double t) {
        return t == 0.0 ? 1.0 : specfun::sine_integral(t) / t;
    };
    auto residual = [&](double x) {
        // integrate in two pieces so the oscillatory tail is resolved
        const double head = support::integrate(f, 0.0, 100.0, 1e-11);
        const double tail = support::integrate(f, 100.0, x, 1e-11);
        return head + tail -
               (0.5 * specfun::pi * std::log(x) +
                0.5 * specfun::euler_gamma * specfun::pi);
    };
    CHECK(std::abs(residual(1e3)) <= 1e-2);
    CHECK(std::abs(residual(1e4)) <= 1e-3);
}

TEST_CASE("regularized incomplete gamma") {
    // Q(1/2, x) = erfc(sqrt x); Q(1, x) = exp(-x)
    CHECK(specfun::gamma_q(1.0, 2.0) == Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(specfun::gamma_q(0.5, 1.0) ==
          Approx(std::erfc(1.0)).epsilon(1e-12));
    CHECK(specfun::chi_square_tail(0.0, 5.0) == 1.0);
    // chi-square(k=2) tail at x is exp(-x/2)
    CHECK(specfun::chi_square_tail(3.0, 2.0) ==
          Approx(std::exp(-1.5)).epsilon(1e-12));
}
