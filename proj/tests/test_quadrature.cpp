#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "logdpp/closedform.hpp"
#include "logdpp/quadrature.hpp"
#include "support.hpp"

using namespace logdpp;
using Catch::Approx;

TEST_CASE("gauss rule basics") {
    const auto leg2 = quadrature::gauss_rule(0.5, 2);
    REQUIRE(leg2.nodes.size() == 2);
    CHECK(leg2.nodes[0] == Approx(-1.0 / std::sqrt(3.0)).margin(1e-13));
    CHECK(leg2.nodes[1] == Approx(1.0 / std::sqrt(3.0)).margin(1e-13));
    for (double lam : {-0.25, 0.0, 0.5, 1.0, 2.5}) {
        const auto rule = quadrature::gauss_rule(lam, 12);
        double mass = 0.0, x2 = 0.0;
        for (int i = 0; i < rule.order; ++i) {
            mass += rule.weights[i];
            x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
        }
        CHECK(mass == Approx(1.0).margin(1e-12));
        // second moment of w^lambda is 1/(2 lambda + 2)
        CHECK(x2 == Approx(1.0 / (2.0 * lam + 2.0)).margin(1e-12));
    }
}

TEST_CASE("gauss rule polynomial exactness") {
    const auto rule = quadrature::gauss_rule(1.0, 6);
    // degree <= 11 monomial moments of w^1(x) = (2/pi) sqrt(1-x^2):
    // odd vanish, int x^{2m} w = Catalan-type value C_m / 4^m / (m+1)...
    auto moment = [&](int p) {
        double s = 0.0;
        for (int i = 0; i < rule.order; ++i)
            s += rule.weights[i] * std::pow(rule.nodes[i], p);
        return s;
    };
    auto exact = [](int p) -> double {
        if (p % 2 == 1)
            return 0.0;
        const int m = p / 2;
        // int x^{2m} w^1 dx = binom(2m, m) / (4^m (m+1))
        double b = 1.0;
        for (int j = 1; j <= m; ++j)
            b *= double(m + j) / double(j);
        return b / (std::pow(4.0, m) * double(m + 1));
    };
    for (int p = 0; p <= 11; ++p)
        CHECK(moment(p) == Approx(exact(p)).margin(1e-12));
}

TEST_CASE("graded 1-D integrator handles log endpoint singularities") {
    quadrature::GradedOptions opt;
    opt.endpoint_tol = 1e-12;
    opt.max_depth = 64;
    // int_0^1 log x dx = -1, singular at the left end
    opt.grade_right = false;
    const auto r = quadrature::integrate_graded(
        [](double x) { return std::log(x); }, 0.0, 1.0, opt);
    CHECK(r.value == Approx(-1.0).margin(1e-10));
    // int_0^1 x^{-1/2} dx = 2 (power singularity like lambda = -1/4 weights)
    const auto r2 = quadrature::integrate_graded(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(r2.value == Approx(2.0).margin(1e-8));
}

TEST_CASE("L1 quadrature matches the exact Chebyshev values") {
    for (int n : {1, 4}) {
        const auto r = quadrature::integrate_L1(0.0, n, 1e-7);
        CHECK(r.converged);
        CHECK(r.value == Approx(closedform::L1_cheb(n)).margin(1e-6));
    }
    CHECK(quadrature::integrate_L1(0.0, 1, 1e-7).value ==
          Approx(4.0 * std::log(2.0) + 0.25).margin(1e-6));
}

TEST_CASE("L2 quadrature matches the exact Chebyshev values") {
    const auto r1 = quadrature::integrate_L2(0.0, 1, 1e-7);
    CHECK(r1.value == Approx(2.0 * std::log(2.0) + 2.25).margin(1e-6));
    const auto r3 = quadrature::integrate_L2(0.0, 3, 1e-7);
    CHECK(r3.value == Approx(closedform::L2_cheb(3)).margin(1e-6));
}

TEST_CASE("L1 lower bound") {
    for (double lam : {-0.25, 0.5, 1.5}) {
        const int n = 4;
        const auto r = quadrature::integrate_L1(lam, n, 1e-6);
        CHECK(r.value >= double(n + 1) * double(n + 1) * std::log(2.0) - 1e-6);
    }
}

TEST_CASE("halving the tolerance does not increase the deviation") {
    const double exact = closedform::L1_cheb(3);
    const double d1 =
        std::abs(quadrature::integrate_L1(0.0, 3, 4e-5).value - exact);
    const double d2 =
        std::abs(quadrature::integrate_L1(0.0, 3, 5e-7).value - exact);
    CHECK(d2 <= std::max(d1, 5e-7));
}

TEST_CASE("L3 quadrature endpoints and special values") {
    const auto r0 = quadrature::integrate_L3(0.0, 0, 1e-8);
    CHECK(r0.value == Approx(2.0 * std::log(2.0)).margin(1e-7));
    const auto rh = quadrature::integrate_L3(0.5, 0, 1e-8);
    CHECK(rh.value == Approx(2.0 - 2.0 * std::log(2.0)).margin(1e-7));
    const auto r3 = quadrature::integrate_L3(0.0, 3, 1e-8);
    CHECK(r3.value ==
          Approx(8.0 * std::log(2.0) + specfun::harmonic(3)).margin(1e-7));
}

TEST_CASE("expected energy numeric vs exact at lambda 0") {
    const auto e1 = quadrature::expected_energy_numeric(0.0, 1, 1e-7);
    CHECK(e1.value == Approx(2.0 * std::log(2.0) - 2.0).margin(2e-6));
    const auto e5 = quadrature::expected_energy_numeric(0.0, 5, 1e-7);
    CHECK(e5.value == Approx(closedform::E0_exact(6)).margin(2e-6));
}

TEST_CASE("mixed moment quadrature") {
    const auto j11 = quadrature::integrate_J_moment(1, 1, 1e-7);
    CHECK(j11.value == Approx(0.25).margin(1e-6));
    const auto j00 = quadrature::integrate_J_moment(0, 0, 1e-7);
    CHECK(j00.value == Approx(0.0).margin(1e-6));
    const auto j21 = quadrature::integrate_J_moment(2, 1, 1e-7);
    CHECK(j21.value == Approx(0.0).margin(1e-6));
}

TEST_CASE("cosine-log integrals") {
    for (int k = 1; k <= 3; ++k) {
        auto plain = [k](double a) { return std::cos(k * a); };
        CHECK(quadrature::integrate_cos_log(plain, 2.0 * k + 1.0, 1e-9).value ==
              Approx(1.0 / k).margin(1e-7));
        auto squared = [k](double a) {
            const double c = std::cos(k * a);
            return c * c;
        };
        CHECK(quadrature::integrate_cos_log(squared, 2.0 * k + 1.0, 1e-9).value ==
              Approx(1.0 / (4.0 * k)).margin(1e-7));
    }
    auto mixed = [](double a) { return std::cos(2.0 * a) * std::cos(a); };
    CHECK(quadrature::integrate_cos_log(mixed, 5.0, 1e-9).value ==
          Approx(2.0 / 3.0).margin(1e-7));
}
