#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "logdpp/fekete.hpp"
#include "logdpp/orthopoly.hpp"
#include "logdpp/quadrature.hpp"
#include "support.hpp"

using namespace logdpp;
using orthopoly::GegenbauerParam;
using orthopoly::KernelContext;
using Catch::Approx;

TEST_CASE("weight values and normalization") {
    CHECK(orthopoly::weight(GegenbauerParam(0.5), 0.3) == Approx(0.5));
    CHECK(orthopoly::weight(GegenbauerParam(0.0), 0.0) ==
          Approx(1.0 / specfun::pi));
    CHECK_THROWS(orthopoly::weight(GegenbauerParam(0.0), 1.0));
    for (double lam : {-0.25, 0.0, 1.0, 2.5}) {
        const GegenbauerParam p(lam);
        // integrate in theta to absorb the endpoint singularity
        const double mass = support::integrate(
            [&](double th) { return orthopoly::weight_theta(p, th); }, 1e-14,
            specfun::pi - 1e-14, 1e-13);
        CHECK(mass == Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("gegenbauer values") {
    CHECK(orthopoly::gegenbauer(GegenbauerParam(1.5), 0, 0.7) == 1.0);
    CHECK(orthopoly::gegenbauer(GegenbauerParam(1.5), 5, 1.0) == Approx(21.0));
    // C_2^1(x) = 4x^2 - 1
    CHECK(orthopoly::gegenbauer(GegenbauerParam(1.0), 2, 0.5) ==
          Approx(4.0 * 0.25 - 1.0));
    // lambda = 0 branch is Chebyshev
    CHECK(orthopoly::gegenbauer(GegenbauerParam(0.0), 3, 0.4) ==
          Approx(4.0 * 0.064 - 3.0 * 0.4).margin(1e-14));
}

TEST_CASE("chebyshev recurrence consistency at lambda near 0") {
    // small-lambda recurrence values approach cos(k arccos x)
    const GegenbauerParam tiny(1e-12);
    const GegenbauerParam cheb(0.0);
    for (int k = 1; k <= 50; ++k) {
        const double x = std::cos(0.3 + 0.01 * k);
        const double t = orthopoly::gegenbauer(cheb, k, x);
        // C_k^lambda / lambda -> (2/k) T_k as lambda -> 0 for k >= 1
        const double scaled =
            orthopoly::gegenbauer(tiny, k, x) / 1e-12 * (k / 2.0);
        CHECK(scaled == Approx(t).margin(1e-9));
    }
}

TEST_CASE("jacobi11 values") {
    CHECK(orthopoly::jacobi11(0, 0.2) == 1.0);
    CHECK(orthopoly::jacobi11(3, 1.0) == Approx(4.0));
    CHECK(orthopoly::jacobi11(2, 1.0 / std::sqrt(5.0)) == Approx(0.0).margin(1e-15));
    for (int m = 0; m <= 6; ++m)
        CHECK(orthopoly::jacobi11(m, 1.0) == Approx(double(m + 1)));
}

TEST_CASE("jacobi11 zero interlacing") {
    for (int m = 1; m <= 10; ++m) {
        const auto za = logdpp::fekete::jacobi11_zeros(m);
        const auto zb = logdpp::fekete::jacobi11_zeros(m + 1);
        for (int i = 0; i < m; ++i) {
            CHECK(zb[i] < za[i]);
            CHECK(za[i] < zb[i + 1]);
        }
    }
}

TEST_CASE("normalized basis values") {
    const KernelContext c0(GegenbauerParam(0.0), 5);
    CHECK(orthopoly::gegenbauer_normalized(c0, 0, 0.37) == 1.0);
    CHECK(orthopoly::gegenbauer_normalized(c0, 3, 1.0) ==
          Approx(std::sqrt(2.0)));
    CHECK_THROWS(orthopoly::gegenbauer_normalized(c0, 6, 0.0));
}

TEST_CASE("orthonormality under the weight") {
    const GegenbauerParam p(0.8);
    const KernelContext ctx(p, 6);
    const auto rule = quadrature::gauss_rule(0.8, 40);
    for (int j = 0; j <= 6; ++j)
        for (int k = j; k <= 6; ++k) {
            double s = 0.0;
            for (int i = 0; i < rule.order; ++i)
                s += rule.weights[i] *
                     orthopoly::gegenbauer_normalized(ctx, j, rule.nodes[i]) *
                     orthopoly::gegenbauer_normalized(ctx, k, rule.nodes[i]);
            CHECK(s == Approx(j == k ? 1.0 : 0.0).margin(1e-9));
        }
}

TEST_CASE("chebyshev kernel closed form") {
    const int n = 7;
    const KernelContext ctx(GegenbauerParam(0.0), n);
    for (double theta : {0.3, 1.0, 2.2}) {
        const double x = std::cos(theta);
        const double expected =
            1.0 + n +
            std::cos((n + 1.0) * theta) * std::sin(n * theta) / std::sin(theta);
        CHECK(orthopoly::kernel_diag(ctx, x) == Approx(expected).margin(1e-10));
        // diagonal equals the direct sum of squares
        double direct = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double v = orthopoly::gegenbauer_normalized(ctx, k, x);
            direct += v * v;
        }
        CHECK(orthopoly::kernel_diag(ctx, x) == Approx(direct).margin(1e-10));
    }
}

TEST_CASE("kernel branches agree at the switch threshold") {
    for (double lam : {-0.25, 0.5, 2.0}) {
        const KernelContext ctx(GegenbauerParam(lam), 9);
        const double eps = ctx.cd_switch_threshold;
        for (double x : {-0.62, 0.11, 0.54}) {
            const double direct =
                orthopoly::detail::kernel_direct(ctx, x, x + 2.0 * eps);
            const double cd = orthopoly::kernel(ctx, x, x + 2.0 * eps);
            CHECK(cd == Approx(direct).margin(1e-9));
        }
    }
}

TEST_CASE("kernel symmetry") {
    const KernelContext ctx(GegenbauerParam(0.5), 8);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-0.99, 0.99);
    for (int i = 0; i < 50; ++i) {
        const double x = dist(rng);
        const double y = dist(rng);
        CHECK(orthopoly::kernel(ctx, x, y) == orthopoly::kernel(ctx, y, x));
    }
}

TEST_CASE("kernel trace equals rank") {
    for (double lam : {-0.25, 0.0, 1.0}) {
        const GegenbauerParam p(lam);
        for (int n : {0, 3, 8}) {
            const KernelContext ctx(p, n);
            const double trace = support::integrate(
                [&](double th) {
                    return orthopoly::kernel_diag_angle(ctx, th) *
                           orthopoly::weight_theta(p, th);
                },
                1e-14, specfun::pi - 1e-14, 1e-13);
            CHECK(trace == Approx(double(n + 1)).margin(1e-9));
        }
    }
}

TEST_CASE("reproducing property") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-0.9, 0.9);
    for (double lam : {-0.25, 0.0, 0.5, 2.0}) {
        const GegenbauerParam p(lam);
        const KernelContext ctx(p, 6);
        for (int rep = 0; rep < 3; ++rep) {
            const double x = dist(rng);
            const double y = dist(rng);
            const double conv = support::integrate(
                [&](double th) {
                    const double t = std::cos(th);
                    return orthopoly::kernel(ctx, x, t) *
                           orthopoly::kernel(ctx, t, y) *
                           orthopoly::weight_theta(p, th);
                },
                1e-13, specfun::pi - 1e-13, 1e-11);
            CHECK(conv == Approx(orthopoly::kernel(ctx, x, y)).margin(1e-8));
        }
    }
}
