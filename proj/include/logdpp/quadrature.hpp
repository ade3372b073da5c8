#ifndef LOGDPP_QUADRATURE_HPP
#define LOGDPP_QUADRATURE_HPP

// Weighted Gaussian rules (Golub-Welsch) and the singular integrators:
// a 1-D panel integrator with geometric endpoint grading, and a 2-D
// integrator for integrals of the form
//     I = int_0^pi int_0^pi g(theta, phi) log(1/(c |cos theta - cos phi|))
// evaluated after the rotation u = |theta - phi|/2, v = (theta + phi)/2,
// which turns the singular factor into -(log c' + log sin u + log sin v).
// The u-axis is integrated over geometrically shrinking strips toward the
// singular line u = 0; convergence is declared when consecutive strip
// contributions fall below the tolerance.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "logdpp/orthopoly.hpp"
#include "logdpp/parallel.hpp"
#include "logdpp/specfun.hpp"
#include "logdpp/tridiag.hpp"

namespace logdpp::quadrature {

struct QuadratureRule {
    std::vector<double> nodes;   // strictly increasing, inside (-1,1)
    std::vector<double> weights; // positive, summing to 1
    double lambda;
    int order;
};

struct SingularIntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

namespace detail {

// 16-point Gauss-Legendre abscissas/weights on [-1,1] (positive half).
inline constexpr double gl_x[8] = {
    0.0950125098376374401853, 0.2816035507792589132304,
    0.4580167776572273863424, 0.6178762444026437484467,
    0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962,
};
inline constexpr double gl_w[8] = {
    0.1894506104550684962854, 0.1826034150449235888667,
    0.1691565193950025381893, 0.1495959888165767320815,
    0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518,
};

template <class F>
double gl16(F&& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        s += gl_w[i] * (f(mid + half * gl_x[i]) + f(mid - half * gl_x[i]));
    }
    evals += 16;
    return s * half;
}

} // namespace detail

struct GradedOptions {
    double h_max = 0.4;         // max panel width (oscillation control)
    double endpoint_tol = 1e-10; // stop grading when contributions are this small
    int max_depth = 48;         // geometric subdivision levels per endpoint
    bool grade_left = true;
    bool grade_right = true;
};

namespace detail {

// Integrate f over [edge, edge + dir*H] with panels shrinking
// geometrically (ratio 1/2) toward `edge`; dir is +1 or -1.
template <class F>
void graded_endpoint(F&& f, double edge, double dir, double H,
                     const GradedOptions& opt, specfun::KahanSum& total,
                     double& err, long& evals) {
    double outer = H;
    double prev_c = std::numeric_limits<double>::infinity();
    double c = 0.0;
    for (int j = 0; j < opt.max_depth; ++j) {
        const double inner = 0.5 * outer;
        const double a = edge + dir * inner;
        const double b = edge + dir * outer;
        c = (dir > 0) ? gl16(f, a, b, evals) : gl16(f, b, a, evals);
        total.add(c);
        outer = inner;
        // require two consecutive small contributions so an oscillation
        // zero cannot trigger a premature stop
        if (j >= 1 && 3.0 * (std::abs(c) + std::abs(prev_c)) <= opt.endpoint_tol) {
            err += 3.0 * std::abs(c);
            return;
        }
        prev_c = c;
    }
    err += 3.0 * std::abs(c); // depth exhausted; bound the remaining sliver
}

} // namespace detail

// 1-D panel integrator over [a,b] with optional geometric grading toward
// each endpoint (for integrable power/log singularities).
template <class F>
SingularIntegralResult integrate_graded(F&& f, double a, double b,
                                        const GradedOptions& opt) {
    SingularIntegralResult res;
    if (!(b > a))
        throw std::invalid_argument("integrate_graded: requires b > a");
    int m = int(std::ceil((b - a) / opt.h_max));
    if (m < 1)
        m = 1;
    if (m == 1 && opt.grade_left && opt.grade_right)
        m = 2;
    const double h = (b - a) / m;
    specfun::KahanSum total;
    for (int i = 0; i < m; ++i) {
        const double lo = a + i * h;
        const double hi = (i == m - 1) ? b : a + (i + 1) * h;
        if (i == 0 && opt.grade_left)
            detail::graded_endpoint(f, lo, +1.0, hi - lo, opt, total,
                                    res.error_estimate, res.evaluations);
        else if (i == m - 1 && opt.grade_right)
            detail::graded_endpoint(f, hi, -1.0, hi - lo, opt, total,
                                    res.error_estimate, res.evaluations);
        else
            total.add(detail::gl16(f, lo, hi, res.evaluations));
    }
    res.value = total.value();
    return res;
}

// 2-D singular integrator. g(theta, phi) must be symmetric. The full
// integrand is g(theta,phi) * (-(log_two_const + log sin u + log sin v));
// log_two_const = log 2 gives the factor log(1/|x - y|), log 4 gives
// log(1/(2|x - y|)). `freq` bounds the trigonometric frequency of
// g(v-u, v+u) in each rotated variable.
template <class G>
SingularIntegralResult integrate_log_singular_2d(G&& g, double freq,
                                                 double log_two_const,
                                                 double tol,
                                                 int max_strip_depth = 44) {
    SingularIntegralResult res;
    const double pi = specfun::pi;
    const double h_max = std::min(0.4, 8.0 / std::max(freq, 1.0));

    GradedOptions inner_opt;
    inner_opt.h_max = h_max;
    inner_opt.endpoint_tol = tol * 1e-3;
    inner_opt.max_depth = 48;

    specfun::KahanSum total;
    double inner_err = 0.0;
    double prev_strip = std::numeric_limits<double>::infinity();
    double strip = 0.0;
    res.converged = false;

    for (int d = 0; d < max_strip_depth; ++d) {
        const double u_hi = 0.5 * pi * std::pow(0.5, d);
        const double u_lo = 0.5 * u_hi;
        const int np = std::max(1, int(std::ceil((u_hi - u_lo) / h_max)));
        const double pw = (u_hi - u_lo) / np;

        std::vector<double> panel_err(np, 0.0);
        std::vector<long> panel_evals(np, 0);
        std::vector<double> panel_val = parallel::map_indexed(
            std::size_t(np), [&](std::size_t ip) {
                const double pa = u_lo + double(ip) * pw;
                const double half = 0.5 * pw;
                const double mid = pa + half;
                double acc = 0.0;
                for (int i = 0; i < 16; ++i) {
                    const double gw = (i < 8) ? detail::gl_w[i] : detail::gl_w[i - 8];
                    const double gx = (i < 8) ? detail::gl_x[i] : -detail::gl_x[i - 8];
                    const double u = mid + half * gx;
                    const double log_su = std::log(std::sin(u));
                    // v - u is known only to ~eps*u; clamping at that scale
                    // keeps negative-lambda weights finite at the deepest
                    // grading levels without adding error beyond rounding
                    const double th_floor = 4e-16 * u;
                    auto fv = [&](double v) {
                        const double th = std::max(v - u, th_floor);
                        return g(th, v + u) *
                               (-(log_two_const + log_su + std::log(std::sin(v))));
                    };
                    const SingularIntegralResult line =
                        integrate_graded(fv, u, pi - u, inner_opt);
                    acc += gw * half * line.value;
                    panel_err[ip] += gw * half * line.error_estimate;
                    panel_evals[ip] += line.evaluations;
                }
                return 4.0 * acc;
            });

        strip = parallel::pairwise_sum(panel_val);
        total.add(strip);
        for (int ip = 0; ip < np; ++ip) {
            inner_err += 4.0 * panel_err[ip];
            res.evaluations += panel_evals[ip];
        }
        if (d >= 4 && 2.0 * (std::abs(strip) + std::abs(prev_strip)) <= 0.5 * tol) {
            res.converged = true;
            break;
        }
        prev_strip = strip;
    }

    res.value = total.value();
    res.error_estimate =
        2.0 * (std::abs(strip) + std::min(std::abs(prev_strip), std::abs(strip))) +
        inner_err;
    return res;
}

// Gauss rule for the probability weight w^lambda, by Golub-Welsch.
inline QuadratureRule gauss_rule(double lambda, int order) {
    if (order < 1)
        throw std::domain_error("gauss_rule: requires order >= 1");
    const orthopoly::GegenbauerParam p(lambda);
    QuadratureRule rule;
    rule.lambda = lambda;
    rule.order = order;
    std::vector<double> diag(order, 0.0);
    std::vector<double> off(order - 1);
    for (int k = 1; k < order; ++k) {
        double b2;
        if (p.is_chebyshev)
            b2 = (k == 1) ? 0.5 : 0.25;
        else
            b2 = double(k) * (k + 2.0 * lambda - 1.0) /
                 (4.0 * (k + lambda) * (k + lambda - 1.0));
        off[k - 1] = std::sqrt(b2);
    }
    rule.nodes = tridiag::eigenvalues(diag, off);
    const orthopoly::KernelContext ctx(p, order - 1);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i)
        rule.weights[i] = 1.0 / orthopoly::kernel_diag(ctx, rule.nodes[i]);
    return rule;
}

inline double default_tol(int n) { return n <= 20 ? 1e-7 : 1e-5; }

// L1 = int int K(x,x) K(y,y) w(x) w(y) log(1/|x-y|).
inline SingularIntegralResult integrate_L1(double lambda, int n, double tol) {
    if (n < 0 || !(tol > 0.0))
        throw std::domain_error("integrate_L1: requires n >= 0 and tol > 0");
    const orthopoly::GegenbauerParam p(lambda);
    const orthopoly::KernelContext ctx(p, n);
    auto g = [&](double th, double ph) {
        return orthopoly::kernel_diag_angle(ctx, th) *
               orthopoly::weight_theta(p, th) *
               orthopoly::kernel_diag_angle(ctx, ph) *
               orthopoly::weight_theta(p, ph);
    };
    return integrate_log_singular_2d(g, 4.0 * n + 6.0, std::log(2.0), tol);
}

// L2 = int int K(x,y)^2 w(x) w(y) log(1/|x-y|).
inline SingularIntegralResult integrate_L2(double lambda, int n, double tol) {
    if (n < 0 || !(tol > 0.0))
        throw std::domain_error("integrate_L2: requires n >= 0 and tol > 0");
    const orthopoly::GegenbauerParam p(lambda);
    const orthopoly::KernelContext ctx(p, n);
    auto g = [&](double th, double ph) {
        const double k = orthopoly::kernel_angle(ctx, th, ph);
        return k * k * orthopoly::weight_theta(p, th) *
               orthopoly::weight_theta(p, ph);
    };
    return integrate_log_singular_2d(g, 4.0 * n + 6.0, std::log(2.0), tol);
}

// L3 = int K(x,x) log(1/(1-x^2)) w(x) dx.
inline SingularIntegralResult integrate_L3(double lambda, int n, double tol) {
    if (n < 0 || !(tol > 0.0))
        throw std::domain_error("integrate_L3: requires n >= 0 and tol > 0");
    const orthopoly::GegenbauerParam p(lambda);
    const orthopoly::KernelContext ctx(p, n);
    auto f = [&](double th) {
        return orthopoly::kernel_diag_angle(ctx, th) *
               orthopoly::weight_theta(p, th) * (-2.0 * std::log(std::sin(th)));
    };
    // the integrand is symmetric about pi/2 (the kernel diagonal is even
    // in x), so fold onto [0, pi/2]: the singular edge then sits at an
    // exactly representable 0 and the grading can descend arbitrarily deep
    GradedOptions opt;
    opt.h_max = std::min(0.4, 8.0 / (2.0 * n + 3.0));
    opt.endpoint_tol = tol * 1e-3;
    opt.max_depth = 128;
    opt.grade_right = false;
    SingularIntegralResult res =
        integrate_graded(f, 0.0, 0.5 * specfun::pi, opt);
    res.value *= 2.0;
    res.error_estimate *= 2.0;
    return res;
}

// Expected DPP energy E(lambda, n+1) = L1 - L2.
inline SingularIntegralResult expected_energy_numeric(double lambda, int n,
                                                      double tol) {
    const SingularIntegralResult l1 = integrate_L1(lambda, n, tol);
    const SingularIntegralResult l2 = integrate_L2(lambda, n, tol);
    SingularIntegralResult res;
    res.value = l1.value - l2.value;
    res.error_estimate = l1.error_estimate + l2.error_estimate;
    res.evaluations = l1.evaluations + l2.evaluations;
    res.converged = l1.converged && l2.converged;
    return res;
}

// Mixed Chebyshev moments: int int hat(k,x)^2 hat(l,y)^2 w0 w0 log(1/(2|x-y|)),
// where hat(0,.)^2 = 1 and hat(k,.)^2 = 2 cos^2(k arccos .). Oracle for the
// closed-form values 1/(4k) (k = l >= 1) and 0 otherwise.
inline SingularIntegralResult integrate_J_moment(int k, int l, double tol) {
    if (k < 0 || l < 0)
        throw std::domain_error("integrate_J_moment: requires k, l >= 0");
    const double inv_pi2 = 1.0 / (specfun::pi * specfun::pi);
    auto hat_sq = [](int kk, double ang) {
        if (kk == 0)
            return 1.0;
        const double c = std::cos(kk * ang);
        return 2.0 * c * c;
    };
    auto g = [&](double th, double ph) {
        return hat_sq(k, th) * hat_sq(l, ph) * inv_pi2;
    };
    return integrate_log_singular_2d(g, 2.0 * (k + l) + 3.0, std::log(4.0), tol);
}

// (1/pi) int_{-pi}^{pi} trig(alpha) log(1/sqrt(2-2 cos alpha)) d alpha for an
// even trig factor; the singular point alpha = 0 is graded. Oracle for the
// cosine-log table values.
template <class F>
SingularIntegralResult integrate_cos_log(F&& trig, double freq, double tol) {
    auto f = [&](double a) {
        return trig(a) * (-std::log(2.0 * std::sin(0.5 * a)));
    };
    GradedOptions opt;
    opt.h_max = std::min(0.4, 8.0 / std::max(freq, 1.0));
    opt.endpoint_tol = tol * 1e-3;
    opt.max_depth = 64;
    opt.grade_right = false; // integrand is smooth at alpha = pi
    SingularIntegralResult res = integrate_graded(f, 0.0, specfun::pi, opt);
    res.value *= 2.0 / specfun::pi;
    res.error_estimate *= 2.0 / specfun::pi;
    return res;
}

} // namespace logdpp::quadrature

#endif
