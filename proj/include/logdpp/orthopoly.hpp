#ifndef LOGDPP_ORTHOPOLY_HPP
#define LOGDPP_ORTHOPOLY_HPP

// Gegenbauer / Jacobi(1,1) polynomial evaluation, the normalized weight
// w^lambda, orthonormalization constants and the rank-(n+1) projection
// kernel with its Christoffel-Darboux closed form.
//
// The lambda = 0 (Chebyshev) family is handled on a separate branch
// throughout, matching the degenerate normalization of the general family.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logdpp/specfun.hpp"

namespace logdpp::orthopoly {

struct GegenbauerParam {
    double lambda;
    bool is_chebyshev;

    explicit GegenbauerParam(double lam) : lambda(lam), is_chebyshev(lam == 0.0) {
        if (!(lam > -0.5))
            throw std::domain_error("GegenbauerParam: requires lambda > -1/2");
    }
};

// Normalization constant of w^lambda: Gamma(lambda+1)/(sqrt(pi) Gamma(lambda+1/2)).
inline double weight_constant(const GegenbauerParam& p) {
    return std::exp(specfun::log_gamma(p.lambda + 1.0) -
                    specfun::log_gamma(p.lambda + 0.5)) /
           std::sqrt(specfun::pi);
}

// Probability density w^lambda(x) on (-1,1).
inline double weight(const GegenbauerParam& p, double x) {
    if (std::abs(x) >= 1.0) {
        if (p.lambda < 0.5)
            throw std::domain_error("weight: |x| >= 1 with lambda < 1/2");
        return 0.0;
    }
    return weight_constant(p) * std::pow(1.0 - x * x, p.lambda - 0.5);
}

// w^lambda(cos t) * sin t, the density after the x = cos t substitution.
inline double weight_theta(const GegenbauerParam& p, double theta) {
    return weight_constant(p) * std::pow(std::sin(theta), 2.0 * p.lambda);
}

namespace detail {

// Last two values (C_{k-1}, C_k) of the Gegenbauer recurrence, lambda != 0.
inline std::pair<double, double> gegenbauer_pair(double lambda, int k, double x) {
    double prev = 0.0;
    double cur = 1.0;
    for (int j = 1; j <= k; ++j) {
        // grouped as (j-1)+lambda so tiny lambda keeps full relative precision
        const double next =
            (2.0 * x * (double(j - 1) + lambda) * cur -
             (double(j - 2) + 2.0 * lambda) * prev) /
            double(j);
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

} // namespace detail

// C_k^lambda(x); on the lambda = 0 branch returns Chebyshev T_k(x).
inline double gegenbauer(const GegenbauerParam& p, int k, double x) {
    if (k < 0)
        throw std::domain_error("gegenbauer: requires k >= 0");
    if (p.is_chebyshev)
        return std::cos(double(k) * std::acos(x));
    return detail::gegenbauer_pair(p.lambda, k, x).second;
}

// Jacobi P_m^(1,1)(x) by three-term recurrence; P_m^(1,1)(1) = m+1.
inline double jacobi11(int m, double x) {
    if (m < 0)
        throw std::domain_error("jacobi11: requires m >= 0");
    double prev = 0.0;
    double cur = 1.0;
    for (int j = 1; j <= m; ++j) {
        // j(j+2) P_j = (2j+1)(j+1) x P_{j-1} - j(j+1) P_{j-2}
        const double next = ((2.0 * j + 1.0) * (j + 1.0) * x * cur -
                             double(j) * (j + 1.0) * prev) /
                            (double(j) * (j + 2.0));
        prev = cur;
        cur = next;
    }
    return cur;
}

// Precomputed constants for kernel evaluation at fixed (lambda, n).
struct KernelContext {
    GegenbauerParam param;
    int n; // kernel projects onto n+1 basis functions

    std::vector<double> log_norm_constants; // log gamma_k^lambda, k = 0..n
    double cd_prefactor_log;                // log |(n+1)! / (2 lambda (2 lambda)_n)|
    int cd_prefactor_sign;
    double cd_switch_threshold;

    std::vector<double> norm_sq; // gamma_k^2, cached for the direct sum

    KernelContext(const GegenbauerParam& p, int n_) : param(p), n(n_) {
        if (n < 0)
            throw std::domain_error("KernelContext: requires n >= 0");
        log_norm_constants.resize(n + 1);
        norm_sq.resize(n + 1);
        const double lam = p.lambda;
        for (int k = 0; k <= n; ++k) {
            double lg;
            if (p.is_chebyshev) {
                lg = (k == 0) ? 0.0 : 0.5 * std::log(2.0); // hat{C}_k = sqrt(2) T_k
            } else if (k == 0) {
                lg = 0.0;
            } else if (lam > 0.0) {
                // gamma_k^2 = k! (k+lambda) / (lambda (2 lambda)_k)
                lg = 0.5 * (specfun::log_gamma(k + 1.0) + std::log(k + lam) -
                            std::log(lam) - specfun::log_gamma(2.0 * lam + k) +
                            specfun::log_gamma(2.0 * lam));
            } else {
                // lambda (2 lambda)_k = 2 lambda^2 Gamma(2 lambda + k)/Gamma(2 lambda + 1) > 0
                lg = 0.5 * (specfun::log_gamma(k + 1.0) + std::log(k + lam) -
                            std::log(2.0 * lam * lam) -
                            specfun::log_gamma(2.0 * lam + k) +
                            specfun::log_gamma(2.0 * lam + 1.0));
            }
            log_norm_constants[k] = lg;
            norm_sq[k] = std::exp(2.0 * lg);
        }

        if (p.is_chebyshev) {
            cd_prefactor_log = 0.0;
            cd_prefactor_sign = 1;
        } else if (p.lambda > 0.0) {
            cd_prefactor_log =
                specfun::log_gamma(n + 2.0) - std::log(2.0 * lam) -
                specfun::log_gamma(2.0 * lam + n) + specfun::log_gamma(2.0 * lam);
            cd_prefactor_sign = 1;
        } else if (n == 0) {
            cd_prefactor_log = -std::log(2.0 * std::abs(lam));
            cd_prefactor_sign = -1; // 1/(2 lambda) with lambda < 0
        } else {
            // 2 lambda (2 lambda)_n = 4 lambda^2 Gamma(2 lambda + n)/Gamma(2 lambda + 1) > 0
            cd_prefactor_log =
                specfun::log_gamma(n + 2.0) - std::log(4.0 * lam * lam) -
                specfun::log_gamma(2.0 * lam + n) +
                specfun::log_gamma(2.0 * lam + 1.0);
            cd_prefactor_sign = 1;
        }
        cd_switch_threshold = 1e-3 * (2.0 / double(n + 1));
    }
};

// Orthonormal basis function hat{C}_k^lambda(x).
inline double gegenbauer_normalized(const KernelContext& ctx, int k, double x) {
    if (k < 0 || k > ctx.n)
        throw std::out_of_range("gegenbauer_normalized: index out of range");
    if (ctx.param.is_chebyshev) {
        if (k == 0)
            return 1.0;
        return std::sqrt(2.0) * std::cos(double(k) * std::acos(x));
    }
    return std::exp(ctx.log_norm_constants[k]) *
           gegenbauer(ctx.param, k, x);
}

namespace detail {

// sum_{j=1}^n cos(j a) = sin(n a/2 ... ) closed form, safe near sin(a/2) = 0.
inline double cos_sum(int n, double a) {
    const double s = std::sin(a);
    if (std::abs(s) < 1e-9) {
        // a near a multiple of pi; the sum tends to n * cos((n+1)a) style limits,
        // evaluated by direct summation (n adds, only hit on a measure-zero set).
        double acc = 0.0;
        for (int j = 1; j <= n; ++j)
            acc += std::cos(double(j) * a);
        return acc;
    }
    return std::sin(double(n) * a * 0.5) * std::cos(double(n + 1) * a * 0.5) /
           std::sin(a * 0.5);
}

// Chebyshev kernel in angle variables:
// K_n^0(cos t, cos p) = 1 + sum_j [cos(j(t-p)) + cos(j(t+p))].
inline double kernel_cheb_angle(int n, double theta, double phi) {
    return 1.0 + cos_sum(n, theta - phi) + cos_sum(n, theta + phi);
}

// Direct sum over normalized products, lambda != 0.
inline double kernel_direct(const KernelContext& ctx, double x, double y) {
    const double lam = ctx.param.lambda;
    double px = 0.0, cx = 1.0, py = 0.0, cy = 1.0;
    double sum = ctx.norm_sq[0];
    for (int j = 1; j <= ctx.n; ++j) {
        const double nx = (2.0 * x * (double(j - 1) + lam) * cx -
                           (double(j - 2) + 2.0 * lam) * px) /
                          double(j);
        const double ny = (2.0 * y * (double(j - 1) + lam) * cy -
                           (double(j - 2) + 2.0 * lam) * py) /
                          double(j);
        px = cx; cx = nx;
        py = cy; cy = ny;
        sum += ctx.norm_sq[j] * cx * cy;
    }
    return sum;
}

} // namespace detail

// K_n^lambda(x, x) = sum_k hat{C}_k(x)^2.
inline double kernel_diag(const KernelContext& ctx, double x) {
    if (ctx.param.is_chebyshev) {
        const double theta = std::acos(x);
        return detail::kernel_cheb_angle(ctx.n, theta, theta);
    }
    return detail::kernel_direct(ctx, x, x);
}

inline double kernel_diag_angle(const KernelContext& ctx, double theta) {
    if (ctx.param.is_chebyshev)
        return detail::kernel_cheb_angle(ctx.n, theta, theta);
    return detail::kernel_direct(ctx, std::cos(theta), std::cos(theta));
}

// K_n^lambda(x, y): Christoffel-Darboux quotient away from the diagonal,
// direct summation inside the cancellation-prone band.
inline double kernel(const KernelContext& ctx, double x, double y) {
    if (ctx.param.is_chebyshev)
        return detail::kernel_cheb_angle(ctx.n, std::acos(x), std::acos(y));
    if (std::abs(x - y) <= ctx.cd_switch_threshold)
        return detail::kernel_direct(ctx, x, y);
    const auto [cnx, cn1x] = detail::gegenbauer_pair(ctx.param.lambda, ctx.n + 1, x);
    const auto [cny, cn1y] = detail::gegenbauer_pair(ctx.param.lambda, ctx.n + 1, y);
    const double quotient = (cn1x * cny - cnx * cn1y) / (x - y);
    return double(ctx.cd_prefactor_sign) * std::exp(ctx.cd_prefactor_log) * quotient;
}

inline double kernel_angle(const KernelContext& ctx, double theta, double phi) {
    if (ctx.param.is_chebyshev)
        return detail::kernel_cheb_angle(ctx.n, theta, phi);
    return kernel(ctx, std::cos(theta), std::cos(phi));
}

} // namespace logdpp::orthopoly

#endif
