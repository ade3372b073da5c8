#ifndef LOGDPP_CLOSEDFORM_HPP
#define LOGDPP_CLOSEDFORM_HPP

// Exact formulas: the Chebyshev-case expected energy E(0, n+1) and its
// L1/L2 components, the digamma closed form of L3 for every lambda, the
// Gegenbauer log- and power-moment identities behind it, the mixed
// Chebyshev moments, the cosine-log integral table, and the harmonic
// block-sum identity.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "logdpp/quadrature.hpp"
#include "logdpp/specfun.hpp"

namespace logdpp::closedform {

// L1 at lambda = 0: (n+1)^2 log 2 + H_n / 4.
inline double L1_cheb(long n) {
    if (n < 0)
        throw std::domain_error("L1_cheb: requires n >= 0");
    const double np1 = double(n + 1);
    return np1 * np1 * std::log(2.0) + 0.25 * specfun::harmonic(n);
}

// L2 at lambda = 0: (n+1) log 2 + H_n + n H_{2n-1} + H_{2n}/2 - n + 1/2.
inline double L2_cheb(long n) {
    if (n < 1)
        throw std::domain_error("L2_cheb: requires n >= 1");
    return double(n + 1) * std::log(2.0) + specfun::harmonic(n) +
           double(n) * specfun::harmonic(2 * n - 1) +
           0.5 * specfun::harmonic(2 * n) - double(n) + 0.5;
}

// Exact expected energy of npts = n+1 Chebyshev-DPP points (n >= 1).
inline double E0_exact(long npts) {
    if (npts < 2)
        throw std::domain_error("E0_exact: requires npts >= 2");
    const long n = npts - 1;
    const double np1 = double(npts);
    return np1 * np1 * std::log(2.0) -
           (np1 * std::log(2.0) + 0.75 * specfun::harmonic(n) +
            double(n) * specfun::harmonic(2 * n - 1) +
            0.5 * specfun::harmonic(2 * n) - double(n) + 0.5);
}

// L3(lambda, n) in digamma closed form; lambda = 0 has its own branch.
inline double L3_exact(double lambda, long n) {
    if (!(lambda > -0.5))
        throw std::domain_error("L3_exact: requires lambda > -1/2");
    if (n < 0)
        throw std::domain_error("L3_exact: requires n >= 0");
    if (lambda == 0.0)
        return 2.0 * double(n + 1) * std::log(2.0) + specfun::harmonic(n);
    using specfun::digamma;
    const double nn = double(n);
    return (nn + 1.0) * (digamma(nn + lambda + 1.0) - digamma(lambda + 0.5)) -
           (nn + 2.0 * lambda) *
               (digamma(nn + lambda + 0.5) - digamma(lambda + 0.5) -
                2.0 * digamma(2.0 * nn + 2.0 * lambda + 1.0) +
                2.0 * digamma(nn + 2.0 * lambda + 1.0));
}

// int hatC_k^2 w^lambda log(1-x) dx, lambda != 0.
inline double gegenbauer_log_moment(double lambda, long k) {
    if (!(lambda > -0.5) || lambda == 0.0)
        throw std::domain_error(
            "gegenbauer_log_moment: requires lambda > -1/2, lambda != 0");
    if (k < 0)
        throw std::domain_error("gegenbauer_log_moment: requires k >= 0");
    using specfun::digamma;
    const double kk = double(k);
    return -2.0 * digamma(2.0 * lambda + 2.0 * kk) +
           digamma(2.0 * lambda + kk) + std::log(2.0) +
           digamma(lambda + kk + 0.5) - 1.0 / (2.0 * kk + 2.0 * lambda);
}

// int C_k^2 (1-x^2)^{lambda-1/2} (1-x)^s dx: Gamma prefactor times a
// (k+1)-term terminating hypergeometric sum; s = 0 is the stated
// continuation value. The Gamma ratios with possibly negative arguments,
// Gamma(k-s)/Gamma(-s) and (Gamma(k+2l)/Gamma(2l))^2 / (k!)^2, are
// evaluated as plain finite products so no reflection is needed.
inline double jacobi_power_moment(double lambda, long k, double s) {
    if (!(lambda > -0.5) || lambda == 0.0)
        throw std::domain_error(
            "jacobi_power_moment: requires lambda > -1/2, lambda != 0");
    if (k < 0)
        throw std::domain_error("jacobi_power_moment: requires k >= 0");
    if (!(s >= 0.0 && s < 1.0))
        throw std::domain_error("jacobi_power_moment: requires 0 <= s < 1");

    if (s == 0.0) {
        // pi 2^{1-2l} Gamma(2l+k) / (k! (k+l) Gamma(l)^2), written with
        // positive-argument Gamma factors only:
        // Gamma(2l+k) = Gamma(2l+1) (2l+1)_{k-1} / (2l) for k >= 1.
        const double l = lambda;
        double ratio; // Gamma(2l+k) / (k! (k+l) Gamma(l)^2)
        if (k == 0) {
            // Gamma(2l)/(l Gamma(l)^2) = Gamma(2l+1)/(2 l^2 Gamma(l)^2)
            ratio = std::exp(specfun::log_gamma(2.0 * l + 1.0) -
                             2.0 * specfun::log_gamma(l + 1.0)) * 0.5;
        } else {
            double poch = 1.0; // (2l+1)_{k-1}
            for (long j = 0; j < k - 1; ++j)
                poch *= 2.0 * l + 1.0 + double(j);
            ratio = std::exp(specfun::log_gamma(2.0 * l + 1.0) -
                             2.0 * specfun::log_gamma(l + 1.0) -
                             specfun::log_gamma(double(k) + 1.0)) *
                    poch * l * l / (double(k) + l);
        }
        return specfun::pi * std::pow(2.0, 1.0 - 2.0 * l) * ratio;
    }

    const double l = lambda;
    // R = Gamma(k-s)/Gamma(-s) * ((2l)_k)^2 / (k!)^2
    double R = 1.0;
    for (long j = 0; j < k; ++j) {
        const double jj = double(j);
        R *= (jj - s) * (2.0 * l + jj) * (2.0 * l + jj) /
             ((jj + 1.0) * (jj + 1.0));
    }
    const double prefactor =
        std::exp((s + 2.0 * l) * std::log(2.0) +
                 specfun::log_gamma(s + l + 0.5) + specfun::log_gamma(l + 0.5) -
                 specfun::log_gamma(2.0 * l + s + double(k) + 1.0)) *
        R;

    double term = 1.0;
    specfun::KahanSum sum;
    sum.add(term);
    for (long el = 0; el < k; ++el) {
        const double e = double(el);
        term *= (e - double(k)) * (double(k) + 2.0 * l + e) *
                (s + l + 0.5 + e) * (s + 1.0 + e) /
                ((e + 1.0) * (l + 0.5 + e) *
                 (2.0 * l + s + double(k) + 1.0 + e) *
                 (s - double(k) + 1.0 + e));
        sum.add(term);
    }
    return prefactor * sum.value();
}

// Mixed Chebyshev moment: 1/(4k) when k = l >= 1, otherwise 0.
inline double J_moment(long k, long l) {
    if (k < 0 || l < 0)
        throw std::domain_error("J_moment: requires k, l >= 0");
    if (k == l && k >= 1)
        return 1.0 / (4.0 * double(k));
    return 0.0;
}

// (1/pi) int_{-pi}^{pi} cos(k a) cos(l a) log(1/sqrt(2-2 cos a)) da for
// k >= 1, 0 <= l <= k: equals 1/(4k) at l = k and (1/2)(1/(k-l)+1/(k+l))
// otherwise (the l = 0 case reduces to 1/k).
inline double cos_log_integral(long k, long l) {
    if (k < 1 || l < 0 || l > k)
        throw std::domain_error("cos_log_integral: requires k >= 1, 0 <= l <= k");
    if (l == k)
        return 1.0 / (4.0 * double(k));
    return 0.5 * (1.0 / double(k - l) + 1.0 / double(k + l));
}

// sum_{k=2}^{n} H_{2k-1} = n H_{2n-1} + H_{2n}/2 - H_n/4 - n - 1/2.
inline double harmonic_block_sum(long n) {
    if (n < 2)
        throw std::domain_error("harmonic_block_sum: requires n >= 2");
    return double(n) * specfun::harmonic(2 * n - 1) +
           0.5 * specfun::harmonic(2 * n) - 0.25 * specfun::harmonic(n) -
           double(n) - 0.5;
}

// Energies of the two (n+3)-point constructions: the pure DPP draw of
// n+3 points versus n+1 DPP points with the endpoints +-1 appended.
// Exact at lambda = 0, numeric (quadrature at tolerance tol) otherwise.
inline std::pair<double, double> process_comparison(double lambda, long n,
                                                      double tol = 1e-6) {
    if (n < 1)
        throw std::domain_error("process_comparison: requires n >= 1");
    if (lambda == 0.0) {
        const double p1 = L1_cheb(n + 2) - L2_cheb(n + 2);
        const double p2 =
            -2.0 * std::log(2.0) + L1_cheb(n) - L2_cheb(n) + 2.0 * L3_exact(0.0, n);
        return {p1, p2};
    }
    const double p1 =
        quadrature::expected_energy_numeric(lambda, int(n) + 2, tol).value;
    const double p2 = -2.0 * std::log(2.0) +
                      quadrature::expected_energy_numeric(lambda, int(n), tol).value +
                      2.0 * L3_exact(lambda, n);
    return {p1, p2};
}

} // namespace logdpp::closedform

#endif
