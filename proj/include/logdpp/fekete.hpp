#ifndef LOGDPP_FEKETE_HPP
#define LOGDPP_FEKETE_HPP

// Fekete points of [-1,1] ({-1, +1} plus the zeros of P_{n-2}^(1,1)),
// the direct pairwise logarithmic energy, the exact and asymptotic
// minimal-energy formulas, and the Jacobi (1,1) discriminant.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "logdpp/orthopoly.hpp"
#include "logdpp/report.hpp"
#include "logdpp/specfun.hpp"
#include "logdpp/tridiag.hpp"

namespace logdpp::fekete {

enum class Provenance { fekete, dpp_sample, manual };

struct PointConfiguration {
    std::vector<double> points; // strictly increasing, inside [-1,1]
    Provenance provenance = Provenance::manual;
};

// Zeros of P_m^(1,1), ascending, via Golub-Welsch (Jacobi-matrix
// eigenvalues) plus one Newton polish step.
inline std::vector<double> jacobi11_zeros(int m) {
    if (m < 0)
        throw std::domain_error("jacobi11_zeros: requires m >= 0");
    if (m == 0)
        return {};
    std::vector<double> diag(m, 0.0);
    std::vector<double> off(m - 1);
    for (int k = 1; k < m; ++k)
        off[k - 1] = std::sqrt(double(k) * (k + 2.0) /
                               ((2.0 * k + 1.0) * (2.0 * k + 3.0)));
    std::vector<double> z = tridiag::eigenvalues(diag, off);
    const double h = 1e-7;
    for (double& x : z) {
        const double deriv =
            (orthopoly::jacobi11(m, x + h) - orthopoly::jacobi11(m, x - h)) /
            (2.0 * h);
        if (deriv != 0.0)
            x -= orthopoly::jacobi11(m, x) / deriv;
    }
    // enforce the exact symmetry of the zero set
    for (int i = 0, j = m - 1; i < j; ++i, --j) {
        const double s = 0.5 * (z[i] - z[j]);
        z[i] = s;
        z[j] = -s;
    }
    if (m % 2 == 1)
        z[m / 2] = 0.0;
    return z;
}

inline PointConfiguration fekete_points(int n) {
    if (n < 2)
        throw std::domain_error("fekete_points: requires n >= 2");
    PointConfiguration cfg;
    cfg.provenance = Provenance::fekete;
    cfg.points.reserve(n);
    cfg.points.push_back(-1.0);
    for (double z : jacobi11_zeros(n - 2))
        cfg.points.push_back(z);
    cfg.points.push_back(1.0);
    return cfg;
}

// -sum_{i != j} log|x_i - x_j| (each unordered pair counted twice).
inline double log_energy(const PointConfiguration& cfg) {
    const auto& x = cfg.points;
    if (x.size() < 2)
        throw std::domain_error("log_energy: requires at least 2 points");
    specfun::KahanSum s;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const double d = std::abs(x[j] - x[i]);
            if (d < 1e-15)
                throw std::invalid_argument("log_energy: duplicate points");
            s.add(std::log(d));
        }
    return -2.0 * s.value();
}

// Exact minimal energy of n Fekete points.
inline double epsilon_exact(long n) {
    if (n < 2)
        throw std::domain_error("epsilon_exact: requires n >= 2");
    specfun::KahanSum s;
    s.add(-double(n) * double(n - 1) * std::log(2.0));
    s.add(-3.0 * double(n - 1) * std::log(double(n - 1)));
    s.add(-double(n) * std::log(double(n)));
    if (n > 2)
        s.add(-4.0 * specfun::sum_j_log_j(n - 2));
    s.add(specfun::sum_j_log_j(2 * n - 2));
    return s.value();
}

inline double epsilon_asymptotic(long n) {
    if (n < 2)
        throw std::domain_error("epsilon_asymptotic: requires n >= 2");
    const double nn = double(n);
    const double ln = std::log(nn);
    return std::log(2.0) * nn * nn - nn * ln - 2.0 * std::log(2.0) * nn -
           0.25 * ln;
}

// log of the leading coefficient of P_m^(1,1): 2^-m * binom(2m+2, m).
inline double kappa_log(long m) {
    if (m < 0)
        throw std::domain_error("kappa_log: requires m >= 0");
    return -double(m) * std::log(2.0) + specfun::log_gamma(2.0 * m + 3.0) -
           specfun::log_gamma(double(m) + 1.0) -
           specfun::log_gamma(double(m) + 3.0);
}

// log of the discriminant of P_m^(1,1),
// D_m = 2^{-m(m-1)} prod_j j^{j-2m+2} (j+1)^{2j-2} (m+2+j)^{m-j}.
inline double discriminant_log(long m) {
    if (m < 1)
        throw std::domain_error("discriminant_log: requires m >= 1");
    specfun::KahanSum s;
    s.add(-double(m) * double(m - 1) * std::log(2.0));
    for (long j = 1; j <= m; ++j) {
        s.add(double(j - 2 * m + 2) * std::log(double(j)));
        s.add(2.0 * double(j - 1) * std::log(double(j + 1)));
        s.add(double(m - j) * std::log(double(m + 2 + j)));
    }
    return s.value();
}

inline std::vector<report::EnergyRow> energy_report(const std::vector<long>& n_list) {
    std::vector<report::EnergyRow> rows;
    const double na = std::nan("");
    for (long n : n_list) {
        rows.push_back({"fekete", "E", na, n,
                        log_energy(fekete_points(int(n))), na, 0});
        rows.push_back({"epsilon_exact", "E", na, n, epsilon_exact(n), na, 0});
        rows.push_back({"epsilon_asym", "E", na, n, epsilon_asymptotic(n), na, 0});
    }
    return rows;
}

} // namespace logdpp::fekete

#endif
