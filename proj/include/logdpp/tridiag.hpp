#ifndef LOGDPP_TRIDIAG_HPP
#define LOGDPP_TRIDIAG_HPP

// Eigenvalues of a symmetric tridiagonal matrix by bisection on Sturm
// sequences. Shared by the Fekete zero finder and the Golub-Welsch
// quadrature constructor.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace logdpp::tridiag {

namespace detail {

// Number of eigenvalues strictly less than t (Sturm count).
inline int count_below(const std::vector<double>& diag,
                       const std::vector<double>& off, double t) {
    const std::size_t m = diag.size();
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = diag[0] - t;
    if (q < 0.0)
        ++count;
    for (std::size_t i = 1; i < m; ++i) {
        if (q == 0.0)
            q = tiny;
        q = diag[i] - t - off[i - 1] * off[i - 1] / q;
        if (q < 0.0)
            ++count;
    }
    return count;
}

} // namespace detail

// All eigenvalues, ascending. off has size diag.size()-1.
inline std::vector<double> eigenvalues(const std::vector<double>& diag,
                                       const std::vector<double>& off) {
    const std::size_t m = diag.size();
    if (m == 0)
        return {};
    if (off.size() + 1 != m)
        throw std::invalid_argument("tridiag::eigenvalues: size mismatch");

    // Gershgorin bounds
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < m; ++i) {
        double r = 0.0;
        if (i > 0)
            r += std::abs(off[i - 1]);
        if (i + 1 < m)
            r += std::abs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * scale;

    std::vector<double> ev(m);
    for (std::size_t k = 0; k < m; ++k) {
        double a = lo, b = hi;
        while (b - a > tol) {
            const double mid = 0.5 * (a + b);
            if (detail::count_below(diag, off, mid) <= int(k))
                a = mid;
            else
                b = mid;
        }
        ev[k] = 0.5 * (a + b);
    }
    return ev;
}

} // namespace logdpp::tridiag

#endif
