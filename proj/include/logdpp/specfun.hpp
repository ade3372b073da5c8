#ifndef LOGDPP_SPECFUN_HPP
#define LOGDPP_SPECFUN_HPP

// Scalar special functions: harmonic numbers, digamma, log-gamma,
// the hyperfactorial partial sum sum_j j*log(j), and the sine integral.
// All functions are pure and thread-safe.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace logdpp::specfun {

inline constexpr double pi = 3.14159265358979323846;

// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

struct SpecialValue {
    double value = 0.0;
    double abs_error_bound = 0.0;
};

// Compensated (Kahan) accumulator.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

namespace detail {

// Asymptotic series, valid for x >= 10: psi(x) ~ log x - 1/(2x) - sum B_2k/(2k x^2k).
inline double digamma_asymptotic(double x) {
    const double inv2 = 1.0 / (x * x);
    // B_2k/(2k) for k = 1..7
    static constexpr double coef[7] = {
        1.0 / 12.0,   -1.0 / 120.0,   1.0 / 252.0,  -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    double series = 0.0;
    double p = inv2;
    for (double c : coef) {
        series += c * p;
        p *= inv2;
    }
    return std::log(x) - 0.5 / x - series;
}

} // namespace detail

inline double digamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("digamma: pole at non-positive integer");
    if (x < 0.0) {
        // reflection: psi(x) = psi(1-x) - pi*cot(pi*x)
        return digamma(1.0 - x) - pi / std::tan(pi * x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return acc + detail::digamma_asymptotic(x);
}

inline double harmonic(long n) {
    if (n < 0)
        throw std::domain_error("harmonic: requires n >= 0");
    if (n > 50000)
        return digamma(double(n) + 1.0) + euler_gamma;
    KahanSum s;
    for (long k = n; k >= 1; --k)
        s.add(1.0 / double(k));
    return s.value();
}

// Partial sum sum_{j=1..n} j*log(j) (log of the hyperfactorial).
inline double sum_j_log_j(long n) {
    if (n < 1)
        throw std::domain_error("sum_j_log_j: requires n >= 1");
    KahanSum s;
    for (long j = 2; j <= n; ++j)
        s.add(double(j) * std::log(double(j)));
    return s.value();
}

// Asymptotic expansion of sum_j_log_j up to the O(1) constant.
inline double sum_j_log_j_asymptotic(long n) {
    if (n < 1)
        throw std::domain_error("sum_j_log_j_asymptotic: requires n >= 1");
    const double nn = double(n);
    const double ln = std::log(nn);
    return 0.5 * nn * nn * ln - 0.25 * nn * nn + 0.5 * nn * ln + ln / 12.0;
}

namespace detail {

inline double si_taylor(double x) {
    // Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
    double term = x;
    double sum = x;
    const double x2 = x * x;
    for (int k = 1; k < 120; ++k) {
        term *= -x2 / (double(2 * k) * double(2 * k + 1));
        const double add = term / double(2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

// Lentz continued fraction for the complex exponential integral E1(ix),
// giving Si through Si(x) = pi/2 + Im(e^{-ix} * cf).
inline double si_continued_fraction(double x) {
    using cd = std::complex<double>;
    const double eps = 1e-16;
    const double fpmin = 1e-300;
    cd b(1.0, x);
    cd c(1.0 / fpmin, 0.0);
    cd d = 1.0 / b;
    cd h = d;
    for (int i = 2; i <= 200; ++i) {
        const double a = -double(i - 1) * double(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cd del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
            break;
    }
    h *= cd(std::cos(x), -std::sin(x));
    return pi / 2.0 + h.imag();
}

// Lower regularized incomplete gamma by power series (x < a + 1).
inline double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by Lentz continued fraction (x >= a + 1).
inline double gamma_q_cf(double a, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace detail

// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
inline double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::domain_error("gamma_q: requires a > 0, x >= 0");
    if (x == 0.0)
        return 1.0;
    if (x < a + 1.0)
        return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_cf(a, x);
}

// Chi-square upper tail probability with dof degrees of freedom.
inline double chi_square_tail(double statistic, double dof) {
    return gamma_q(0.5 * dof, 0.5 * statistic);
}

inline double sine_integral(double x) {
    if (x < 0.0)
        throw std::domain_error("sine_integral: requires x >= 0");
    if (x < 16.0)
        return detail::si_taylor(x);
    return detail::si_continued_fraction(x);
}

} // namespace logdpp::specfun

#endif
