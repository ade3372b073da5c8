#ifndef LOGDPP_DPP_HPP
#define LOGDPP_DPP_HPP

// Exact sequential sampler for the rank-(n+1) Gegenbauer projection DPP
// and a Monte-Carlo estimator of its expected logarithmic energy.
//
// Point t+1 is drawn from the conditional density
//     [K(x,x) - sum_s (e_s . phi(x))^2] w(x) / (n+1-t),
// where phi(x) is the vector of orthonormal basis values and the e_s are
// Gram-Schmidt-orthonormalized coefficient vectors of the already-selected
// points. The 1-D draws use inverse-CDF on a fixed theta-grid (composite
// 2-point Gauss-Legendre panels under a smoothstep grading that clusters
// panels at the endpoints), with piecewise-linear inversion inside a panel.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "logdpp/fekete.hpp"
#include "logdpp/orthopoly.hpp"
#include "logdpp/parallel.hpp"
#include "logdpp/quadrature.hpp"
#include "logdpp/specfun.hpp"

namespace logdpp::dpp {

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long num_samples = 0;
};

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
};

// Substream derivation: sample i uses the scrambled state seed + (i+1)*phi64,
// so Monte-Carlo runs are reproducible and parallelizable per sample index.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    return g.next();
}

class Sampler {
  public:
    explicit Sampler(const orthopoly::KernelContext& ctx) : ctx_(ctx) {
        int m = 4096;
        while (true) {
            build(m);
            double total = 0.0;
            for (std::size_t j = 0; j < theta_.size(); ++j)
                total += qw_[j] * kdiag_[j] * wtheta_[j];
            if (std::abs(total / double(ctx_.n + 1) - 1.0) < 1e-8 || m >= 65536)
                break;
            m *= 2;
        }
    }

    int num_points() const { return ctx_.n + 1; }
    const orthopoly::KernelContext& context() const { return ctx_; }
    int panel_count() const { return m_panels_; }

    // Draws one configuration of n+1 distinct points. If step_mass is
    // non-null it receives, for each sequential draw, the grid integral of
    // the normalized conditional density (should be 1 up to grid error).
    fekete::PointConfiguration sample(std::uint64_t seed,
                                      std::vector<double>* step_mass = nullptr) const {
        const int npts = ctx_.n + 1;
        const std::size_t nb = std::size_t(npts); // basis size
        const std::size_t nn = theta_.size();
        SplitMix64 rng(seed);

        std::vector<double> resid(kdiag_);
        std::vector<double> evec;           // selected orthonormal coefficient rows
        evec.reserve(nb * nb);
        std::vector<double> cum(std::size_t(m_panels_) + 1);
        std::vector<double> phi(nb), v(nb);

        fekete::PointConfiguration cfg;
        cfg.provenance = fekete::Provenance::dpp_sample;
        cfg.points.reserve(npts);

        const double clamp_floor = -1e-12 * double(npts);
        for (int t = 0; t < npts; ++t) {
            cum[0] = 0.0;
            for (int p = 0; p < m_panels_; ++p) {
                double pm = 0.0;
                for (int q = 0; q < 2; ++q) {
                    const std::size_t j = std::size_t(2 * p + q);
                    double d = resid[j];
                    if (d < clamp_floor)
                        throw std::runtime_error(
                            "dpp::Sampler: negative conditional density");
                    if (d < 0.0)
                        d = 0.0;
                    pm += qw_[j] * d * wtheta_[j];
                }
                cum[std::size_t(p) + 1] = cum[std::size_t(p)] + pm;
            }
            const double total = cum.back();
            if (step_mass)
                step_mass->push_back(total / double(npts - t));
            if (!(total > 0.0))
                throw std::runtime_error("dpp::Sampler: vanishing conditional mass");

            const double target = rng.uniform01() * total;
            const auto it = std::upper_bound(cum.begin(), cum.end(), target);
            int p = int(it - cum.begin()) - 1;
            p = std::clamp(p, 0, m_panels_ - 1);
            const double mass = cum[std::size_t(p) + 1] - cum[std::size_t(p)];
            const double frac =
                mass > 0.0 ? (target - cum[std::size_t(p)]) / mass : 0.5;
            const double theta =
                edges_[std::size_t(p)] +
                frac * (edges_[std::size_t(p) + 1] - edges_[std::size_t(p)]);
            const double x = std::cos(theta);

            basis_values(x, phi);
            v = phi;
            for (int s = 0; s < t; ++s) {
                const double* e = &evec[std::size_t(s) * nb];
                double c = 0.0;
                for (std::size_t k = 0; k < nb; ++k)
                    c += e[k] * v[k];
                for (std::size_t k = 0; k < nb; ++k)
                    v[k] -= c * e[k];
            }
            double nrm2 = 0.0;
            for (std::size_t k = 0; k < nb; ++k)
                nrm2 += v[k] * v[k];
            if (!(nrm2 > 0.0))
                throw std::runtime_error("dpp::Sampler: degenerate update");
            const double inv = 1.0 / std::sqrt(nrm2);
            for (std::size_t k = 0; k < nb; ++k)
                v[k] *= inv;
            evec.insert(evec.end(), v.begin(), v.end());

            const double* e = &evec[std::size_t(t) * nb];
            for (std::size_t j = 0; j < nn; ++j) {
                const double* row = &basisT_[j * nb];
                double proj = 0.0;
                for (std::size_t k = 0; k < nb; ++k)
                    proj += e[k] * row[k];
                resid[j] -= proj * proj;
            }
            cfg.points.push_back(x);
        }
        std::sort(cfg.points.begin(), cfg.points.end());
        return cfg;
    }

    // Orthonormal basis values at x into out (size n+1).
    void basis_values(double x, std::vector<double>& out) const {
        const std::size_t nb = std::size_t(ctx_.n + 1);
        out.resize(nb);
        if (ctx_.param.is_chebyshev) {
            const double theta = std::acos(x);
            out[0] = 1.0;
            for (std::size_t k = 1; k < nb; ++k)
                out[k] = std::sqrt(2.0) * std::cos(double(k) * theta);
            return;
        }
        const double lam = ctx_.param.lambda;
        double prev = 0.0, cur = 1.0;
        out[0] = 1.0;
        for (std::size_t k = 1; k < nb; ++k) {
            // grouped as (k-1)+lambda so tiny lambda keeps full precision
            const double next =
                (2.0 * x * ((double(k) - 1.0) + lam) * cur -
                 ((double(k) - 2.0) + 2.0 * lam) * prev) /
                double(k);
            prev = cur;
            cur = next;
            out[k] = std::exp(ctx_.log_norm_constants[k]) * cur;
        }
    }

  private:
    void build(int m) {
        m_panels_ = m;
        const std::size_t nn = 2 * std::size_t(m);
        edges_.resize(std::size_t(m) + 1);
        theta_.resize(nn);
        qw_.resize(nn);
        wtheta_.resize(nn);
        kdiag_.resize(nn);
        const std::size_t nb = std::size_t(ctx_.n + 1);
        basisT_.resize(nn * nb);

        for (int i = 0; i <= m; ++i) {
            const double s = double(i) / double(m);
            edges_[std::size_t(i)] = specfun::pi * s * s * (3.0 - 2.0 * s);
        }
        const double gl2 = 1.0 / std::sqrt(3.0);
        std::vector<double> phi(nb);
        for (int p = 0; p < m; ++p) {
            const double lo = edges_[std::size_t(p)];
            const double hi = edges_[std::size_t(p) + 1];
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            for (int q = 0; q < 2; ++q) {
                const std::size_t j = std::size_t(2 * p + q);
                theta_[j] = mid + (q == 0 ? -half * gl2 : half * gl2);
                qw_[j] = half;
                wtheta_[j] = orthopoly::weight_theta(ctx_.param, theta_[j]);
                const double x = std::cos(theta_[j]);
                basis_values(x, phi);
                double kd = 0.0;
                for (std::size_t k = 0; k < nb; ++k) {
                    basisT_[j * nb + k] = phi[k];
                    kd += phi[k] * phi[k];
                }
                kdiag_[j] = kd;
            }
        }
    }

    orthopoly::KernelContext ctx_;
    int m_panels_ = 0;
    std::vector<double> edges_;
    std::vector<double> theta_;
    std::vector<double> qw_;
    std::vector<double> wtheta_;
    std::vector<double> kdiag_;
    std::vector<double> basisT_; // node-major basis table
};

inline McEstimate mc_expected_energy(const orthopoly::KernelContext& ctx,
                                     long num_samples, std::uint64_t seed) {
    if (num_samples < 2)
        throw std::domain_error("mc_expected_energy: requires num_samples >= 2");
    const Sampler sampler(ctx);
    const std::vector<double> energies = parallel::map_indexed(
        std::size_t(num_samples), [&](std::size_t i) {
            return fekete::log_energy(sampler.sample(substream_seed(seed, i)));
        });
    McEstimate est;
    est.num_samples = num_samples;
    est.mean = parallel::pairwise_sum(energies) / double(num_samples);
    std::vector<double> sq(energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) {
        const double d = energies[i] - est.mean;
        sq[i] = d * d;
    }
    const double var = parallel::pairwise_sum(sq) / double(num_samples - 1);
    est.std_error = std::sqrt(var / double(num_samples));
    return est;
}

struct HistogramBin {
    double theta_lo;
    double theta_hi;
    double empirical;   // mean points per sample in the bin
    double theoretical; // expected points per sample in the bin
};

struct IntensityHistogram {
    std::vector<HistogramBin> bins;
    double chi_square = 0.0;
    long dof = 0;
    double p_value = 1.0;
};

// Bins are equal-width in theta = arccos x; the theoretical column is the
// first-intensity integral over each bin and sums to n+1.
inline IntensityHistogram intensity_histogram(const orthopoly::KernelContext& ctx,
                                              long num_samples, int nbins,
                                              std::uint64_t seed) {
    if (nbins < 10)
        throw std::domain_error("intensity_histogram: requires bins >= 10");
    const orthopoly::GegenbauerParam p = ctx.param;
    const double pi = specfun::pi;
    IntensityHistogram hist;
    hist.bins.resize(std::size_t(nbins));

    auto f = [&](double th) {
        return orthopoly::kernel_diag_angle(ctx, th) *
               orthopoly::weight_theta(p, th);
    };
    for (int b = 0; b < nbins; ++b) {
        const double lo = pi * double(b) / nbins;
        const double hi = pi * double(b + 1) / nbins;
        quadrature::GradedOptions opt;
        opt.h_max = std::min(0.4, 8.0 / (2.0 * ctx.n + 3.0));
        opt.endpoint_tol = 1e-12;
        opt.grade_left = (b == 0);
        opt.grade_right = (b == nbins - 1);
        hist.bins[std::size_t(b)] = {lo, hi, 0.0,
                                     quadrature::integrate_graded(f, lo, hi, opt).value};
    }

    const Sampler sampler(ctx);
    std::vector<long> counts(std::size_t(nbins), 0);
    for (long i = 0; i < num_samples; ++i) {
        const auto cfg = sampler.sample(substream_seed(seed, std::uint64_t(i)));
        for (double x : cfg.points) {
            const double th = std::acos(x);
            int b = int(th / pi * nbins);
            b = std::clamp(b, 0, nbins - 1);
            ++counts[std::size_t(b)];
        }
    }
    double chi2 = 0.0;
    for (int b = 0; b < nbins; ++b) {
        auto& bin = hist.bins[std::size_t(b)];
        bin.empirical = double(counts[std::size_t(b)]) / double(num_samples);
        const double expected = double(num_samples) * bin.theoretical;
        if (expected > 0.0) {
            const double d = double(counts[std::size_t(b)]) - expected;
            chi2 += d * d / expected;
        }
    }
    hist.chi_square = chi2;
    hist.dof = nbins - 1;
    hist.p_value = specfun::chi_square_tail(chi2, double(hist.dof));
    return hist;
}

} // namespace logdpp::dpp

#endif
