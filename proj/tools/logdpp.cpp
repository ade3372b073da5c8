// logdpp: logarithmic energies of point configurations in [-1,1].
//
// Subcommands:
//   fekete  exact Fekete energies (direct, exact formula, asymptotic)
//   dpp     expected DPP energy by closed form, quadrature, or Monte Carlo
//   sweep   E(lambda, n+1) over a lambda grid, with the Fekete baseline
//   verify  self-check suites (identities vs independent quadrature)
//
// Output is CSV (comma, '.' decimal, LF, header row) to --out or stdout.
// Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 I/O.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logdpp/closedform.hpp"
#include "logdpp/dpp.hpp"
#include "logdpp/fekete.hpp"
#include "logdpp/orthopoly.hpp"
#include "logdpp/quadrature.hpp"
#include "logdpp/report.hpp"
#include "logdpp/specfun.hpp"

namespace {

using namespace logdpp;

constexpr double kNA = std::numeric_limits<double>::quiet_NaN();

long elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// Writes `body(stream)` to out_path or stdout; returns 0 or 3 (I/O failure).
template <class Body>
int emit(const std::string& out_path, Body&& body) {
    if (out_path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 3;
    }
    body(os);
    os.flush();
    if (!os) {
        std::cerr << "error: write failed: " << out_path << "\n";
        return 3;
    }
    return 0;
}

int run_fekete(const std::vector<long>& n_list, const std::string& out_path) {
    for (long n : n_list)
        if (n < 2) {
            std::cerr << "error: fekete requires n >= 2\n";
            return 2;
        }
    std::vector<report::EnergyRow> rows;
    for (long n : n_list) {
        auto t0 = std::chrono::steady_clock::now();
        const double direct =
            fekete::log_energy(fekete::fekete_points(int(n)));
        rows.push_back({"fekete", "E", kNA, n, direct, kNA, elapsed_ms(t0)});
        t0 = std::chrono::steady_clock::now();
        rows.push_back({"epsilon_exact", "E", kNA, n, fekete::epsilon_exact(n),
                        kNA, elapsed_ms(t0)});
        t0 = std::chrono::steady_clock::now();
        rows.push_back({"epsilon_asym", "E", kNA, n,
                        fekete::epsilon_asymptotic(n), kNA, elapsed_ms(t0)});
    }
    return emit(out_path, [&](std::ostream& os) { report::write_csv(os, rows); });
}

int run_dpp(double lambda, long n, const std::string& mode, long samples,
            std::uint64_t seed, double tol, const std::string& out_path) {
    if (n < 0 || !(lambda > -0.5)) {
        std::cerr << "error: dpp requires n >= 0 and lambda > -1/2\n";
        return 2;
    }
    const long npts = n + 1;
    std::vector<report::EnergyRow> rows;
    const auto t0 = std::chrono::steady_clock::now();
    if (mode == "closed") {
        if (lambda == 0.0) {
            if (n < 1) {
                std::cerr << "error: closed mode requires n >= 1\n";
                return 2;
            }
            rows.push_back({"closed_form", "E", lambda, npts,
                            closedform::E0_exact(npts), kNA, 0});
            rows.push_back({"closed_form", "L1", lambda, npts,
                            closedform::L1_cheb(n), kNA, 0});
            rows.push_back({"closed_form", "L2", lambda, npts,
                            closedform::L2_cheb(n), kNA, 0});
        }
        rows.push_back({"closed_form", "L3", lambda, npts,
                        closedform::L3_exact(lambda, n), kNA, 0});
    } else if (mode == "quad") {
        const auto l1 = quadrature::integrate_L1(lambda, int(n), tol);
        const auto l2 = quadrature::integrate_L2(lambda, int(n), tol);
        const auto l3 = quadrature::integrate_L3(lambda, int(n), tol);
        rows.push_back({"quadrature", "E", lambda, npts, l1.value - l2.value,
                        l1.error_estimate + l2.error_estimate, 0});
        rows.push_back({"quadrature", "L1", lambda, npts, l1.value,
                        l1.error_estimate, 0});
        rows.push_back({"quadrature", "L2", lambda, npts, l2.value,
                        l2.error_estimate, 0});
        rows.push_back({"quadrature", "L3", lambda, npts, l3.value,
                        l3.error_estimate, 0});
    } else if (mode == "mc") {
        if (samples < 2) {
            std::cerr << "error: mc mode requires --samples >= 2\n";
            return 2;
        }
        const orthopoly::KernelContext ctx{orthopoly::GegenbauerParam(lambda),
                                           int(n)};
        const dpp::McEstimate est =
            dpp::mc_expected_energy(ctx, samples, seed);
        rows.push_back({"monte_carlo", "E", lambda, npts, est.mean,
                        est.std_error, 0});
    } else {
        std::cerr << "error: unknown mode '" << mode << "'\n";
        return 2;
    }
    const long ms = elapsed_ms(t0);
    for (auto& r : rows)
        if (r.runtime_ms == 0)
            r.runtime_ms = ms;
    return emit(out_path, [&](std::ostream& os) { report::write_csv(os, rows); });
}

bool parse_grid(const std::string& spec, std::vector<double>& grid) {
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':')
        return false;
    if (!(step > 0.0) || b < a)
        return false;
    for (double v = a; v <= b + 0.5 * step; v += step)
        grid.push_back(v);
    return !grid.empty();
}

int run_sweep(const std::string& grid_spec, long n, double tol,
              const std::string& out_path) {
    std::vector<double> grid;
    if (!parse_grid(grid_spec, grid)) {
        std::cerr << "error: --grid expects \"a:b:step\" with step > 0\n";
        return 2;
    }
    for (double lam : grid)
        if (!(lam > -0.5)) {
            std::cerr << "error: sweep requires every lambda > -1/2\n";
            return 2;
        }
    if (n < 1) {
        std::cerr << "error: sweep requires n >= 1\n";
        return 2;
    }
    std::vector<report::EnergyRow> rows;
    for (double lam : grid) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto e = quadrature::expected_energy_numeric(lam, int(n), tol);
        rows.push_back({"quadrature", "E", lam, n + 1, e.value,
                        e.error_estimate, elapsed_ms(t0)});
    }
    rows.push_back({"epsilon_exact", "E", kNA, n + 1,
                    fekete::epsilon_exact(n + 1), kNA, 0});
    return emit(out_path, [&](std::ostream& os) { report::write_csv(os, rows); });
}

void check(std::vector<report::CheckRow>& rows, const std::string& id,
           double expected, double observed, double tol) {
    rows.push_back({id, expected, observed, tol,
                    std::abs(expected - observed) <= tol});
}

void verify_lemmas(std::vector<report::CheckRow>& rows) {
    // cosine-log integral table vs graded quadrature
    for (int k = 1; k <= 4; ++k)
        for (int l = 0; l <= k; ++l) {
            auto trig = [k, l](double a) {
                return std::cos(k * a) * std::cos(l * a);
            };
            const auto q =
                quadrature::integrate_cos_log(trig, 2.0 * k + 1.0, 1e-9);
            check(rows,
                  "cos_log_k" + std::to_string(k) + "_l" + std::to_string(l),
                  closedform::cos_log_integral(k, l), q.value, 1e-7);
        }
    // harmonic block sum identity vs direct summation
    for (long n : {2L, 10L, 100L}) {
        double direct = 0.0;
        for (long k = 2; k <= n; ++k)
            direct += specfun::harmonic(2 * k - 1);
        check(rows, "harmonic_block_n" + std::to_string(n), direct,
              closedform::harmonic_block_sum(n), 1e-10);
    }
    // equilibrium-potential integral: int_0^pi log(1/(2 sin v)) dv = 0
    {
        quadrature::GradedOptions opt;
        opt.endpoint_tol = 1e-12;
        opt.max_depth = 64;
        const auto q = quadrature::integrate_graded(
            [](double v) { return -std::log(2.0 * std::sin(v)); }, 0.0,
            specfun::pi, opt);
        check(rows, "log_sin_zero_integral", 0.0, q.value, 1e-8);
    }
    // mixed Chebyshev moments vs 2-D singular quadrature
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= k; ++l) {
            const auto q = quadrature::integrate_J_moment(k, l, 1e-7);
            check(rows, "J_k" + std::to_string(k) + "_l" + std::to_string(l),
                  closedform::J_moment(k, l), q.value, 1e-6);
        }
    // log-moment closed form and its telescoping into L3
    check(rows, "log_moment_half_0", std::log(2.0) - 1.0,
          closedform::gegenbauer_log_moment(0.5, 0), 1e-12);
    {
        const double lam = 0.7;
        double s = 0.0;
        for (long k = 0; k <= 5; ++k)
            s += closedform::gegenbauer_log_moment(lam, k);
        check(rows, "L3_telescoping", closedform::L3_exact(lam, 5), -2.0 * s,
              1e-10);
    }
}

void verify_kernels(std::vector<report::CheckRow>& rows) {
    for (double lam : {-0.25, 0.0, 1.0})
        for (int n : {2, 5}) {
            const orthopoly::GegenbauerParam p(lam);
            const orthopoly::KernelContext ctx(p, n);
            const auto rule = quadrature::gauss_rule(lam, n + 2);
            double trace = 0.0;
            for (int i = 0; i < rule.order; ++i)
                trace += rule.weights[i] *
                         orthopoly::kernel_diag(ctx, rule.nodes[i]);
            std::ostringstream id;
            id << "trace_lam" << lam << "_n" << n;
            check(rows, id.str(), double(n + 1), trace, 1e-9);
        }
    // lambda = 0 closed form vs direct sum
    {
        const orthopoly::KernelContext ctx(orthopoly::GegenbauerParam(0.0), 8);
        for (double x : {-0.7, 0.1, 0.6}) {
            double direct = 0.0;
            for (int k = 0; k <= 8; ++k) {
                const double v = orthopoly::gegenbauer_normalized(ctx, k, x);
                direct += v * v;
            }
            std::ostringstream id;
            id << "cheb_diag_x" << x;
            check(rows, id.str(), direct, orthopoly::kernel_diag(ctx, x),
                  1e-10);
        }
    }
}

int run_verify(const std::string& suite, const std::string& out_path) {
    std::vector<report::CheckRow> rows;
    if (suite == "lemmas" || suite == "all")
        verify_lemmas(rows);
    if (suite == "kernels" || suite == "all")
        verify_kernels(rows);
    if (rows.empty()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    const int io = emit(out_path, [&](std::ostream& os) {
        report::write_checks_csv(os, rows);
    });
    if (io != 0)
        return io;
    for (const auto& r : rows)
        if (!r.pass)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"logarithmic energies of point configurations in [-1,1]"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "output CSV path (default: stdout)");

    auto* cmd_fekete = app.add_subcommand("fekete", "Fekete point energies");
    std::vector<long> n_list;
    cmd_fekete->add_option("--n", n_list, "point counts (repeatable)")
        ->required();

    auto* cmd_dpp = app.add_subcommand("dpp", "expected DPP energy");
    double lambda = 0.0;
    long n = 1;
    std::string mode = "closed";
    long samples = 10000;
    std::uint64_t seed = 42;
    double tol = 0.0;
    cmd_dpp->add_option("--lambda", lambda, "Gegenbauer index (> -1/2)");
    cmd_dpp->add_option("--n", n, "kernel degree; the process has n+1 points")
        ->required();
    cmd_dpp->add_option("--mode", mode, "closed | quad | mc");
    cmd_dpp->add_option("--samples", samples, "Monte-Carlo sample count");
    cmd_dpp->add_option("--seed", seed, "Monte-Carlo seed");
    cmd_dpp->add_option("--tol", tol, "quadrature tolerance");

    auto* cmd_sweep = app.add_subcommand("sweep", "lambda sweep of E(lambda, n+1)");
    std::string grid_spec;
    long sweep_n = 1;
    double sweep_tol = 0.0;
    cmd_sweep->add_option("--grid", grid_spec, "lambda grid \"a:b:step\"")
        ->required();
    cmd_sweep->add_option("--n", sweep_n, "kernel degree")->required();
    cmd_sweep->add_option("--tol", sweep_tol, "quadrature tolerance");

    auto* cmd_verify = app.add_subcommand("verify", "identity self-checks");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "lemmas | kernels | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_fekete->parsed())
            return run_fekete(n_list, out_path);
        if (cmd_dpp->parsed()) {
            if (tol <= 0.0)
                tol = quadrature::default_tol(int(n));
            return run_dpp(lambda, n, mode, samples, seed, tol, out_path);
        }
        if (cmd_sweep->parsed()) {
            if (sweep_tol <= 0.0)
                sweep_tol = quadrature::default_tol(int(sweep_n));
            return run_sweep(grid_spec, sweep_n, sweep_tol, out_path);
        }
        if (cmd_verify->parsed())
            return run_verify(suite, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
