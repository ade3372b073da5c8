#ifndef LOGDPP_REPORT_HPP
#define LOGDPP_REPORT_HPP

// Uniform CSV report rows shared by every compute path.
// Format contract: comma separator, '.' decimal, LF line endings, one
// header row, numeric values with 12 significant digits, rows sorted by
// (n_points, method). Missing values (lambda for Fekete rows, error for
// exact formulas) are printed as "NA".

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace logdpp::report {

struct EnergyRow {
    std::string method;   // fekete | epsilon_exact | epsilon_asym | closed_form | quadrature | monte_carlo
    std::string quantity; // E | L1 | L2 | L3 | lambda-sweep check ids
    double lambda;        // NaN -> NA
    long n_points;
    double value;
    double error;      // NaN -> NA
    long runtime_ms = 0;
};

inline std::string format_value(double v) {
    if (std::isnan(v))
        return "NA";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

inline void write_csv(std::ostream& os, std::vector<EnergyRow> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const EnergyRow& a, const EnergyRow& b) {
                         if (a.n_points != b.n_points)
                             return a.n_points < b.n_points;
                         return a.method < b.method;
                     });
    os << "method,quantity,lambda,n_points,value,error,runtime_ms\n";
    for (const auto& r : rows) {
        os << r.method << ',' << r.quantity << ',' << format_value(r.lambda)
           << ',' << r.n_points << ',' << format_value(r.value) << ','
           << format_value(r.error) << ',' << r.runtime_ms << '\n';
    }
}

struct CheckRow {
    std::string check_id;
    double expected;
    double observed;
    double tolerance;
    bool pass;
};

inline void write_checks_csv(std::ostream& os, const std::vector<CheckRow>& rows) {
    os << "check_id,expected,observed,tolerance,pass\n";
    for (const auto& r : rows) {
        os << r.check_id << ',' << format_value(r.expected) << ','
           << format_value(r.observed) << ',' << format_value(r.tolerance)
           << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

} // namespace logdpp::report

#endif
