#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aimkit {

/// Branching recurrence T(k) <= sum_i T(k - c_i) + 1, stored as the c_i.
struct Recurrence {
    std::vector<int> decreases;
};

inline std::string to_string(const Recurrence& r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.decreases.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.decreases[i]);
    }
    return out + "}";
}

/// Largest root of f(x) = 1 - sum x^(-c_i), by bisection on [1, l].
///
/// f is increasing on x > 1, f(1) = 1 - l <= 0 and f(l) >= 0, so the bracket
/// always holds the root.
inline double branching_factor(const Recurrence& r, double tol = 1e-9) {
    if (r.decreases.empty()) throw std::invalid_argument("empty recurrence");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    for (int c : r.decreases)
        if (c < 1) throw std::invalid_argument("recurrence decreases must be >= 1");
    if (r.decreases.size() == 1) return 1.0;

    auto f = [&](double x) {
        double s = 0;
        for (int c : r.decreases) s += std::pow(x, -c);
        return 1.0 - s;
    };
    double lo = 1.0, hi = static_cast<double>(r.decreases.size());
    if (f(hi) <= 0) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct TableRow {
    std::string label;
    Recurrence recurrence;
    double expected = 0;
    double computed = 0;
    bool pass = false;
};

constexpr double kTableTolerance = 1e-3;

/// Worst-case recurrences of branching Steps 1-7 and the three degree cases of
/// Step 7, against the known four-digit factors.
inline std::vector<TableRow> verify_reference_tables() {
    std::vector<TableRow> rows = {
        {"step1", {{1, 2}}, 1.6181},
        {"step2", {{2, 3, 2}}, 1.6181},
        {"step3", {{3, 3, 3, 2}}, 1.6717},
        {"step4", {{1, 3, 3}}, 1.6957},
        {"step5", {{1, 5, 5, 5, 5, 5}}, 1.6595},
        {"step6", {{1, 4, 4, 4}}, 1.6581},
        {"step7", {{2, 4, 4, 3, 3}}, 1.6957},
        {"step7 d(u1)=4 d(u3)=4", {{2, 4, 5, 4, 4, 4}}, 1.6445},
        {"step7 d(u1)=3 d(u3)=4", {{2, 3, 5, 4, 4, 4}}, 1.6888},
        {"step7 d(u1)=4 d(u3)=3", {{2, 4, 4, 3, 3}}, 1.6957},
    };
    for (auto& row : rows) {
        row.computed = branching_factor(row.recurrence);
        row.pass = std::abs(row.computed - row.expected) <= kTableTolerance;
    }
    return rows;
}

inline void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "row,decreases,expected,computed,pass\n";
    for (const auto& row : rows) {
        std::string dec = to_string(row.recurrence);
        for (auto& ch : dec)
            if (ch == ',') ch = ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f,%.6f", row.expected, row.computed);
        out << row.label << ',' << dec << ',' << buf << ',' << (row.pass ? "pass" : "fail") << '\n';
    }
}

struct GrowthPoint {
    std::int64_t k = 0;
    double nodes = 0;
};

struct GrowthReport {
    double base = 0;
    double constant = 0; // smallest C with nodes <= C * base^k on every point
    std::size_t points = 0;
};

inline GrowthReport tree_growth_check(const std::vector<GrowthPoint>& series, double base = 1.6957) {
    if (series.size() < 3) throw std::invalid_argument("growth check needs at least three points");
    GrowthReport report{base, 0.0, series.size()};
    for (const auto& p : series) report.constant = std::max(report.constant, p.nodes / std::pow(base, static_cast<double>(p.k)));
    return report;
}

} // namespace aimkit
