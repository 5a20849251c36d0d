#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace naeflow {

using Rational = mpq_class;

/// Rows sum_j coef[j] x_j >= rhs, plus a closed interval per variable.
struct LinearSystem {
    struct Row {
        std::vector<Rational> coef;
        Rational rhs;
    };

    int num_vars = 0;
    std::vector<Row> rows;
    std::vector<Rational> lower;
    std::vector<Rational> upper;

    explicit LinearSystem(int n = 0) : num_vars(n), lower(static_cast<std::size_t>(n), 0), upper(static_cast<std::size_t>(n), 1) {}

    void add_row(std::vector<Rational> coef, Rational rhs)
    {
        if (static_cast<int>(coef.size()) != num_vars)
            throw precondition_error("row length differs from variable count");
        rows.push_back({std::move(coef), std::move(rhs)});
    }

    void check() const
    {
        if (static_cast<int>(lower.size()) != num_vars || static_cast<int>(upper.size()) != num_vars)
            throw precondition_error("bounds length differs from variable count");
        for (int j = 0; j < num_vars; ++j)
            if (lower[static_cast<std::size_t>(j)] > upper[static_cast<std::size_t>(j)])
                throw precondition_error("empty bound interval for variable " + std::to_string(j));
        for (const auto& r : rows)
            if (static_cast<int>(r.coef.size()) != num_vars)
                throw precondition_error("row length differs from variable count");
    }

    bool satisfied_by(const std::vector<Rational>& x) const
    {
        if (static_cast<int>(x.size()) != num_vars)
            return false;
        for (int j = 0; j < num_vars; ++j)
            if (x[static_cast<std::size_t>(j)] < lower[static_cast<std::size_t>(j)] ||
                x[static_cast<std::size_t>(j)] > upper[static_cast<std::size_t>(j)])
                return false;
        for (const auto& r : rows) {
            Rational s = 0;
            for (int j = 0; j < num_vars; ++j)
                s += r.coef[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            if (s < r.rhs)
                return false;
        }
        return true;
    }
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<std::vector<Rational>> point;
    bool basic = false;
};

/// Plain-text dump, one "row: c0 c1 ... >= rhs" line per row, then bounds.
inline std::string to_lp_text(const LinearSystem& sys)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        os << "row" << i << ':';
        for (const auto& c : sys.rows[i].coef)
            os << ' ' << c;
        os << " >= " << sys.rows[i].rhs << '\n';
    }
    for (int j = 0; j < sys.num_vars; ++j)
        os << "bound x" << j << ": " << sys.lower[static_cast<std::size_t>(j)] << " <= x" << j
           << " <= " << sys.upper[static_cast<std::size_t>(j)] << '\n';
    return os.str();
}

/// Phase-1 simplex over exact rationals with Bland's rule.
///
/// Variables are shifted to y = x - lower >= 0; upper bounds become rows
/// -y >= lower - upper. Every row gets a surplus and an artificial column.
/// The returned point is a basic feasible solution of that standard form.
inline FeasibilityResult feasible(const LinearSystem& sys)
{
    sys.check();
    const int n = sys.num_vars;
    // rows in the shifted variables: a.y >= b
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const auto& r : sys.rows) {
        Rational rhs = r.rhs;
        for (int j = 0; j < n; ++j)
            rhs -= r.coef[static_cast<std::size_t>(j)] * sys.lower[static_cast<std::size_t>(j)];
        a.push_back(r.coef);
        b.push_back(rhs);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(j)] = -1;
        a.push_back(std::move(row));
        b.push_back(sys.lower[static_cast<std::size_t>(j)] - sys.upper[static_cast<std::size_t>(j)]);
    }
    const int m = static_cast<int>(a.size());
    // columns: y (n), surplus (m), artificial (m)
    const int cols = n + 2 * m;
    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(cols + 1), 0));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        // a.y - s = b, flipped when b < 0 so the artificial starts non-negative
        const int sign = b[static_cast<std::size_t>(i)] < 0 ? -1 : 1;
        auto& row = t[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            row[static_cast<std::size_t>(j)] = sign * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(n + i)] = -sign;
        row[static_cast<std::size_t>(n + m + i)] = 1;
        row[static_cast<std::size_t>(cols)] = sign * b[static_cast<std::size_t>(i)];
        basis[static_cast<std::size_t>(i)] = n + m + i;
    }
    // reduced costs of "minimize sum of artificials"
    std::vector<Rational> z(static_cast<std::size_t>(cols + 1), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= cols; ++j)
            if (j < n + m || j == cols)
                z[static_cast<std::size_t>(j)] -= t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (z[static_cast<std::size_t>(j)] < 0) {
                enter = j;
                break;
            }
        if (enter < 0)
            break;
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            const Rational& p = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (p <= 0)
                continue;
            Rational ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] / p;
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw construction_error("phase-1 objective unbounded");
        auto& pr = t[static_cast<std::size_t>(leave)];
        const Rational piv = pr[static_cast<std::size_t>(enter)];
        for (auto& v : pr)
            v /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave)
                continue;
            auto& row = t[static_cast<std::size_t>(i)];
            const Rational f = row[static_cast<std::size_t>(enter)];
            if (f == 0)
                continue;
            for (int j = 0; j <= cols; ++j)
                row[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
        }
        const Rational f = z[static_cast<std::size_t>(enter)];
        for (int j = 0; j <= cols; ++j)
            z[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    FeasibilityResult res;
    if (z[static_cast<std::size_t>(cols)] != 0)
        return res; // positive artificial sum: infeasible
    std::vector<Rational> x(sys.lower);
    for (int i = 0; i < m; ++i) {
        int j = basis[static_cast<std::size_t>(i)];
        if (j < n)
            x[static_cast<std::size_t>(j)] += t[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)];
    }
    if (!sys.satisfied_by(x))
        throw construction_error("simplex returned a point violating the system");
    res.feasible = true;
    res.point = std::move(x);
    res.basic = true;
    return res;
}

inline bool is_integral(const std::vector<Rational>& x)
{
    for (const auto& v : x)
        if (v.get_den() != 1)
            return false;
    return true;
}

} // namespace naeflow
