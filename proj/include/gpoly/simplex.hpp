#pragma once

// Dense two-phase primal simplex over the rationals with Bland's rule.
//
// Problems are stated over free or nonnegative variables with <=, >= and =
// rows. Free variables are split into positive and negative parts, each row
// gets a slack (if it is an inequality) and an artificial column for phase 1.

#include <cstddef>
#include <vector>

#include "gpoly/exact.hpp"

namespace gpoly {

enum class LPStatus { Optimal, Unbounded, Infeasible };

inline const char* to_string(LPStatus s) {
    switch (s) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Unbounded: return "unbounded";
        case LPStatus::Infeasible: return "infeasible";
    }
    return "?";
}

enum class Relation { LessEqual, GreaterEqual, Equal };

/// minimize <objective, x> subject to rows, with x_j >= 0 where nonneg[j].
struct LinearProgram {
    struct Row {
        Vector coeffs;
        Relation rel;
        Rational rhs;
    };

    explicit LinearProgram(std::size_t num_vars)
        : num_vars(num_vars), objective(zeros(num_vars)), nonneg(num_vars, false) {}

    std::size_t num_vars;
    Vector objective;
    std::vector<bool> nonneg;
    std::vector<Row> rows;

    void add(Vector coeffs, Relation rel, Rational rhs) {
        require_same_dim(coeffs.size(), num_vars, "LP row");
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
    void add_le(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::LessEqual, std::move(rhs)); }
    void add_ge(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::GreaterEqual, std::move(rhs)); }
    void add_eq(Vector coeffs, Rational rhs) { add(std::move(coeffs), Relation::Equal, std::move(rhs)); }
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;   // Optimal only
    Vector point;     // Optimal only
    Vector ray;       // Unbounded only: feasible direction with negative objective
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * (cols + 1), Rational(0)), basis_(rows, 0) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, cols_); }
    const Rational& rhs(std::size_t r) const { return at(r, cols_); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::vector<std::size_t>& basis() { return basis_; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    void pivot(std::size_t pr, std::size_t pc, Vector& reduced, Rational& neg_value) {
        const Rational inv = 1 / at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c)
            if (sgn(at(pr, c)) != 0) at(pr, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || sgn(at(r, pc)) == 0) continue;
            const Rational f = at(r, pc);
            for (std::size_t c = 0; c <= cols_; ++c)
                if (sgn(at(pr, c)) != 0) at(r, c) -= f * at(pr, c);
        }
        if (sgn(reduced[pc]) != 0) {
            const Rational f = reduced[pc];
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(at(pr, c)) != 0) reduced[c] -= f * at(pr, c);
            neg_value -= f * rhs(pr);
        }
        basis_[pr] = pc;
    }

    void erase_row(std::size_t r) {
        auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1));
        cells_.erase(first, first + static_cast<std::ptrdiff_t>(cols_ + 1));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --rows_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
};

enum class PhaseOutcome { Optimal, Unbounded };

// Runs Bland-rule simplex on columns [0, allowed). On Unbounded, `entering`
// holds the column with no blocking row.
inline PhaseOutcome run_phase(Tableau& t, Vector& reduced, Rational& neg_value, std::size_t allowed,
                              std::size_t& entering) {
    for (;;) {
        std::size_t enter = allowed;
        for (std::size_t c = 0; c < allowed; ++c)
            if (sgn(reduced[c]) < 0) {
                enter = c;
                break;
            }
        if (enter == allowed) return PhaseOutcome::Optimal;
        std::size_t leave = t.rows();
        Rational best_ratio;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (sgn(t.at(r, enter)) <= 0) continue;
            Rational ratio = t.rhs(r) / t.at(r, enter);
            if (leave == t.rows() || ratio < best_ratio ||
                (ratio == best_ratio && t.basis()[r] < t.basis()[leave])) {
                leave = r;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == t.rows()) {
            entering = enter;
            return PhaseOutcome::Unbounded;
        }
        t.pivot(leave, enter, reduced, neg_value);
    }
}

}  // namespace detail

inline LPResult solve(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.rows.size();

    // Column layout: structural (x_j, or x_j^+ then x_j^-), slacks, artificials.
    std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
        pos_col[j] = cols++;
        if (!lp.nonneg[j]) neg_col[j] = cols++;
    }
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (lp.rows[i].rel != Relation::Equal) slack_col[i] = cols++;
    const std::size_t real_cols = cols;
    cols += m;

    detail::Tableau t(m, cols);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        const bool flip = sgn(row.rhs) < 0;
        auto put = [&](std::size_t c, const Rational& v) { t.at(i, c) = flip ? Rational(-v) : v; };
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(row.coeffs[j]) == 0) continue;
            put(pos_col[j], row.coeffs[j]);
            if (neg_col[j] != SIZE_MAX) put(neg_col[j], Rational(-row.coeffs[j]));
        }
        if (row.rel == Relation::LessEqual) put(slack_col[i], Rational(1));
        if (row.rel == Relation::GreaterEqual) put(slack_col[i], Rational(-1));
        t.rhs(i) = flip ? Rational(-row.rhs) : row.rhs;
        t.at(i, real_cols + i) = 1;
        t.basis()[i] = real_cols + i;
    }

    // Phase 1: minimize the sum of artificials.
    Vector reduced = zeros(cols);
    Rational neg_value = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < real_cols; ++c)
            if (sgn(t.at(i, c)) != 0) reduced[c] -= t.at(i, c);
        neg_value -= t.rhs(i);
    }
    std::size_t entering = 0;
    detail::run_phase(t, reduced, neg_value, cols, entering);
    LPResult result;
    if (sgn(neg_value) != 0) {
        result.status = LPStatus::Infeasible;
        return result;
    }
    // Drive remaining (zero-level) artificials out, dropping redundant rows.
    for (std::size_t r = t.rows(); r-- > 0;) {
        if (t.basis()[r] < real_cols) continue;
        std::size_t c = 0;
        while (c < real_cols && sgn(t.at(r, c)) == 0) ++c;
        if (c < real_cols)
            t.pivot(r, c, reduced, neg_value);
        else
            t.erase_row(r);
    }

    // Phase 2.
    Vector cost = zeros(cols);
    for (std::size_t j = 0; j < n; ++j) {
        cost[pos_col[j]] = lp.objective[j];
        if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -lp.objective[j];
    }
    reduced = cost;
    neg_value = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
        const Rational& cb = cost[t.basis()[r]];
        if (sgn(cb) == 0) continue;
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(t.at(r, c)) != 0) reduced[c] -= cb * t.at(r, c);
        neg_value -= cb * t.rhs(r);
    }
    for (std::size_t c = real_cols; c < cols; ++c) reduced[c] = 0;

    auto to_structural = [&](const Vector& column_values) {
        Vector x = zeros(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = column_values[pos_col[j]];
            if (neg_col[j] != SIZE_MAX) x[j] -= column_values[neg_col[j]];
        }
        return x;
    };

    const auto outcome = detail::run_phase(t, reduced, neg_value, real_cols, entering);
    if (outcome == detail::PhaseOutcome::Unbounded) {
        Vector dir = zeros(cols);
        dir[entering] = 1;
        for (std::size_t r = 0; r < t.rows(); ++r) dir[t.basis()[r]] = -t.at(r, entering);
        result.status = LPStatus::Unbounded;
        result.ray = to_structural(dir);
        return result;
    }
    Vector values = zeros(cols);
    for (std::size_t r = 0; r < t.rows(); ++r) values[t.basis()[r]] = t.rhs(r);
    result.status = LPStatus::Optimal;
    result.point = to_structural(values);
    result.value = dot(lp.objective, result.point);
    return result;
}

/// True iff the constraint system of `lp` has a solution (objective ignored).
inline bool feasible(LinearProgram lp) {
    lp.objective = zeros(lp.num_vars);
    return solve(lp).status == LPStatus::Optimal;
}

}  // namespace gpoly
