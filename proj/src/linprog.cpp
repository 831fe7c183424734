// Exact rational simplex (Bland's rule) and Gaussian elimination.
#include "ctx/linprog.hpp"

#include "ctx/errors.hpp"

#include <cstddef>
#include <utility>

namespace ctx {

namespace {

// Dense tableau simplex over the rationals. Columns 0..n-1 are the caller's
// variables; any extra columns (slacks or artificials) are appended by the
// entry points below. Reduced costs are recomputed per column, which is
// plenty at desk scale and keeps the pivot step simple.
class Tableau {
public:
    Tableau(RatMatrix rows, RatVector rhs, RatVector cost, std::vector<int> basis)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), cost_(std::move(cost)),
          basis_(std::move(basis)) {}

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cost_.size(); }
    const std::vector<int>& basis() const { return basis_; }
    const RatMatrix& rows() const { return rows_; }

    Rational reduced_cost(std::size_t j) const {
        Rational rc = cost_[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& coeff = rows_[i][j];
            if (coeff != 0) rc -= cost_[static_cast<std::size_t>(basis_[i])] * coeff;
        }
        return rc;
    }

    // Returns Optimal or Unbounded.
    LpStatus run() {
        for (;;) {
            // Bland: entering column = lowest index with positive reduced cost.
            std::size_t enter = num_cols();
            for (std::size_t j = 0; j < num_cols(); ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(j) > 0) { enter = j; break; }
            }
            if (enter == num_cols()) return LpStatus::Optimal;

            // Ratio test; ties broken by the lowest basic variable index.
            std::size_t leave = num_rows();
            Rational best_ratio;
            for (std::size_t i = 0; i < num_rows(); ++i) {
                const Rational& coeff = rows_[i][enter];
                if (coeff <= 0) continue;
                Rational ratio = rhs_[i] / coeff;
                if (leave == num_rows() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == num_rows()) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / rows_[row][col];
        for (auto& entry : rows_[row]) entry *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < num_rows(); ++i) {
            if (i == row) continue;
            const Rational factor = rows_[i][col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j < num_cols(); ++j)
                if (rows_[row][j] != 0) rows_[i][j] -= factor * rows_[row][j];
            rhs_[i] -= factor * rhs_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    Rational objective() const {
        Rational total = 0;
        for (std::size_t i = 0; i < num_rows(); ++i)
            total += cost_[static_cast<std::size_t>(basis_[i])] * rhs_[i];
        return total;
    }

    RatVector primal(std::size_t n) const {
        RatVector x(n, 0);
        for (std::size_t i = 0; i < num_rows(); ++i)
            if (basis_[i] >= 0 && static_cast<std::size_t>(basis_[i]) < n)
                x[static_cast<std::size_t>(basis_[i])] = rhs_[i];
        return x;
    }

private:
    bool is_basic(std::size_t j) const {
        for (int b : basis_)
            if (static_cast<std::size_t>(b) == j) return true;
        return false;
    }

    RatMatrix rows_;
    RatVector rhs_;
    RatVector cost_;
    std::vector<int> basis_;
};

void check_dimensions(const RatMatrix& A, const RatVector& b, std::size_t n_expected) {
    if (A.size() != b.size()) throw ValidationError("constraint matrix and rhs sizes differ");
    for (const auto& row : A)
        if (row.size() != n_expected)
            throw ValidationError("constraint row length does not match variable count");
}

}  // namespace

LpSolution solve_equality_feasibility(const RatMatrix& A, const RatVector& b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    check_dimensions(A, b, n);
    if (m == 0) return LpSolution{LpStatus::Optimal, 0, {}, {}};

    // Phase-one system: rows normalized to b >= 0, one artificial per row,
    // maximize minus the artificial mass.
    RatMatrix rows(m, RatVector(n + m, 0));
    RatVector rhs(m);
    RatVector cost(n + m, 0);
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? -A[i][j] : A[i][j];
        rhs[i] = flip ? -b[i] : b[i];
        rows[i][n + i] = 1;
        cost[n + i] = -1;
        basis[i] = static_cast<int>(n + i);
    }

    Tableau tableau(std::move(rows), std::move(rhs), std::move(cost), std::move(basis));
    const LpStatus status = tableau.run();
    if (status != LpStatus::Optimal)
        throw Error("phase-one simplex reported an unbounded objective");
    if (tableau.objective() != 0) return LpSolution{LpStatus::Infeasible, 0, {}, {}};
    return LpSolution{LpStatus::Optimal, 0, tableau.primal(n), {}};
}

LpSolution maximize_over_polytope(const RatMatrix& A, const RatVector& b, const RatVector& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    check_dimensions(A, b, n);
    for (const auto& entry : b)
        if (entry < 0) throw ValidationError("polytope rhs must be nonnegative");

    if (m == 0) {
        for (const auto& cj : c)
            if (cj > 0) return LpSolution{LpStatus::Unbounded, 0, {}, {}};
        return LpSolution{LpStatus::Optimal, 0, RatVector(n, 0), {}};
    }

    RatMatrix rows(m, RatVector(n + m, 0));
    RatVector cost(n + m, 0);
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = A[i][j];
        rows[i][n + i] = 1;
        basis[i] = static_cast<int>(n + i);
    }
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];

    Tableau tableau(std::move(rows), b, std::move(cost), std::move(basis));
    const LpStatus status = tableau.run();
    if (status == LpStatus::Unbounded) return LpSolution{LpStatus::Unbounded, 0, {}, {}};

    LpSolution solution{LpStatus::Optimal, tableau.objective(), tableau.primal(n), {}};
    // Dual multipliers read off the slack columns: y_i = -reduced_cost(slack_i).
    solution.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) solution.dual[i] = -tableau.reduced_cost(n + i);
    return solution;
}

LpSolution solve_linear_system(const RatMatrix& A, const RatVector& b) {
    const std::size_t m = A.size();
    const std::size_t n = m == 0 ? 0 : A[0].size();
    check_dimensions(A, b, n);

    RatMatrix work = A;
    RatVector rhs = b;
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m && work[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == m) continue;
        std::swap(work[pivot_row], work[row]);
        std::swap(rhs[pivot_row], rhs[row]);
        const Rational inv = 1 / work[row][col];
        for (std::size_t j = col; j < n; ++j) work[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || work[i][col] == 0) continue;
            const Rational factor = work[i][col];
            for (std::size_t j = col; j < n; ++j) work[i][j] -= factor * work[row][j];
            rhs[i] -= factor * rhs[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (rhs[i] != 0) return LpSolution{LpStatus::Infeasible, 0, {}, {}};

    RatVector x(n, 0);
    for (std::size_t i = 0; i < row; ++i)
        x[static_cast<std::size_t>(pivot_col_of_row[i])] = rhs[i];
    return LpSolution{LpStatus::Optimal, 0, std::move(x), {}};
}

}  // namespace ctx
