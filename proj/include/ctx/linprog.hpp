#ifndef CTX_LINPROG_HPP
#define CTX_LINPROG_HPP

#include "ctx/rational.hpp"

#include <vector>

namespace ctx {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    RatVector x;     // primal values of the original variables
    RatVector dual;  // one multiplier per constraint row (maximize_over_polytope only)
};

/// Decides whether A x = b has a solution with x >= 0, by an exact phase-one
/// simplex with Bland's anti-cycling rule. Redundant or inconsistent rows are
/// handled by the artificial variables. On success x is a feasible point.
LpSolution solve_equality_feasibility(const RatMatrix& A, const RatVector& b);

/// max c.x subject to A x <= b, x >= 0, with b >= 0 (slack basis start),
/// exact simplex with Bland's rule. Returns the optimal vertex and the dual
/// vector y (feasible for the dual with c.x = b.y at optimality).
LpSolution maximize_over_polytope(const RatMatrix& A, const RatVector& b, const RatVector& c);

/// Consistency of the linear system A x = b over the rationals (no sign
/// constraint), by Gaussian elimination. On success x is one solution
/// (free variables set to zero).
LpSolution solve_linear_system(const RatMatrix& A, const RatVector& b);

}  // namespace ctx

#endif  // CTX_LINPROG_HPP
