#pragma once
// Dense linear programming for the small feasibility and rescaling problems
// that appear throughout the library. Two-phase primal simplex with Bland's
// anti-cycling rule; this is deliberately simple because every program we
// solve has at most a few hundred rows or columns.

#include <limits>
#include <vector>

namespace opuc {

inline constexpr double kLpTolerance = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Rel { LessEq, Eq };

struct Constraint {
    std::vector<double> coeffs;
    Rel rel = Rel::LessEq;
    double rhs = 0.0;
};

// maximize objective·x subject to the constraints and per-variable bounds.
// Bounds default to [0, +inf); lower = -kInf makes a variable free below.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower;  // empty means all zeros
    std::vector<double> upper;  // empty means all +inf

    std::size_t num_vars() const { return objective.size(); }
    void add_constraint(std::vector<double> coeffs, Rel rel, double rhs) {
        constraints.push_back({std::move(coeffs), rel, rhs});
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    std::vector<double> x;

    bool optimal() const { return status == LpStatus::Optimal; }
};

LpResult solve_lp(const LinearProgram& lp);

// Residual check used by callers and tests: largest constraint or bound
// violation of x under lp.
double lp_violation(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace opuc
