#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace homcov::lp {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEq, Equal };

struct Constraint {
    std::vector<double> row;
    Relation rel = Relation::LessEq;
    double rhs = 0.0;
};

/// Dense linear program: maximize objective . x subject to the constraints
/// and optional per-variable box bounds (defaults to free variables).
struct LinearProgram {
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower;  // empty or size n; -inf = unbounded below
    std::vector<double> upper;  // empty or size n; +inf = unbounded above

    int num_vars() const { return static_cast<int>(objective.size()); }

    void add_le(std::vector<double> row, double rhs) {
        constraints.push_back({std::move(row), Relation::LessEq, rhs});
    }
    void add_eq(std::vector<double> row, double rhs) {
        constraints.push_back({std::move(row), Relation::Equal, rhs});
    }
    void set_bounds(int var, double lo, double hi) {
        if (lower.empty()) lower.assign(objective.size(), -kInf);
        if (upper.empty()) upper.assign(objective.size(), kInf);
        lower[static_cast<size_t>(var)] = lo;
        upper[static_cast<size_t>(var)] = hi;
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> solution;  // only meaningful when Optimal
    double objective_value = 0.0;
};

/// Thrown when the simplex iteration cap is hit; a distinct failure rather
/// than a silently wrong status.
struct lp_stall_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two-phase dense simplex with Bland's anti-cycling rule.
/// Deterministic for a fixed input. Intended for small problems
/// (<= 64 variables, <= 4096 constraints).
LpOutcome solve(const LinearProgram& lp);

}  // namespace homcov::lp
