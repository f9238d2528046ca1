#include "homcov/lp.hpp"

#include <algorithm>
#include <cmath>

#include "homcov/tolerances.hpp"

namespace homcov::lp {
namespace {

constexpr double kPivotTol = 1e-10;

// Standard-form tableau: rows = constraints (rhs >= 0), all variables >= 0.
// Bland's rule: lowest-index improving column enters; lowest basis index
// among minimum-ratio ties leaves.
struct Tableau {
    int rows = 0, cols = 0;        // cols excludes the rhs column
    std::vector<double> a;         // rows x (cols + 1), rhs last
    std::vector<int> basis;

    double& at(int r, int c) { return a[static_cast<size_t>(r) * (cols + 1) + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * (cols + 1) + c]; }
    double& rhs(int r) { return at(r, cols); }

    void pivot(int pr, int pc) {
        const double inv = 1.0 / at(pr, pc);
        for (int c = 0; c <= cols; ++c) at(pr, c) *= inv;
        at(pr, pc) = 1.0;
        for (int r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (std::fabs(f) < kPivotTol) {
                at(r, pc) = 0.0;
                continue;
            }
            for (int c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[static_cast<size_t>(pr)] = pc;
    }
};

// Maximizes obj; columns >= enter_limit never enter the basis.
// Returns false on unbounded.
bool run_simplex(Tableau& t, const std::vector<double>& obj, int enter_limit, long max_iters) {
    for (long iter = 0; iter < max_iters; ++iter) {
        int enter = -1;
        for (int c = 0; c < enter_limit; ++c) {
            double v = obj[static_cast<size_t>(c)];
            for (int r = 0; r < t.rows; ++r) {
                const double cb = obj[static_cast<size_t>(t.basis[static_cast<size_t>(r)])];
                if (cb != 0.0) v -= cb * t.at(r, c);
            }
            if (v > kPivotTol) {
                enter = c;  // Bland: lowest index
                break;
            }
        }
        if (enter < 0) return true;  // optimal
        int leave = -1;
        double best = kInf;
        for (int r = 0; r < t.rows; ++r) {
            const double coef = t.at(r, enter);
            if (coef > kPivotTol) {
                const double ratio = t.rhs(r) / coef;
                if (ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol &&
                     (leave < 0 || t.basis[static_cast<size_t>(r)] < t.basis[static_cast<size_t>(leave)]))) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave < 0) return false;
        t.pivot(leave, enter);
    }
    throw lp_stall_error("simplex: iteration cap exceeded");
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
    const int n = lp.num_vars();
    for (const auto& c : lp.constraints)
        if (static_cast<int>(c.row.size()) != n)
            throw std::invalid_argument("lp::solve: constraint width mismatch");
    if (!lp.lower.empty() && static_cast<int>(lp.lower.size()) != n)
        throw std::invalid_argument("lp::solve: bound vector width mismatch");

    // Substitute every variable by nonnegative ones:
    //   lo finite:            x = lo + u        (upper bound becomes a row)
    //   lo = -inf, hi finite: x = hi - u
    //   free:                 x = u - w
    struct Subst {
        int col_pos = -1;
        int col_neg = -1;
        double shift = 0.0;
        double sign = 1.0;
    };
    std::vector<Subst> subst(static_cast<size_t>(n));
    int ncols = 0;
    std::vector<std::pair<int, double>> box_rows;  // (var, hi - lo)
    for (int j = 0; j < n; ++j) {
        const double lo = lp.lower.empty() ? -kInf : lp.lower[static_cast<size_t>(j)];
        const double hi = lp.upper.empty() ? kInf : lp.upper[static_cast<size_t>(j)];
        if (lo > hi) return {LpStatus::Infeasible, {}, 0.0};
        auto& s = subst[static_cast<size_t>(j)];
        if (std::isfinite(lo)) {
            s = {ncols++, -1, lo, 1.0};
            if (std::isfinite(hi)) box_rows.push_back({j, hi - lo});
        } else if (std::isfinite(hi)) {
            s = {ncols++, -1, hi, -1.0};
        } else {
            s = {ncols, ncols + 1, 0.0, 1.0};
            ncols += 2;
        }
    }

    const int m = static_cast<int>(lp.constraints.size() + box_rows.size());
    std::vector<int> slack_col(static_cast<size_t>(m), -1);
    int nslack = 0;
    for (int r = 0; r < m; ++r) {
        const bool is_le = r >= static_cast<int>(lp.constraints.size()) ||
                           lp.constraints[static_cast<size_t>(r)].rel == Relation::LessEq;
        if (is_le) slack_col[static_cast<size_t>(r)] = ncols + nslack++;
    }

    Tableau t;
    t.rows = m;
    t.cols = ncols + nslack + m;  // one artificial slot per row (not all used)
    t.a.assign(static_cast<size_t>(m) * (t.cols + 1), 0.0);
    t.basis.assign(static_cast<size_t>(m), -1);
    const int real_cols = ncols + nslack;

    for (int r = 0; r < m; ++r) {
        std::vector<double> dense(static_cast<size_t>(ncols), 0.0);
        double rhs = 0.0;
        if (r < static_cast<int>(lp.constraints.size())) {
            const auto& con = lp.constraints[static_cast<size_t>(r)];
            rhs = con.rhs;
            for (int j = 0; j < n; ++j) {
                const double coef = con.row[static_cast<size_t>(j)];
                if (coef == 0.0) continue;
                const auto& s = subst[static_cast<size_t>(j)];
                rhs -= coef * s.shift;
                dense[static_cast<size_t>(s.col_pos)] += coef * s.sign;
                if (s.col_neg >= 0) dense[static_cast<size_t>(s.col_neg)] -= coef;
            }
        } else {
            const auto& [var, width] = box_rows[static_cast<size_t>(r - lp.constraints.size())];
            dense[static_cast<size_t>(subst[static_cast<size_t>(var)].col_pos)] = 1.0;
            rhs = width;
        }
        const double sgn = rhs < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < ncols; ++c) t.at(r, c) = sgn * dense[static_cast<size_t>(c)];
        if (slack_col[static_cast<size_t>(r)] >= 0) t.at(r, slack_col[static_cast<size_t>(r)]) = sgn;
        t.rhs(r) = sgn * rhs;
    }

    std::vector<double> phase1(static_cast<size_t>(t.cols), 0.0);
    bool need_phase1 = false;
    for (int r = 0; r < m; ++r) {
        const int sc = slack_col[static_cast<size_t>(r)];
        if (sc >= 0 && t.at(r, sc) > 0.5) {
            t.basis[static_cast<size_t>(r)] = sc;
        } else {
            const int ac = real_cols + r;
            t.at(r, ac) = 1.0;
            t.basis[static_cast<size_t>(r)] = ac;
            phase1[static_cast<size_t>(ac)] = -1.0;  // maximize -(sum of artificials)
            need_phase1 = true;
        }
    }

    const long cap = 2000 + 200L * (m + t.cols);
    if (need_phase1) {
        if (!run_simplex(t, phase1, real_cols, cap))
            throw lp_stall_error("simplex: phase 1 unbounded (internal)");
        double art_sum = 0.0;
        for (int r = 0; r < m; ++r)
            if (t.basis[static_cast<size_t>(r)] >= real_cols) art_sum += t.rhs(r);
        if (art_sum > Tolerances::global().lp_feasibility)
            return {LpStatus::Infeasible, {}, 0.0};
        // Pivot leftover artificials out; all-zero rows are inert and may keep one.
        for (int r = 0; r < m; ++r) {
            if (t.basis[static_cast<size_t>(r)] < real_cols) continue;
            for (int c = 0; c < real_cols; ++c) {
                if (std::fabs(t.at(r, c)) > kPivotTol) {
                    t.pivot(r, c);
                    break;
                }
            }
        }
    }

    std::vector<double> obj(static_cast<size_t>(t.cols), 0.0);
    for (int j = 0; j < n; ++j) {
        const auto& s = subst[static_cast<size_t>(j)];
        const double coef = lp.objective[static_cast<size_t>(j)];
        obj[static_cast<size_t>(s.col_pos)] += coef * s.sign;
        if (s.col_neg >= 0) obj[static_cast<size_t>(s.col_neg)] -= coef;
    }

    if (!run_simplex(t, obj, real_cols, cap)) return {LpStatus::Unbounded, {}, 0.0};

    std::vector<double> u(static_cast<size_t>(t.cols), 0.0);
    for (int r = 0; r < m; ++r) u[static_cast<size_t>(t.basis[static_cast<size_t>(r)])] = t.rhs(r);

    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.solution.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const auto& s = subst[static_cast<size_t>(j)];
        double x = s.shift + s.sign * u[static_cast<size_t>(s.col_pos)];
        if (s.col_neg >= 0) x -= u[static_cast<size_t>(s.col_neg)];
        out.solution[static_cast<size_t>(j)] = x;
    }
    double val = 0.0;
    for (int j = 0; j < n; ++j)
        val += lp.objective[static_cast<size_t>(j)] * out.solution[static_cast<size_t>(j)];
    out.objective_value = val;
    return out;
}

}  // namespace homcov::lp
