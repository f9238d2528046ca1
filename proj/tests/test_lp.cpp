#include <doctest.h>

#include <random>

#include "homcov/lp.hpp"

using namespace homcov;

TEST_CASE("one variable, one bound") {
    lp::LinearProgram p;
    p.objective = {1.0};
    p.add_le({1.0}, 3.0);
    p.set_bounds(0, -lp::kInf, lp::kInf);
    auto out = lp::solve(p);
    REQUIRE(out.status == lp::LpStatus::Optimal);
    CHECK(out.objective_value == doctest::Approx(3.0));
    CHECK(out.solution[0] == doctest::Approx(3.0));
}

TEST_CASE("infeasible pair") {
    lp::LinearProgram p;
    p.objective = {1.0};
    p.add_le({1.0}, 1.0);
    p.add_le({-1.0}, -2.0);  // x >= 2
    p.set_bounds(0, -lp::kInf, lp::kInf);
    CHECK(lp::solve(p).status == lp::LpStatus::Infeasible);
}

TEST_CASE("boxed two variables") {
    lp::LinearProgram p;
    p.objective = {1.0, 1.0};
    p.add_le({1.0, 1.0}, 2.0);
    p.set_bounds(0, 0.0, 5.0);
    p.set_bounds(1, 0.0, 5.0);
    auto out = lp::solve(p);
    REQUIRE(out.status == lp::LpStatus::Optimal);
    CHECK(out.objective_value == doctest::Approx(2.0));
}

TEST_CASE("unbounded detection") {
    lp::LinearProgram p;
    p.objective = {1.0};
    p.add_le({-1.0}, 0.0);  // x >= 0, maximize x
    p.set_bounds(0, -lp::kInf, lp::kInf);
    CHECK(lp::solve(p).status == lp::LpStatus::Unbounded);
}

TEST_CASE("equality rows") {
    lp::LinearProgram p;
    p.objective = {0.0, 1.0};
    p.add_eq({1.0, 1.0}, 4.0);
    p.add_le({0.0, 1.0}, 3.0);
    p.set_bounds(0, 0.0, lp::kInf);
    p.set_bounds(1, 0.0, lp::kInf);
    auto out = lp::solve(p);
    REQUIRE(out.status == lp::LpStatus::Optimal);
    CHECK(out.objective_value == doctest::Approx(3.0));
    CHECK(out.solution[0] == doctest::Approx(1.0));
}

TEST_CASE("width mismatch throws") {
    lp::LinearProgram p;
    p.objective = {1.0, 2.0};
    p.add_le({1.0}, 1.0);
    CHECK_THROWS_AS(lp::solve(p), std::invalid_argument);
}

TEST_CASE("random LPs: feasibility and weak duality of the reported optimum") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coef(-2.0, 2.0), pos(0.2, 2.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = 3 + static_cast<int>(rng() % 6);
        lp::LinearProgram p;
        p.objective.resize(static_cast<size_t>(n));
        for (auto& c : p.objective) c = coef(rng);
        // rows through random points keep the box interior feasible
        for (int r = 0; r < m; ++r) {
            std::vector<double> row(static_cast<size_t>(n));
            for (auto& c : row) c = coef(rng);
            p.add_le(row, pos(rng));
        }
        for (int j = 0; j < n; ++j) p.set_bounds(j, -3.0, 3.0);
        const auto out = lp::solve(p);
        REQUIRE(out.status == lp::LpStatus::Optimal);  // origin is feasible, box bounds
        for (const auto& con : p.constraints) {
            double lhs = 0.0;
            for (int j = 0; j < n; ++j) lhs += con.row[static_cast<size_t>(j)] * out.solution[static_cast<size_t>(j)];
            CHECK(lhs <= con.rhs + 1e-8);
        }
        // random feasible points never beat the optimum
        for (int s = 0; s < 200; ++s) {
            std::vector<double> x(static_cast<size_t>(n));
            for (auto& xi : x) xi = coef(rng) * 1.4;
            bool feas = true;
            for (const auto& con : p.constraints) {
                double lhs = 0.0;
                for (int j = 0; j < n; ++j) lhs += con.row[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
                feas = feas && lhs <= con.rhs;
            }
            for (int j = 0; j < n; ++j) feas = feas && x[static_cast<size_t>(j)] >= -3.0 && x[static_cast<size_t>(j)] <= 3.0;
            if (!feas) continue;
            double val = 0.0;
            for (int j = 0; j < n; ++j) val += p.objective[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            CHECK(val <= out.objective_value + 1e-7);
        }
    }
}

TEST_CASE("objective scaling scales the optimum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        lp::LinearProgram p;
        p.objective = {coef(rng), coef(rng)};
        for (int r = 0; r < 4; ++r) p.add_le({coef(rng), coef(rng)}, 1.0);
        p.set_bounds(0, -2.0, 2.0);
        p.set_bounds(1, -2.0, 2.0);
        const auto base = lp::solve(p);
        REQUIRE(base.status == lp::LpStatus::Optimal);
        const double t = 3.5;
        lp::LinearProgram q = p;
        for (auto& c : q.objective) c *= t;
        const auto scaled = lp::solve(q);
        REQUIRE(scaled.status == base.status);
        CHECK(scaled.objective_value == doctest::Approx(t * base.objective_value).epsilon(1e-7));
    }
}
