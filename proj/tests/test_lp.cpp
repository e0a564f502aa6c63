#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "opuc/lp.hpp"

using namespace opuc;

namespace {

// Independent oracle: enumerate basic solutions of the inequality system
// {rows·x <= rhs} by intersecting every subset of n constraints taken as
// equalities, keep the feasible ones, and take the best objective. Only
// usable for small n, which is the point.
struct BruteLp {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<double> c;

    static bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                             std::vector<double>& x) {
        const int n = static_cast<int>(b.size());
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            double best = 1e-10;
            for (int r = col; r < n; ++r)
                if (std::fabs(a[r][col]) > best) {
                    best = std::fabs(a[r][col]);
                    piv = r;
                }
            if (piv < 0) return false;
            std::swap(a[piv], a[col]);
            std::swap(b[piv], b[col]);
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const double f = a[r][col] / a[col][col];
                for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
                b[r] -= f * b[col];
            }
        }
        x.assign(n, 0.0);
        for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
        return true;
    }

    bool feasible(const std::vector<double>& x) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) lhs += rows[r][j] * x[j];
            if (lhs > rhs[r] + 1e-7) return false;
        }
        return true;
    }

    double best_value() const {
        const int n = static_cast<int>(c.size());
        const int m = static_cast<int>(rows.size());
        double best = -1e300;
        std::vector<int> pick(n, 0);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == n) {
                std::vector<std::vector<double>> a(n, std::vector<double>(n));
                std::vector<double> b(n);
                for (int i = 0; i < n; ++i) {
                    a[i] = rows[pick[i]];
                    b[i] = rhs[pick[i]];
                }
                std::vector<double> x;
                if (!solve_linear(a, b, x) || !feasible(x)) return;
                double v = 0.0;
                for (int j = 0; j < n; ++j) v += c[j] * x[j];
                best = std::max(best, v);
                return;
            }
            for (int r = start; r < m; ++r) {
                pick[depth] = r;
                rec(r + 1, depth + 1);
            }
        };
        rec(0, 0);
        return best;
    }
};

}  // namespace

TEST_CASE("single-variable box") {
    LinearProgram lp;
    lp.objective = {1.0};
    lp.add_constraint({1.0}, Rel::LessEq, 1.0);
    const auto res = solve_lp(lp);
    REQUIRE(res.optimal());
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.x[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("simplex face") {
    LinearProgram lp;
    lp.objective = {1.0, 1.0};
    lp.add_constraint({1.0, 1.0}, Rel::LessEq, 1.0);
    const auto res = solve_lp(lp);
    REQUIRE(res.optimal());
    CHECK(res.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("infeasible and unbounded are reported") {
    LinearProgram infeasible;
    infeasible.objective = {1.0};
    infeasible.add_constraint({1.0}, Rel::LessEq, -1.0);
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

    LinearProgram unbounded;
    unbounded.objective = {1.0};
    unbounded.add_constraint({-1.0}, Rel::LessEq, 0.0);
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("equality rows and free variables") {
    // maximize x - y with x + y = 2, x free below, x <= 5, y >= 0
    LinearProgram lp;
    lp.objective = {1.0, -1.0};
    lp.lower = {-kInf, 0.0};
    lp.upper = {5.0, kInf};
    lp.add_constraint({1.0, 1.0}, Rel::Eq, 2.0);
    const auto res = solve_lp(lp);
    REQUIRE(res.optimal());
    CHECK(res.x[0] == doctest::Approx(2.0));
    CHECK(res.x[1] == doctest::Approx(0.0));
    CHECK(lp_violation(lp, res.x) <= 1e-9);
}

TEST_CASE("negative lower bound is honored") {
    LinearProgram lp;  // maximize -x with x >= -3
    lp.objective = {-1.0};
    lp.lower = {-3.0};
    lp.upper = {kInf};
    const auto res = solve_lp(lp);
    REQUIRE(res.optimal());
    CHECK(res.x[0] == doctest::Approx(-3.0));
}

TEST_CASE("optimum matches basic-solution enumeration on random programs") {
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> nvars(2, 6), nrows(1, 5);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = nvars(rng), m = nrows(rng);
        LinearProgram lp;
        BruteLp brute;
        lp.objective.resize(n);
        for (auto& v : lp.objective) v = coef(rng);
        brute.c = lp.objective;
        // rows through a known feasible point x0 >= 0 keep the program feasible
        std::vector<double> x0(n);
        for (auto& v : x0) v = std::fabs(coef(rng));
        for (int r = 0; r < m; ++r) {
            std::vector<double> a(n);
            for (auto& v : a) v = coef(rng);
            double b = 0.0;
            for (int j = 0; j < n; ++j) b += a[j] * x0[j];
            b += std::fabs(coef(rng));
            lp.add_constraint(a, Rel::LessEq, b);
            brute.rows.push_back(a);
            brute.rhs.push_back(b);
        }
        for (int j = 0; j < n; ++j) {  // caps and nonnegativity for the oracle
            std::vector<double> cap(n, 0.0), low(n, 0.0);
            cap[j] = 1.0;
            low[j] = -1.0;
            lp.add_constraint(cap, Rel::LessEq, 4.0);
            brute.rows.push_back(cap);
            brute.rhs.push_back(4.0);
            brute.rows.push_back(low);
            brute.rhs.push_back(0.0);
        }
        const auto res = solve_lp(lp);
        REQUIRE(res.status == LpStatus::Optimal);
        const double oracle = brute.best_value();
        CHECK(res.value == doctest::Approx(oracle).epsilon(1e-7));
        CHECK(lp_violation(lp, res.x) <= 1e-9);
        ++checked;
    }
    CHECK(checked == 100);
}
