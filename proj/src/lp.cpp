#include "opuc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opuc {
namespace {

constexpr double kEps = kLpTolerance;

// Standard-form problem: maximize c·y, A y = b, y >= 0, b >= 0.
struct StandardForm {
    std::size_t n = 0;                     // structural columns
    std::vector<std::vector<double>> rows;  // each of width n
    std::vector<double> rhs;
    std::vector<double> cost;
    double cost_offset = 0.0;
    // mapping back: x[j] = sign[j] * y[col[j]] + base[j]  (+ y[neg[j]] for free vars)
    struct BackMap {
        int col = -1;
        int neg_col = -1;  // second column of a split free variable
        double sign = 1.0;
        double base = 0.0;
    };
    std::vector<BackMap> back;
};

// Shift/split variables so every structural column is >= 0, then add slacks.
StandardForm to_standard_form(const LinearProgram& lp) {
    const std::size_t nv = lp.num_vars();
    std::vector<double> lo(nv, 0.0), up(nv, kInf);
    if (!lp.lower.empty()) {
        if (lp.lower.size() != nv) throw std::invalid_argument("lp: lower bound width mismatch");
        lo = lp.lower;
    }
    if (!lp.upper.empty()) {
        if (lp.upper.size() != nv) throw std::invalid_argument("lp: upper bound width mismatch");
        up = lp.upper;
    }
    for (const auto& c : lp.constraints)
        if (c.coeffs.size() != nv) throw std::invalid_argument("lp: constraint width mismatch");

    StandardForm sf;
    sf.back.resize(nv);
    std::size_t cols = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        auto& bm = sf.back[j];
        if (lo[j] == -kInf && up[j] == kInf) {
            bm.col = static_cast<int>(cols++);
            bm.neg_col = static_cast<int>(cols++);
        } else if (lo[j] == -kInf) {
            // x = up - y
            bm.col = static_cast<int>(cols++);
            bm.sign = -1.0;
            bm.base = up[j];
        } else {
            // x = lo + y, optional row y <= up - lo added below
            bm.col = static_cast<int>(cols++);
            bm.base = lo[j];
        }
    }

    // rows in terms of y plus slack columns for inequalities
    struct Row {
        std::vector<double> a;
        Rel rel;
        double b;
    };
    std::vector<Row> rows;
    auto make_row = [&](const std::vector<double>& coeffs, Rel rel, double rhs) {
        Row r;
        r.a.assign(cols, 0.0);
        r.b = rhs;
        r.rel = rel;
        for (std::size_t j = 0; j < nv; ++j) {
            const double c = coeffs[j];
            if (c == 0.0) continue;
            const auto& bm = sf.back[j];
            r.a[bm.col] += c * bm.sign;
            if (bm.neg_col >= 0) r.a[bm.neg_col] -= c;
            r.b -= c * bm.base;
        }
        rows.push_back(std::move(r));
    };
    for (const auto& c : lp.constraints) make_row(c.coeffs, c.rel, c.rhs);
    for (std::size_t j = 0; j < nv; ++j) {
        if (lo[j] != -kInf && up[j] != kInf) {
            std::vector<double> coeffs(nv, 0.0);
            coeffs[j] = 1.0;
            make_row(coeffs, Rel::LessEq, up[j]);
        }
    }

    const std::size_t m = rows.size();
    std::size_t slack = 0;
    for (const auto& r : rows)
        if (r.rel == Rel::LessEq) ++slack;
    sf.n = cols + slack;
    sf.cost.assign(sf.n, 0.0);
    for (std::size_t j = 0; j < nv; ++j) {
        const double c = lp.objective[j];
        const auto& bm = sf.back[j];
        sf.cost[bm.col] += c * bm.sign;
        if (bm.neg_col >= 0) sf.cost[bm.neg_col] -= c;
        sf.cost_offset += c * bm.base;
    }

    sf.rows.assign(m, std::vector<double>(sf.n, 0.0));
    sf.rhs.assign(m, 0.0);
    std::size_t next_slack = cols;
    for (std::size_t i = 0; i < m; ++i) {
        auto& out = sf.rows[i];
        std::copy(rows[i].a.begin(), rows[i].a.end(), out.begin());
        double b = rows[i].b;
        if (rows[i].rel == Rel::LessEq) {
            out[next_slack++] = 1.0;
        }
        if (b < 0) {
            for (auto& v : out) v = -v;
            b = -b;
        }
        sf.rhs[i] = b;
    }
    return sf;
}

// Tableau simplex, Bland's rule. Artificial columns live at indices
// [n, n+m); phase 1 drives them to zero.
class Simplex {
  public:
    explicit Simplex(const StandardForm& sf)
        : m_(sf.rows.size()), n_(sf.n), width_(sf.n + sf.rows.size() + 1) {
        tab_.assign(m_ + 2, std::vector<double>(width_, 0.0));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            std::copy(sf.rows[i].begin(), sf.rows[i].end(), tab_[i].begin());
            tab_[i][n_ + i] = 1.0;
            tab_[i][width_ - 1] = sf.rhs[i];
            basis_[i] = static_cast<int>(n_ + i);
        }
        // row m_: phase-2 objective (negated costs); row m_+1: phase-1
        for (std::size_t j = 0; j < n_; ++j) tab_[m_][j] = -sf.cost[j];
        for (std::size_t j = 0; j < n_ + m_; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < m_; ++i) s += tab_[i][j];
            tab_[m_ + 1][j] = (j >= n_) ? 0.0 : -s;
        }
        double brhs = 0.0;
        for (std::size_t i = 0; i < m_; ++i) brhs += tab_[i][width_ - 1];
        tab_[m_ + 1][width_ - 1] = -brhs;
    }

    LpStatus run() {
        if (m_ > 0 && !phase(true)) return LpStatus::Infeasible;
        if (m_ > 0 && tab_[m_ + 1][width_ - 1] < -1e-7) return LpStatus::Infeasible;
        purge_artificials();
        if (!phase(false)) return LpStatus::Unbounded;
        return LpStatus::Optimal;
    }

    double objective() const { return tab_[m_][width_ - 1]; }

    std::vector<double> solution() const {
        std::vector<double> y(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < static_cast<int>(n_))
                y[basis_[i]] = tab_[i][width_ - 1];
        return y;
    }

  private:
    std::size_t m_, n_, width_;
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;

    bool phase(bool phase1) {
        const std::size_t obj = phase1 ? m_ + 1 : m_;
        for (;;) {
            // Bland: first structural column with negative reduced cost.
            // Artificials never re-enter once they have left the basis.
            int enter = -1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (tab_[obj][j] < -kEps) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            // ratio test; ties broken by smallest basis index (Bland)
            int leave = -1;
            double best = kInf;
            for (std::size_t i = 0; i < m_; ++i) {
                const double a = tab_[i][enter];
                if (a > kEps) {
                    const double ratio = tab_[i][width_ - 1] / a;
                    if (ratio < best - kEps ||
                        (ratio < best + kEps && (leave < 0 || basis_[i] < basis_[leave]))) {
                        best = ratio;
                        leave = static_cast<int>(i);
                    }
                }
            }
            if (leave < 0) return false;  // unbounded (phase 1 cannot hit this)
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const double inv = 1.0 / tab_[r][c];
        for (auto& v : tab_[r]) v *= inv;
        tab_[r][c] = 1.0;
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            const double f = tab_[i][c];
            if (std::fabs(f) < 1e-14) continue;
            auto& row = tab_[i];
            const auto& prow = tab_[r];
            for (std::size_t j = 0; j < width_; ++j) row[j] -= f * prow[j];
            row[c] = 0.0;
        }
        basis_[r] = static_cast<int>(c);
    }

    // After phase 1, pivot remaining artificial basics onto structural
    // columns; rows with no structural entry are redundant and harmless.
    void purge_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<int>(n_)) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (std::fabs(tab_[i][j]) > kEps) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    StandardForm sf = to_standard_form(lp);
    Simplex simplex(sf);
    LpResult res;
    res.status = simplex.run();
    if (res.status != LpStatus::Optimal) return res;
    const std::vector<double> y = simplex.solution();
    res.x.assign(lp.num_vars(), 0.0);
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        const auto& bm = sf.back[j];
        double v = bm.base + bm.sign * y[bm.col];
        if (bm.neg_col >= 0) v -= y[bm.neg_col];
        res.x[j] = v;
    }
    res.value = 0.0;
    for (std::size_t j = 0; j < lp.num_vars(); ++j) res.value += lp.objective[j] * res.x[j];
    return res;
}

double lp_violation(const LinearProgram& lp, const std::vector<double>& x) {
    double worst = 0.0;
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * x[j];
        if (c.rel == Rel::LessEq)
            worst = std::max(worst, lhs - c.rhs);
        else
            worst = std::max(worst, std::fabs(lhs - c.rhs));
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double lo = lp.lower.empty() ? 0.0 : lp.lower[j];
        const double up = lp.upper.empty() ? kInf : lp.upper[j];
        if (lo != -kInf) worst = std::max(worst, lo - x[j]);
        if (up != kInf) worst = std::max(worst, x[j] - up);
    }
    return worst;
}

}  // namespace opuc
