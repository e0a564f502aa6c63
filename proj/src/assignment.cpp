#include "opuc/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace opuc {
namespace {

constexpr double kInfCost = std::numeric_limits<double>::infinity();

// Jonker-Volgenant style shortest augmenting path on a cost (minimization)
// matrix; rows/cols are 1-based internally.
double min_cost_assignment(const std::vector<std::vector<double>>& cost,
                           std::vector<int>* rowsol) {
    const int n = static_cast<int>(cost.size());
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInfCost);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInfCost;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    double total = 0.0;
    if (rowsol) rowsol->assign(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j]) {
            if (rowsol) (*rowsol)[p[j] - 1] = j - 1;
            total += cost[p[j] - 1][j - 1];
        }
    }
    return total;
}

// Optimal value of the subproblem where some rows are already pinned.
double completion_value(const std::vector<std::vector<double>>& weights,
                        const std::vector<int>& pinned, int pinned_rows) {
    const int n = static_cast<int>(weights.size());
    std::vector<char> col_used(n, 0);
    double fixed = 0.0;
    for (int i = 0; i < pinned_rows; ++i) {
        fixed += weights[i][pinned[i]];
        col_used[pinned[i]] = 1;
    }
    const int m = n - pinned_rows;
    if (m == 0) return fixed;
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
        if (!col_used[j]) cols.push_back(j);
    std::vector<std::vector<double>> cost(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) cost[i][j] = -weights[pinned_rows + i][cols[j]];
    return fixed - min_cost_assignment(cost, nullptr);
}

}  // namespace

Assignment max_assignment(const std::vector<std::vector<double>>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n == 0) return {};
    for (const auto& row : weights)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("max_assignment: matrix must be square");

    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost[i][j] = -weights[i][j];
    std::vector<int> rowsol;
    const double best = -min_cost_assignment(cost, &rowsol);

    // Lexicographic tie-break: greedily pin the smallest column per row that
    // still admits an optimal completion.
    const double tol = 1e-9 * std::max(1.0, std::fabs(best));
    std::vector<int> pinned(n, -1);
    std::vector<char> col_used(n, 0);
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
            if (col_used[j]) continue;
            pinned[i] = j;
            if (completion_value(weights, pinned, i + 1) >= best - tol) {
                col_used[j] = 1;
                found = true;
            }
        }
        if (!found) {  // numerical fallback; keep the solver's assignment
            pinned = rowsol;
            break;
        }
    }
    Assignment out;
    out.perm = pinned;
    out.value = 0.0;
    for (int i = 0; i < n; ++i) out.value += weights[i][out.perm[i]];
    return out;
}

}  // namespace opuc
