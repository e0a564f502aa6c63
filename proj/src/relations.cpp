#include "opuc/relations.hpp"

#include <algorithm>
#include <cmath>

#include "opuc/lp.hpp"

namespace opuc {

RelationReport check_exclusion_pur(const std::vector<CVec>& basisA,
                                   const std::vector<CVec>& basisB) {
    const int d = static_cast<int>(basisA.size());
    RelationReport r;
    r.relation = "exclusion-pur";
    r.lhs = rac_exclusion(basisA, basisB);
    const double ind = rac_independence(basisA, basisB);
    r.rhs = ind * ind / (4.0 * d);
    r.slack = r.lhs - r.rhs;
    r.holds = r.slack >= -1e-7;
    r.witnesses["ind"] = ind;
    return r;
}

RescalingPurReport check_rescaling_pur(double nz, int resolution) {
    RescalingPurReport rep;
    rep.nz = nz;
    const QubitPair q{nz};
    const QubitEllipse e = qubit_statistics_ellipse(q);
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    rep.cr_analytic = e.b * inv_sqrt2;  // sqrt(2) b / 2
    rep.u_analytic = 1.0 - e.a * inv_sqrt2;
    rep.analytic_residual =
        std::fabs(rep.cr_analytic * rep.cr_analytic +
                  (1.0 - rep.u_analytic) * (1.0 - rep.u_analytic) - 1.0);

    const StatisticsSet s = e.statistics_set(resolution);
    rep.cr_geometric = rescaling_independence(s).value;
    rep.u_geometric = rac_uncertainty_set(s);
    rep.geometric_residual =
        std::fabs(rep.cr_geometric * rep.cr_geometric +
                  (1.0 - rep.u_geometric) * (1.0 - rep.u_geometric) - 1.0);
    rep.holds = rep.analytic_residual <= 1e-6 && rep.geometric_residual <= 5e-3;
    return rep;
}

namespace {

// Touch tolerance for sharpness: each edge of [0,1]^2 reached.
void require_sharp(const StatisticsSet& s) {
    double umin = 1, umax = 0, vmin = 1, vmax = 0;
    for (const auto& v : s.geometry.vertices) {
        umin = std::min(umin, v[0]);
        umax = std::max(umax, v[0]);
        vmin = std::min(vmin, v[1]);
        vmax = std::max(vmax, v[1]);
    }
    if (umin > 1e-9 || vmin > 1e-9 || umax < 1.0 - 1e-9 || vmax < 1.0 - 1e-9)
        throw NotSharp("statistics set does not touch all four edges");
}

}  // namespace

RelationReport check_reverse_pur(const StatisticsSet& s) {
    if (!s.binary()) throw std::invalid_argument("reverse relation needs a binary pair");
    require_sharp(s);
    RelationReport r;
    r.relation = "reverse-pur";
    const double cr = rescaling_independence(s).value;
    r.lhs = 2.0 * cr;
    r.rhs = rac_uncertainty_set(s);
    r.slack = r.lhs - r.rhs;
    r.holds = r.slack >= -1e-7;
    r.witnesses["cr"] = cr;
    return r;
}

double icp_lhs(double r1, double r2, double s1, double s2) {
    for (double v : {r1, r2, s1, s2})
        if (v < -1e-12 || v > 1.0 + 1e-12)
            throw std::invalid_argument("icp_lhs: arguments must lie in [0,1]");
    return binary_entropy(0.5 * (r1 + s1)) + binary_entropy(0.5 * (r2 + s2));
}

IcpThreshold icp_threshold() {
    IcpThreshold t;
    t.exact = 4.0 * binary_entropy_inverse(0.5);
    t.cr_minus_u_bound = 1.0 - t.exact;
    return t;
}

namespace {

bool set_contains(const StatisticsSet& s, double u, double v, double tol) {
    const std::array<double, 2> p{u, v};
    return contains_point(s.geometry, std::span<const double>(p.data(), 2), tol);
}

void require_symmetric(const StatisticsSet& s) {
    for (const auto& vert : s.geometry.vertices) {
        if (!set_contains(s, vert[1], vert[0], 1e-7) ||
            !set_contains(s, 1.0 - vert[0], 1.0 - vert[1], 1e-7))
            throw NotSymmetric("set is not closed under swap and complement");
    }
}

}  // namespace

RelationReport chsh_symmetric(const StatisticsSet& s) {
    if (!s.binary()) throw std::invalid_argument("chsh_symmetric needs a binary pair");
    require_symmetric(s);
    RelationReport r;
    r.relation = "chsh-symmetric";
    const double cr = rescaling_independence(s).value;
    const double u = rac_uncertainty_set(s);
    r.lhs = 2.0 + 2.0 * (cr - u);
    r.rhs = 2.0;  // classical bound, for reference; slack is the excess
    r.slack = r.lhs - r.rhs;
    r.holds = true;  // informational report, no inequality asserted
    r.witnesses["cr"] = cr;
    r.witnesses["u"] = u;
    return r;
}

double SteeringAssignment::no_signaling_residual() const {
    double worst = 0.0;
    for (int comp = 0; comp < 2; ++comp) {
        const double a = t1 * steered[0][comp] + (1.0 - t1) * steered[1][comp];
        const double b = t2 * steered[2][comp] + (1.0 - t2) * steered[3][comp];
        worst = std::max(worst, std::fabs(a - b));
    }
    return worst;
}

double chsh_inner_value(const StatisticsSet& s, double t1, double t2,
                        SteeringAssignment* witness) {
    // Four steered points as convex weights over the hull vertices. The
    // CHSH functional is 4 - 2 J with
    //   J = t1 (u1+v1) + (1-t1)(2-u2-v2) + t2 (u3+1-v3) + (1-t2)(1-u4+v4)
    // and no-signaling says the t-weighted averages of the two steered
    // pairs coincide. Minimize the linear part of J by LP.
    const auto& verts = s.geometry.vertices;
    const int nv = static_cast<int>(verts.size());
    const int nvars = 4 * nv;
    auto idx = [&](int point, int vertex) { return point * nv + vertex; };

    LinearProgram lp;
    lp.objective.assign(nvars, 0.0);
    for (int k = 0; k < nv; ++k) {
        const double u = verts[k][0], v = verts[k][1];
        lp.objective[idx(0, k)] = -t1 * (u + v);
        lp.objective[idx(1, k)] = (1.0 - t1) * (u + v);
        lp.objective[idx(2, k)] = -t2 * (u - v);
        lp.objective[idx(3, k)] = (1.0 - t2) * (u - v);
    }
    for (int p = 0; p < 4; ++p) {
        std::vector<double> row(nvars, 0.0);
        for (int k = 0; k < nv; ++k) row[idx(p, k)] = 1.0;
        lp.add_constraint(std::move(row), Rel::Eq, 1.0);
    }
    for (int comp = 0; comp < 2; ++comp) {
        std::vector<double> row(nvars, 0.0);
        for (int k = 0; k < nv; ++k) {
            row[idx(0, k)] += t1 * verts[k][comp];
            row[idx(1, k)] += (1.0 - t1) * verts[k][comp];
            row[idx(2, k)] -= t2 * verts[k][comp];
            row[idx(3, k)] -= (1.0 - t2) * verts[k][comp];
        }
        lp.add_constraint(std::move(row), Rel::Eq, 0.0);
    }
    const LpResult res = solve_lp(lp);
    if (!res.optimal()) throw std::logic_error("chsh inner LP must be feasible");
    const double linear_min = -res.value;
    const double value = 4.0 - 2.0 * (linear_min + 2.0 * (1.0 - t1) + 1.0);
    if (witness) {
        witness->t1 = t1;
        witness->t2 = t2;
        for (int p = 0; p < 4; ++p) {
            double u = 0.0, v = 0.0;
            for (int k = 0; k < nv; ++k) {
                u += res.x[idx(p, k)] * verts[k][0];
                v += res.x[idx(p, k)] * verts[k][1];
            }
            witness->steered[p] = {u, v};
        }
    }
    return value;
}

ChshResult chsh_optimize(const StatisticsSet& s, int grid_resolution, ExecPolicy policy) {
    if (!s.binary()) throw std::invalid_argument("chsh_optimize needs a binary pair");
    if (grid_resolution < 2) throw std::invalid_argument("grid resolution too small");

    struct Cell {
        double value;
        double t1, t2;
    };
    auto scan = [&](double lo1, double hi1, double lo2, double hi2, int n) {
        const auto cells = sweep_map<Cell>(
            static_cast<std::size_t>(n) * n, policy, [&](std::size_t li) {
                const int i = static_cast<int>(li) / n;
                const int j = static_cast<int>(li) % n;
                const double t1 = lo1 + (hi1 - lo1) * i / (n - 1);
                const double t2 = lo2 + (hi2 - lo2) * j / (n - 1);
                return Cell{chsh_inner_value(s, t1, t2), t1, t2};
            });
        // serial reduction, lexicographically smallest optimal cell
        Cell best = cells[0];
        for (const auto& c : cells)
            if (c.value > best.value + 1e-12) best = c;
        return best;
    };

    Cell incumbent = scan(0.0, 1.0, 0.0, 1.0, grid_resolution);
    const double h = 1.0 / (grid_resolution - 1);
    const Cell refined = scan(std::max(0.0, incumbent.t1 - h), std::min(1.0, incumbent.t1 + h),
                              std::max(0.0, incumbent.t2 - h), std::min(1.0, incumbent.t2 + h),
                              21);
    if (refined.value > incumbent.value + 1e-12) incumbent = refined;

    ChshResult out;
    out.value = chsh_inner_value(s, incumbent.t1, incumbent.t2, &out.assignment);
    return out;
}

}  // namespace opuc
