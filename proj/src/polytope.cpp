#include "opuc/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opuc/lp.hpp"

namespace opuc {
namespace {

double cross(const std::vector<double>& o, const std::vector<double>& a,
             const std::vector<double>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<std::vector<double>> hull_2d(std::vector<std::vector<double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) {
                              return std::fabs(a[0] - b[0]) < 1e-12 &&
                                     std::fabs(a[1] - b[1]) < 1e-12;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<std::vector<double>> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double hull_area(const std::vector<std::vector<double>>& h) {
    double a = 0.0;
    const std::size_t n = h.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = h[i];
        const auto& q = h[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::fabs(a);
}

}  // namespace

Polytope make_polytope_2d(const std::vector<std::vector<double>>& points) {
    for (const auto& p : points)
        if (p.size() != 2) throw std::invalid_argument("polytope: point is not 2D");
    Polytope body;
    body.dim = 2;
    body.vertices = hull_2d(points);
    if (body.vertices.size() >= 3 && hull_area(body.vertices) > 1e-12) {
        const std::size_t n = body.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = body.vertices[i];
            const auto& q = body.vertices[(i + 1) % n];
            // CCW order, so (dy, -dx) points outward
            Facet f;
            f.normal = {q[1] - p[1], -(q[0] - p[0])};
            const double norm = std::hypot(f.normal[0], f.normal[1]);
            f.normal[0] /= norm;
            f.normal[1] /= norm;
            f.offset = f.normal[0] * p[0] + f.normal[1] * p[1];
            body.facets.push_back(f);
        }
    }
    return body;
}

Polytope make_polytope(int dim, std::vector<std::vector<double>> points) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("polytope: point dimension mismatch");
    Polytope body;
    body.dim = dim;
    body.vertices = std::move(points);
    return body;
}

bool contains_point(const Polytope& body, std::span<const double> p, double tol) {
    if (static_cast<int>(p.size()) != body.dim)
        throw std::invalid_argument("contains_point: dimension mismatch");
    if (body.vertices.empty()) return false;
    // Fast path when a facet form exists.
    if (body.dim == 2 && !body.facets.empty()) {
        for (const auto& f : body.facets)
            if (f.normal[0] * p[0] + f.normal[1] * p[1] > f.offset + tol) return false;
        return true;
    }
    // weights >= 0, sum to 1, reproduce p
    const std::size_t n = body.vertices.size();
    LinearProgram lp;
    lp.objective.assign(n, 0.0);
    for (int d = 0; d < body.dim; ++d) {
        std::vector<double> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = body.vertices[i][d];
        lp.add_constraint(std::move(row), Rel::Eq, p[d]);
    }
    lp.add_constraint(std::vector<double>(n, 1.0), Rel::Eq, 1.0);
    // Feasibility within tol: relax equality rows by tol via two inequalities.
    LinearProgram relaxed;
    relaxed.objective.assign(n, 0.0);
    for (const auto& c : lp.constraints) {
        relaxed.add_constraint(c.coeffs, Rel::LessEq, c.rhs + tol);
        std::vector<double> neg(c.coeffs.size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -c.coeffs[j];
        relaxed.add_constraint(std::move(neg), Rel::LessEq, -(c.rhs - tol));
    }
    return solve_lp(relaxed).optimal();
}

double polygon_area(const Polytope& body) {
    if (body.dim != 2) throw std::invalid_argument("polygon_area: dimension must be 2");
    const auto h = hull_2d(body.vertices);
    if (h.size() < 3) return 0.0;
    return hull_area(h);
}

double support(const Polytope& body, std::span<const double> dir) {
    if (static_cast<int>(dir.size()) != body.dim)
        throw std::invalid_argument("support: dimension mismatch");
    double best = -kInf;
    for (const auto& v : body.vertices) {
        double s = 0.0;
        for (int d = 0; d < body.dim; ++d) s += dir[d] * v[d];
        best = std::max(best, s);
    }
    return best;
}

InscribedCopy max_inscribed_scaled_copy(const Polytope& container,
                                        const Polytope& tmpl) {
    if (container.dim != 2 || tmpl.dim != 2)
        throw std::invalid_argument("max_inscribed_scaled_copy: 2D bodies required");
    InscribedCopy out;
    if (container.degenerate_2d() || container.vertices.size() < 3) {
        // Lower-dimensional container: no positive rescaling fits.
        if (!container.vertices.empty()) {
            out.shift = {container.vertices[0][0], container.vertices[0][1]};
        }
        return out;
    }
    // Variables (r, x0, x1); for each facet (a, b): a·x + r·h_tmpl(a) <= b.
    LinearProgram lp;
    lp.objective = {1.0, 0.0, 0.0};
    lp.lower = {0.0, -kInf, -kInf};
    lp.upper = {kInf, kInf, kInf};
    for (const auto& f : container.facets) {
        const double h = support(tmpl, std::span<const double>(f.normal.data(), 2));
        lp.add_constraint({h, f.normal[0], f.normal[1]}, Rel::LessEq, f.offset);
    }
    const LpResult res = solve_lp(lp);
    if (!res.optimal()) return out;  // cannot happen for a bounded container
    out.scale = std::max(0.0, res.value);
    out.shift = {res.x[1], res.x[2]};
    return out;
}

Polytope unit_square_polytope() {
    return make_polytope_2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Polytope centered_square_polytope() {
    return make_polytope_2d({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
}

}  // namespace opuc
