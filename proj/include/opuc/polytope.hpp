#pragma once
// Convex polytopes in vertex representation. Facet (half-space) form is
// maintained for dimension 2 only, which is all the binary-observable
// geometry needs; higher dimensions keep vertices and answer membership
// questions by LP.

#include <array>
#include <span>
#include <vector>

namespace opuc {

struct Facet {
    std::array<double, 2> normal;  // outward
    double offset;                 // normal·p <= offset on the body
};

struct Polytope {
    int dim = 0;
    std::vector<std::vector<double>> vertices;
    std::vector<Facet> facets;  // populated iff dim == 2 and area > 0

    bool degenerate_2d() const { return dim == 2 && facets.empty(); }
};

// Hull of 2D points (monotone chain, CCW order) with outward facet normals.
// Collinear input degenerates to the extreme segment with no facets.
Polytope make_polytope_2d(const std::vector<std::vector<double>>& points);

// General-dimension polytope; keeps the points as given (no hull reduction).
Polytope make_polytope(int dim, std::vector<std::vector<double>> points);

// Convex-combination membership decided by LP feasibility.
bool contains_point(const Polytope& body, std::span<const double> p,
                    double tol = 1e-9);

// Shoelace area of the 2D hull. Throws std::invalid_argument for dim != 2.
double polygon_area(const Polytope& body);

// Support function h(d) = max over vertices of d·v.
double support(const Polytope& body, std::span<const double> dir);

struct InscribedCopy {
    double scale = 0.0;
    std::array<double, 2> shift{0.0, 0.0};
};

// Largest r (with shift x) such that r·tmpl + x fits inside container.
// One LP over the container facets using the template support function.
// A container of zero area is degenerate and scores r = 0.
InscribedCopy max_inscribed_scaled_copy(const Polytope& container,
                                        const Polytope& tmpl);

Polytope unit_square_polytope();        // [0,1]^2
Polytope centered_square_polytope();    // [-1,1]^2

}  // namespace opuc
