#pragma once
// Quantum instantiation of the operational framework: Born statistics,
// projective measurements, joint measurability by commutation, the qubit
// statistics-set ellipse, overlap matrices and random-access-code success
// probabilities. Everything is desk scale (dim <= 16); the eigensolver is
// cyclic Jacobi on the real embedding of the Hermitian matrix.

#include <complex>
#include <vector>

#include "opuc/theory.hpp"

namespace opuc {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

struct CMat {
    int n = 0;
    std::vector<cplx> a;  // row-major

    CMat() = default;
    explicit CMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
    cplx& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static CMat identity(int n);
    static CMat outer(const CVec& v);  // |v><v|
    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat scaled(double s) const;
    CMat dagger() const;
    cplx trace() const;
    double frobenius() const;
    bool hermitian(double tol = 1e-10) const;
};

double commutator_norm(const CMat& p, const CMat& q);

// Eigenvalues ascending (and matching eigenvectors) of a Hermitian matrix,
// via cyclic Jacobi sweeps on the 2n x 2n real symmetric embedding.
struct EigenSystem {
    std::vector<double> values;   // ascending
    std::vector<CVec> vectors;    // unit norm, vectors[k] pairs with values[k]
};
EigenSystem hermitian_eigensystem(const CMat& h);
double top_eigenvalue(const CMat& h);

CVec normalized(const CVec& v);
cplx inner(const CVec& a, const CVec& b);  // <a|b>, conjugate-linear in a

struct ProjectiveMeasurement {
    std::vector<CMat> effects;  // orthogonal projectors summing to identity

    int dim() const { return effects.empty() ? 0 : effects[0].n; }
    int outcomes() const { return static_cast<int>(effects.size()); }
    static ProjectiveMeasurement from_basis(const std::vector<CVec>& basis);
    static ProjectiveMeasurement from_projectors(std::vector<CMat> projectors);
    void validate(double tol = 1e-10) const;
};

// probs[k] = Tr(Pi_k rho); rho must be PSD with unit trace (checked to 1e-9).
Dist born_stats(const ProjectiveMeasurement& meas, const CMat& rho);

// True iff every pair of effects commutes (Frobenius norm tolerance 1e-9).
bool projective_jointly_measurable(const ProjectiveMeasurement& a,
                                   const ProjectiveMeasurement& b,
                                   double tol = 1e-9);

// Merge outcomes by block id (deterministic coarse-graining of projectors).
ProjectiveMeasurement coarse_grain(const ProjectiveMeasurement& meas,
                                   const std::vector<int>& block_of_outcome,
                                   int blocks);

// |<a_i|b_j>| for two rank-one orthonormal bases (same dimension).
std::vector<std::vector<double>> overlap_matrix(const std::vector<CVec>& basisA,
                                                const std::vector<CVec>& basisB);

// Average random-access-code success probability for the two bases:
// 1/2 + (1/2 d^2) sum |<a_i|b_j>|.
double rac_optimal_ps(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB);

// --- qubit pair Z = sigma_z, X = n·sigma with n_y = 0 ---

struct QubitPair {
    double nz = 0.0;
    double nx() const;  // sqrt(1 - nz^2), rejects |nz| >= 1
};

// Statistics-set boundary in average coordinates (x, z) in [-1,1]^2:
// an ellipse with semiaxis a along the main diagonal and b along the
// anti-diagonal.
struct QubitEllipse {
    double a = 0.0, b = 0.0;

    // boundary point at parameter t: diagonal coords (a cos t, b sin t)
    std::array<double, 2> boundary_avg(double t) const;
    // inscribed polygon: `resolution` uniform parameters plus the four
    // axis-tangency parameters, so the polygon touches all four edges of
    // the square exactly. Area error of the polygon is O(1/resolution^2).
    std::vector<std::array<double, 2>> polygon_avg(int resolution) const;
    // same polygon as a binary StatisticsSet in probability coordinates
    StatisticsSet statistics_set(int resolution) const;
};

QubitEllipse qubit_statistics_ellipse(const QubitPair& q);

// --- predicates for projective pairs (commutation / subspace geometry) ---

bool quantum_has_uncertainty(const ProjectiveMeasurement& a,
                             const ProjectiveMeasurement& b);
// Rank-one pairs only: no permutation of outcomes aligns d common
// eigenstates.
bool quantum_has_exclusion(const std::vector<CVec>& basisA,
                           const std::vector<CVec>& basisB);
bool quantum_single_outcome_complementary(const std::vector<CVec>& basisA,
                                          const std::vector<CVec>& basisB);
bool quantum_fully_complementary(const std::vector<CVec>& basisA,
                                 const std::vector<CVec>& basisB);
bool quantum_strong_uncertainty(const ProjectiveMeasurement& a,
                                const ProjectiveMeasurement& b);

// Unit vector witnessing a corner of the statistics set: a common
// eigenstate of effects (i, j), when one exists.
std::optional<CVec> common_deterministic_state(const CMat& effect_a,
                                               const CMat& effect_b,
                                               double tol = 1e-9);

}  // namespace opuc
