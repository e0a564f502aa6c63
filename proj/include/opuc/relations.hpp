#pragma once
// Quantitative uncertainty relations: the exclusion bound for
// random-access codes, the qubit rescaling equality, the reverse relation
// for sharp binary pairs, the information-content reduction with its
// numeric threshold, and CHSH optimization under no-signaling steering
// (the route to the Tsirelson bound).

#include <array>
#include <stdexcept>
#include <string>

#include "opuc/measures.hpp"
#include "opuc/sweep.hpp"

namespace opuc {

struct RelationReport {
    std::string relation;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs
    bool holds = false;  // slack >= -1e-7 for inequalities
    std::map<std::string, double> witnesses;
};

struct NotSharp : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSymmetric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// E(S) >= Ind(S)^2 / (4d) for rank-one projective pairs.
RelationReport check_exclusion_pur(const std::vector<CVec>& basisA,
                                   const std::vector<CVec>& basisB);

// C_r^2 + (1-U)^2 = 1 on the qubit family; both the closed forms and the
// polygon pipeline are evaluated.
struct RescalingPurReport {
    double nz = 0.0;
    double cr_analytic = 0.0, u_analytic = 0.0;
    double cr_geometric = 0.0, u_geometric = 0.0;
    double analytic_residual = 0.0;   // |C^2 + (1-U)^2 - 1|
    double geometric_residual = 0.0;
    bool holds = false;  // residuals within 1e-6 / 5e-3
};
RescalingPurReport check_rescaling_pur(double nz, int resolution = 256);

// 2 C_r >= U for sharp binary sets (every edge of the square touched to
// 1e-9); throws NotSharp otherwise.
RelationReport check_reverse_pur(const StatisticsSet& s);

// h((r1+s1)/2) + h((r2+s2)/2), the symmetric-set information bound.
double icp_lhs(double r1, double r2, double s1, double s2);

struct IcpThreshold {
    double exact = 0.0;     // 4 h^{-1}(1/2)
    double rounded = 0.44;  // two-decimal value used in the literature
    double cr_minus_u_bound = 0.0;  // 1 - exact
};
IcpThreshold icp_threshold();

// I = 2 + 2 (C_r - U) for sets symmetric under the diagonal swap and the
// outcome complement; throws NotSymmetric otherwise.
RelationReport chsh_symmetric(const StatisticsSet& s);

// Steered preparations for the four (setting, outcome) branches, written
// in the r/r'/s/s' parameter dictionary. Coordinates are probabilities of
// the second outcome.
struct SteeringAssignment {
    double t1 = 0.5, t2 = 0.5;
    std::array<std::array<double, 2>, 4> steered{};  // A1+, A1-, A2+, A2-
    double r1() const { return steered[0][0]; }
    double r2() const { return steered[0][1]; }
    double rp1() const { return 1.0 - steered[1][0]; }
    double rp2() const { return 1.0 - steered[1][1]; }
    double s1() const { return steered[2][0]; }
    double s2() const { return 1.0 - steered[2][1]; }
    double sp1() const { return 1.0 - steered[3][0]; }
    double sp2() const { return steered[3][1]; }
    double no_signaling_residual() const;
};

struct ChshResult {
    double value = 0.0;
    SteeringAssignment assignment;
};

// Maximize the CHSH functional over steered points inside the set under
// the no-signaling constraints: a (t1, t2) grid with an inner LP per cell
// and one refinement pass around the incumbent. Deterministic: the
// lexicographically smallest optimal cell wins regardless of policy.
ChshResult chsh_optimize(const StatisticsSet& s, int grid_resolution = 101,
                         ExecPolicy policy = default_policy());

// Inner LP only: best CHSH value at fixed steering weights.
double chsh_inner_value(const StatisticsSet& s, double t1, double t2,
                        SteeringAssignment* witness = nullptr);

}  // namespace opuc
