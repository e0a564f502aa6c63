#pragma once
// Quantitative measures on statistics sets and observable pairs: the
// random-access-code family (uncertainty, independence, exclusion), the
// rescaling and volume measures, variation of information with its
// preimage construction on the two worked fixtures, and complementarity
// built from an independence measure by simulator minimization plus a
// convex roof over decompositions.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "opuc/entropy.hpp"
#include "opuc/quantum.hpp"
#include "opuc/theory.hpp"

namespace opuc {

struct MeasureReport {
    std::string name;
    double value = 0.0;
    std::map<std::string, double> scalars;        // named witness numbers
    std::map<std::string, std::string> notes;     // named witness strings
    std::optional<std::vector<int>> permutation;  // assignment witness
};

// --- random-access-code family ---

// Point measure: 1 - (max_a q_X(a) + max_b q_Y(b)) / 2, in [0, 1 - 1/d].
double rac_uncertainty_point(const StatPoint& p);

// Set measure, attained on hull vertices by concavity. Binary pairs are
// reported on the average-coordinate scale, U = 1 - (|x|+|z|)_max / 2,
// which is twice the raw point value; this is the normalization under
// which the qubit closed forms and the CHSH reduction hold. Larger
// outcome counts report the raw point minimum.
double rac_uncertainty_set(const StatisticsSet& s);

// Quantum pair: Ind = ((1/d) sum |U_ij| - 1) / (d - 1), in [0, 1].
double rac_independence(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB);
MeasureReport rac_independence_report(const std::vector<CVec>& basisA,
                                      const std::vector<CVec>& basisB);

// Quantum pair: E = (1 - max_pi (1/d) sum_i |U_{i pi(i)}|) / 2.
double rac_exclusion(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB);
MeasureReport rac_exclusion_report(const std::vector<CVec>& basisA,
                                   const std::vector<CVec>& basisB);

// Set-level exclusion by vertex scan: E = 1 - max_pi sum_k max_P
// (q_X(k|P) + q_Y(pi(k)|P)) / (2d). Agrees with the overlap form on
// rank-one quantum pairs.
double rac_exclusion_set(const StatisticsSet& s);

// GPT-path success probabilities. Bob assigns one of the two observables
// to each question and post-processes with a deterministic relabeling;
// Alice encodes on the best generator. d^d relabeling pairs are
// enumerated, which is exact by convexity.
double rac_success_pair(const Theory& t, int x, int y);    // both observables
double rac_success_single(const Theory& t, int x);         // one observable
double rac_independence_gpt(const Theory& t, int x, int y);

// --- geometric measures on binary statistics sets ---

struct RescalingReport {
    double value = 0.0;                 // scale of the largest inscribed copy
    std::array<double, 2> shift{0, 0};  // in probability coordinates
};

// Largest translated scaled copy of the full square inside the set,
// normalized so the full square scores 1. Rejects non-binary sets.
RescalingReport rescaling_independence(const StatisticsSet& s);

// Hull area in side-2 average coordinates (full square scores 4).
double volume_independence(const StatisticsSet& s);

// --- simulation-gap independence ---

// Smallest uniform statistics deviation over stochastic maps in either
// direction (an LP); zero iff one observable simulates the other. This is
// the qualitative notion behind the mixed-observable counterexample
// fixture, where the RAC measure is blind.
double simulation_gap_independence(const Theory& t, int x, int y);

// --- variation-of-information preimage measure on the worked fixtures ---

struct PreimageReport {
    double classical_bit = 0.0;  // max VI over the forced preimage
    double diamond_bits = 0.0;   // raw VI at the forced uniform product
    double diamond_normalized = 0.0;
    std::vector<std::string> admissible_channels;  // per-side candidates kept
};

PreimageReport preimage_measure_examples();

// --- complementarity from independence ---

using IndependenceFn = std::function<double(const Theory&, int, int)>;

struct ComplementarityReport {
    double value = 0.0;
    bool trivial_simulators_only = false;  // warning flag
    std::string decomposition;             // witness description
    std::string simulators;
};

// Minimize ind over listed simulator pairs, then convex-roof over the
// decompositions recorded in the theory (the trivial decomposition is
// always included).
ComplementarityReport complementarity_from_independence(const Theory& t, int x, int y,
                                                        const IndependenceFn& ind);

}  // namespace opuc
