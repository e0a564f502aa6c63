#pragma once
// Operational theories given by a finite catalog of observables and a finite
// generating set of preparations. All feasibility questions (simulation,
// joint measurability, membership) reduce to LPs over the generators, which
// suffices because statistics are convex-linear in the preparation.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opuc/polytope.hpp"

namespace opuc {

using Dist = std::vector<double>;  // outcome distribution

bool is_distribution(const Dist& d, double tol = 1e-9);

// Left-stochastic matrix: m[i][j] = P(output i | input j), columns sum to 1.
struct StochasticMap {
    std::vector<std::vector<double>> m;

    int out_count() const { return static_cast<int>(m.size()); }
    int in_count() const { return m.empty() ? 0 : static_cast<int>(m[0].size()); }
    Dist apply(const Dist& q) const;
    StochasticMap after(const StochasticMap& first) const;  // this ∘ first
    bool valid(double tol = 1e-9) const;

    static StochasticMap identity(int n);
    // image[j] = output slot of input outcome j
    static StochasticMap deterministic(const std::vector<int>& image, int out_count);
    static StochasticMap uniform_noise(int n, double lambda);  // (1-λ)I + (λ/n)J
};

struct ObservableFlags {
    bool clean = false;
    bool sharp = false;
    bool extremal = false;
};

struct Observable {
    std::string name;
    int outcomes = 0;
    ObservableFlags flags;
};

// One decomposition of an observable into listed extremal observables.
struct Decomposition {
    std::vector<std::pair<double, std::string>> terms;  // (weight, observable)
};

struct Theory {
    std::vector<Observable> observables;
    std::vector<std::string> preparations;
    // stats[o][p] = outcome distribution of observable o on preparation p
    std::vector<std::vector<Dist>> stats;
    std::map<std::string, std::vector<Decomposition>> decompositions;

    int num_observables() const { return static_cast<int>(observables.size()); }
    int num_preparations() const { return static_cast<int>(preparations.size()); }
    int observable_index(const std::string& name) const;  // -1 if absent
    int require_observable(const std::string& name) const;
    const Dist& q(int obs, int prep) const { return stats[obs][prep]; }

    int add_observable(const std::string& name, int outcomes,
                       ObservableFlags flags = {});
    int add_preparation(const std::string& name, std::vector<Dist> per_observable);
    void validate() const;  // throws std::invalid_argument on malformed data
};

// Convex mixture of two preparations (appended, index returned).
int mix_preparations(Theory& t, int p1, int p2, double alpha,
                     const std::string& name);
// Convex mixture of two observables with equal outcome counts.
int mix_observables(Theory& t, int x1, int x2, double alpha,
                    const std::string& name);

enum class CoarseGrainMode { AllNontrivial, SingleOutcome, Binary };

// Deterministic coarse-graining maps on n outcomes.
//   AllNontrivial: one canonical map per partition into m blocks, 2 <= m < n
//   SingleOutcome: the n maps keeping outcome k and merging the rest
//   Binary:        all unordered bipartitions (2^{n-1} - 1 maps)
// Permutations count as trivial and are not enumerated.
std::vector<StochasticMap> enumerate_coarse_grainings(int n, CoarseGrainMode mode);

// X simulates Y: one preparation-independent stochastic map matching the
// statistics on every generator (LP feasibility).
std::optional<StochasticMap> simulates(const Theory& t, int x, int y);

struct JointWitness {
    int mother = -1;
    StochasticMap to_x, to_y;
};

// Mother-observable search over the theory's listed observables.
std::optional<JointWitness> jointly_measurable(const Theory& t, int x, int y);

// Minimal white-noise level at which the pair becomes jointly measurable,
// bisected to ~1e-12 over 40 iterations. Returns 1 when only the fully
// noisy pair is jointly measurable.
double noise_robustness(const Theory& t, int x, int y, int iterations = 40);

struct StatPoint {
    Dist qx, qy;
};

struct StatisticsSet {
    int nx = 0, ny = 0;
    std::vector<StatPoint> points;
    // Binary pairs embed as (q_X(2|P), q_Y(2|P)) in [0,1]^2 with facets;
    // larger outcome counts embed as the first n-1 coordinates of each
    // distribution with membership by LP.
    Polytope geometry;

    bool binary() const { return nx == 2 && ny == 2; }
    std::vector<double> embed(const Dist& qx, const Dist& qy) const;
};

StatisticsSet statistics_set(const Theory& t, int x, int y);
// Direct construction from raw statistics pairs.
StatisticsSet make_statistics_set(int nx, int ny, std::vector<StatPoint> points);
// Image of a statistics set under per-observable post-processing.
StatisticsSet apply_maps(const StatisticsSet& s, const StochasticMap& mx,
                         const StochasticMap& my);

// Corner (e_i, e_j) membership; the building block of the predicates below.
bool corner_in_set(const StatisticsSet& s, int i, int j, double tol = 1e-9);

bool has_uncertainty(const StatisticsSet& s);
bool has_exclusion(const StatisticsSet& s);
bool has_strong_uncertainty(const StatisticsSet& s);

// Coarse-graining-robust complementarity. One partition (or one kept
// outcome index) is applied to both observables at a time.
bool is_fully_complementary(const Theory& t, int x, int y);
bool is_single_outcome_complementary(const Theory& t, int x, int y);

// StatPoints at which vertex scans of set-level measures are evaluated:
// hull vertices for binary pairs, the generating points otherwise.
std::vector<StatPoint> scan_points(const StatisticsSet& s);

}  // namespace opuc
