#include "opuc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "opuc/assignment.hpp"
#include "opuc/lp.hpp"

namespace opuc {

bool is_distribution(const Dist& d, double tol) {
    double sum = 0.0;
    for (double v : d) {
        if (v < -1e-12) return false;
        sum += v;
    }
    return std::fabs(sum - 1.0) <= tol;
}

Dist StochasticMap::apply(const Dist& q) const {
    if (static_cast<int>(q.size()) != in_count())
        throw std::invalid_argument("stochastic map: input size mismatch");
    Dist out(out_count(), 0.0);
    for (int i = 0; i < out_count(); ++i)
        for (int j = 0; j < in_count(); ++j) out[i] += m[i][j] * q[j];
    return out;
}

StochasticMap StochasticMap::after(const StochasticMap& first) const {
    if (in_count() != first.out_count())
        throw std::invalid_argument("stochastic map: composition size mismatch");
    StochasticMap out;
    out.m.assign(out_count(), std::vector<double>(first.in_count(), 0.0));
    for (int i = 0; i < out_count(); ++i)
        for (int k = 0; k < in_count(); ++k)
            for (int j = 0; j < first.in_count(); ++j)
                out.m[i][j] += m[i][k] * first.m[k][j];
    return out;
}

bool StochasticMap::valid(double tol) const {
    for (int j = 0; j < in_count(); ++j) {
        double col = 0.0;
        for (int i = 0; i < out_count(); ++i) {
            if (m[i][j] < -1e-12) return false;
            col += m[i][j];
        }
        if (std::fabs(col - 1.0) > tol) return false;
    }
    return true;
}

StochasticMap StochasticMap::identity(int n) {
    StochasticMap s;
    s.m.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) s.m[i][i] = 1.0;
    return s;
}

StochasticMap StochasticMap::deterministic(const std::vector<int>& image, int out_count) {
    StochasticMap s;
    s.m.assign(out_count, std::vector<double>(image.size(), 0.0));
    for (std::size_t j = 0; j < image.size(); ++j) {
        if (image[j] < 0 || image[j] >= out_count)
            throw std::invalid_argument("deterministic map: image out of range");
        s.m[image[j]][j] = 1.0;
    }
    return s;
}

StochasticMap StochasticMap::uniform_noise(int n, double lambda) {
    StochasticMap s;
    s.m.assign(n, std::vector<double>(n, lambda / n));
    for (int i = 0; i < n; ++i) s.m[i][i] += 1.0 - lambda;
    return s;
}

int Theory::observable_index(const std::string& name) const {
    for (int i = 0; i < num_observables(); ++i)
        if (observables[i].name == name) return i;
    return -1;
}

int Theory::require_observable(const std::string& name) const {
    const int i = observable_index(name);
    if (i < 0) throw std::invalid_argument("unknown observable: " + name);
    return i;
}

int Theory::add_observable(const std::string& name, int outcomes, ObservableFlags flags) {
    observables.push_back({name, outcomes, flags});
    stats.emplace_back(num_preparations(), Dist(outcomes, 0.0));
    return num_observables() - 1;
}

int Theory::add_preparation(const std::string& name, std::vector<Dist> per_observable) {
    if (static_cast<int>(per_observable.size()) != num_observables())
        throw std::invalid_argument("preparation must list one distribution per observable");
    preparations.push_back(name);
    for (int o = 0; o < num_observables(); ++o)
        stats[o].push_back(std::move(per_observable[o]));
    return num_preparations() - 1;
}

void Theory::validate() const {
    for (int o = 0; o < num_observables(); ++o) {
        if (observables[o].outcomes < 1)
            throw std::invalid_argument("observable " + observables[o].name +
                                        " has no outcomes");
        if (static_cast<int>(stats[o].size()) != num_preparations())
            throw std::invalid_argument("statistics table shape mismatch");
        for (int p = 0; p < num_preparations(); ++p) {
            if (static_cast<int>(stats[o][p].size()) != observables[o].outcomes)
                throw std::invalid_argument("distribution length mismatch for " +
                                            observables[o].name + " on " + preparations[p]);
            if (!is_distribution(stats[o][p]))
                throw std::invalid_argument("statistics of " + observables[o].name + " on " +
                                            preparations[p] + " is not a distribution");
        }
    }
    for (const auto& [name, decs] : decompositions) {
        if (observable_index(name) < 0)
            throw std::invalid_argument("decomposition for unknown observable " + name);
        for (const auto& dec : decs) {
            double w = 0.0;
            for (const auto& [alpha, member] : dec.terms) {
                if (observable_index(member) < 0)
                    throw std::invalid_argument("decomposition member unknown: " + member);
                w += alpha;
            }
            if (std::fabs(w - 1.0) > 1e-9)
                throw std::invalid_argument("decomposition weights of " + name +
                                            " do not sum to 1");
        }
    }
}

int mix_preparations(Theory& t, int p1, int p2, double alpha, const std::string& name) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("mix_preparations: alpha outside [0,1]");
    std::vector<Dist> per_obs;
    per_obs.reserve(t.num_observables());
    for (int o = 0; o < t.num_observables(); ++o) {
        Dist d(t.observables[o].outcomes, 0.0);
        for (int k = 0; k < t.observables[o].outcomes; ++k)
            d[k] = alpha * t.stats[o][p1][k] + (1.0 - alpha) * t.stats[o][p2][k];
        per_obs.push_back(std::move(d));
    }
    return t.add_preparation(name, std::move(per_obs));
}

int mix_observables(Theory& t, int x1, int x2, double alpha, const std::string& name) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("mix_observables: alpha outside [0,1]");
    if (t.observables[x1].outcomes != t.observables[x2].outcomes)
        throw std::invalid_argument("mix_observables: outcome counts differ");
    const int n = t.observables[x1].outcomes;
    const int o = t.add_observable(name, n);
    for (int p = 0; p < t.num_preparations(); ++p)
        for (int k = 0; k < n; ++k)
            t.stats[o][p][k] =
                alpha * t.stats[x1][p][k] + (1.0 - alpha) * t.stats[x2][p][k];
    return o;
}

namespace {

// Restricted growth strings enumerate set partitions; block ids appear in
// first-occurrence order, which is the canonical labeling we keep.
void enumerate_partitions_rec(int i, int n, int max_used, std::vector<int>& rgs,
                              const std::function<void(const std::vector<int>&, int)>& emit) {
    if (i == n) {
        emit(rgs, max_used + 1);
        return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
        rgs[i] = v;
        enumerate_partitions_rec(i + 1, n, std::max(max_used, v), rgs, emit);
    }
}

void enumerate_partitions(int n, const std::function<void(const std::vector<int>&, int)>& emit) {
    std::vector<int> rgs(n, 0);
    enumerate_partitions_rec(1, n, 0, rgs, emit);  // rgs[0] = 0 always
}

}  // namespace

std::vector<StochasticMap> enumerate_coarse_grainings(int n, CoarseGrainMode mode) {
    if (n < 2) throw std::invalid_argument("coarse grainings need at least 2 outcomes");
    std::vector<StochasticMap> out;
    switch (mode) {
        case CoarseGrainMode::SingleOutcome:
            for (int k = 0; k < n; ++k) {
                std::vector<int> image(n, 1);
                image[k] = 0;
                out.push_back(StochasticMap::deterministic(image, 2));
            }
            break;
        case CoarseGrainMode::AllNontrivial:
            enumerate_partitions(n, [&](const std::vector<int>& rgs, int blocks) {
                if (blocks >= 2 && blocks < n)
                    out.push_back(StochasticMap::deterministic(rgs, blocks));
            });
            break;
        case CoarseGrainMode::Binary:
            enumerate_partitions(n, [&](const std::vector<int>& rgs, int blocks) {
                if (blocks == 2) out.push_back(StochasticMap::deterministic(rgs, 2));
            });
            break;
    }
    return out;
}

namespace {

// Stochastic map turning the mother's statistics into the target statistics
// on every generator, or nullopt. `target[p]` is the wanted distribution on
// preparation p.
std::optional<StochasticMap> find_map(const Theory& t, int mother,
                                      const std::vector<Dist>& target) {
    const int nin = t.observables[mother].outcomes;
    const int nout = static_cast<int>(target.empty() ? 0 : target[0].size());
    const int np = t.num_preparations();
    const int nvars = nin * nout;
    LinearProgram lp;
    lp.objective.assign(nvars, 0.0);
    auto idx = [&](int i, int j) { return i * nin + j; };
    for (int p = 0; p < np; ++p) {
        for (int i = 0; i < nout; ++i) {
            std::vector<double> row(nvars, 0.0);
            for (int j = 0; j < nin; ++j) row[idx(i, j)] = t.stats[mother][p][j];
            lp.add_constraint(std::move(row), Rel::Eq, target[p][i]);
        }
    }
    for (int j = 0; j < nin; ++j) {
        std::vector<double> row(nvars, 0.0);
        for (int i = 0; i < nout; ++i) row[idx(i, j)] = 1.0;
        lp.add_constraint(std::move(row), Rel::Eq, 1.0);
    }
    const LpResult res = solve_lp(lp);
    if (!res.optimal()) return std::nullopt;
    StochasticMap map;
    map.m.assign(nout, std::vector<double>(nin, 0.0));
    for (int i = 0; i < nout; ++i)
        for (int j = 0; j < nin; ++j) map.m[i][j] = std::max(0.0, res.x[idx(i, j)]);
    return map;
}

std::vector<Dist> observable_stats(const Theory& t, int o) { return t.stats[o]; }

std::vector<Dist> noisy_stats(const Theory& t, int o, double lambda) {
    const int n = t.observables[o].outcomes;
    std::vector<Dist> target = t.stats[o];
    for (auto& d : target)
        for (auto& v : d) v = (1.0 - lambda) * v + lambda / n;
    return target;
}

std::vector<Dist> mapped_stats(const Theory& t, int o, const StochasticMap& map) {
    std::vector<Dist> target;
    target.reserve(t.num_preparations());
    for (int p = 0; p < t.num_preparations(); ++p) target.push_back(map.apply(t.stats[o][p]));
    return target;
}

std::optional<JointWitness> mother_for_targets(const Theory& t,
                                               const std::vector<Dist>& tx,
                                               const std::vector<Dist>& ty) {
    for (int z = 0; z < t.num_observables(); ++z) {
        auto mx = find_map(t, z, tx);
        if (!mx) continue;
        auto my = find_map(t, z, ty);
        if (!my) continue;
        return JointWitness{z, std::move(*mx), std::move(*my)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<StochasticMap> simulates(const Theory& t, int x, int y) {
    return find_map(t, x, observable_stats(t, y));
}

std::optional<JointWitness> jointly_measurable(const Theory& t, int x, int y) {
    return mother_for_targets(t, observable_stats(t, x), observable_stats(t, y));
}

double noise_robustness(const Theory& t, int x, int y, int iterations) {
    auto feasible = [&](double lambda) {
        return mother_for_targets(t, noisy_stats(t, x, lambda), noisy_stats(t, y, lambda))
            .has_value();
    };
    if (feasible(0.0)) return 0.0;
    if (!feasible(1.0 - 1e-6)) {
        // Fully noisy observables are constant, so any listed observable
        // simulates them; confirm and report the extreme.
        if (!feasible(1.0)) throw std::logic_error("noise_robustness: infeasible at lambda=1");
        return 1.0;
    }
    double lo = 0.0, hi = 1.0 - 1e-6;
    for (int it = 0; it < iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<double> StatisticsSet::embed(const Dist& dx, const Dist& dy) const {
    std::vector<double> p;
    if (binary()) {
        p = {dx[1], dy[1]};
    } else {
        p.reserve(nx + ny - 2);
        for (int i = 0; i + 1 < nx; ++i) p.push_back(dx[i]);
        for (int i = 0; i + 1 < ny; ++i) p.push_back(dy[i]);
    }
    return p;
}

StatisticsSet make_statistics_set(int nx, int ny, std::vector<StatPoint> points) {
    StatisticsSet s;
    s.nx = nx;
    s.ny = ny;
    s.points = std::move(points);
    std::vector<std::vector<double>> embedded;
    embedded.reserve(s.points.size());
    for (const auto& pt : s.points) embedded.push_back(s.embed(pt.qx, pt.qy));
    if (s.binary())
        s.geometry = make_polytope_2d(embedded);
    else
        s.geometry = make_polytope(nx + ny - 2, std::move(embedded));
    return s;
}

StatisticsSet statistics_set(const Theory& t, int x, int y) {
    std::vector<StatPoint> pts;
    pts.reserve(t.num_preparations());
    for (int p = 0; p < t.num_preparations(); ++p)
        pts.push_back({t.stats[x][p], t.stats[y][p]});
    return make_statistics_set(t.observables[x].outcomes, t.observables[y].outcomes,
                               std::move(pts));
}

StatisticsSet apply_maps(const StatisticsSet& s, const StochasticMap& mx,
                         const StochasticMap& my) {
    std::vector<StatPoint> pts;
    pts.reserve(s.points.size());
    for (const auto& pt : s.points) pts.push_back({mx.apply(pt.qx), my.apply(pt.qy)});
    return make_statistics_set(mx.out_count(), my.out_count(), std::move(pts));
}

bool corner_in_set(const StatisticsSet& s, int i, int j, double tol) {
    Dist ex(s.nx, 0.0), ey(s.ny, 0.0);
    ex[i] = 1.0;
    ey[j] = 1.0;
    const auto p = s.embed(ex, ey);
    return contains_point(s.geometry, p, tol);
}

bool has_uncertainty(const StatisticsSet& s) {
    for (int i = 0; i < s.nx; ++i)
        for (int j = 0; j < s.ny; ++j)
            if (corner_in_set(s, i, j)) return false;
    return true;
}

bool has_exclusion(const StatisticsSet& s) {
    if (s.nx != s.ny)
        throw std::invalid_argument("has_exclusion: outcome counts must match");
    const int d = s.nx;
    std::vector<std::vector<double>> w(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w[i][j] = corner_in_set(s, i, j) ? 1.0 : 0.0;
    return max_assignment(w).value < d - 0.5;
}

bool has_strong_uncertainty(const StatisticsSet& s) {
    const auto mapsx = enumerate_coarse_grainings(s.nx, CoarseGrainMode::Binary);
    const auto mapsy = enumerate_coarse_grainings(s.ny, CoarseGrainMode::Binary);
    for (const auto& mx : mapsx)
        for (const auto& my : mapsy)
            if (!has_uncertainty(apply_maps(s, mx, my))) return false;
    return true;
}

namespace {

bool coarse_pair_jointly_measurable(const Theory& t, int x, int y,
                                    const StochasticMap& map) {
    return mother_for_targets(t, mapped_stats(t, x, map), mapped_stats(t, y, map))
        .has_value();
}

}  // namespace

bool is_fully_complementary(const Theory& t, int x, int y) {
    if (t.observables[x].outcomes != t.observables[y].outcomes)
        throw std::invalid_argument("full complementarity: outcome counts must match");
    if (jointly_measurable(t, x, y)) return false;
    const int n = t.observables[x].outcomes;
    if (n == 2) return true;  // no nontrivial coarse-grainings for two outcomes
    for (const auto& map : enumerate_coarse_grainings(n, CoarseGrainMode::AllNontrivial))
        if (coarse_pair_jointly_measurable(t, x, y, map)) return false;
    return true;
}

bool is_single_outcome_complementary(const Theory& t, int x, int y) {
    if (t.observables[x].outcomes != t.observables[y].outcomes)
        throw std::invalid_argument("single-outcome complementarity: outcome counts must match");
    const int n = t.observables[x].outcomes;
    if (n == 2) return !jointly_measurable(t, x, y).has_value();
    for (const auto& map : enumerate_coarse_grainings(n, CoarseGrainMode::SingleOutcome))
        if (coarse_pair_jointly_measurable(t, x, y, map)) return false;
    return true;
}

std::vector<StatPoint> scan_points(const StatisticsSet& s) {
    if (!s.binary()) return s.points;
    std::vector<StatPoint> pts;
    pts.reserve(s.geometry.vertices.size());
    for (const auto& v : s.geometry.vertices)
        pts.push_back({{1.0 - v[0], v[0]}, {1.0 - v[1], v[1]}});
    return pts;
}

}  // namespace opuc
