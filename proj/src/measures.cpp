#include "opuc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opuc/assignment.hpp"
#include "opuc/lp.hpp"

namespace opuc {
namespace {

double max_entry(const Dist& d) { return *std::max_element(d.begin(), d.end()); }

}  // namespace

double rac_uncertainty_point(const StatPoint& p) {
    return 1.0 - 0.5 * (max_entry(p.qx) + max_entry(p.qy));
}

double rac_uncertainty_set(const StatisticsSet& s) {
    if (s.points.empty()) throw std::invalid_argument("rac_uncertainty_set: empty set");
    double best = kInf;
    for (const auto& pt : scan_points(s)) best = std::min(best, rac_uncertainty_point(pt));
    return s.binary() ? 2.0 * best : best;
}

double rac_independence(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB) {
    const auto u = overlap_matrix(basisA, basisB);
    const int d = static_cast<int>(u.size());
    double sum = 0.0;
    for (const auto& row : u)
        for (double v : row) sum += v;
    return (sum / d - 1.0) / (d - 1);
}

MeasureReport rac_independence_report(const std::vector<CVec>& basisA,
                                      const std::vector<CVec>& basisB) {
    MeasureReport r;
    r.name = "rac-ind";
    r.value = rac_independence(basisA, basisB);
    r.scalars["p_s"] = rac_optimal_ps(basisA, basisB);
    r.scalars["p_s_classical"] = 0.5 + 0.5 / static_cast<double>(basisA.size());
    return r;
}

double rac_exclusion(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB) {
    const auto u = overlap_matrix(basisA, basisB);
    const int d = static_cast<int>(u.size());
    return 0.5 * (1.0 - max_assignment(u).value / d);
}

MeasureReport rac_exclusion_report(const std::vector<CVec>& basisA,
                                   const std::vector<CVec>& basisB) {
    const auto u = overlap_matrix(basisA, basisB);
    const int d = static_cast<int>(u.size());
    const Assignment best = max_assignment(u);
    MeasureReport r;
    r.name = "rac-exc";
    r.value = 0.5 * (1.0 - best.value / d);
    r.permutation = best.perm;
    return r;
}

double rac_exclusion_set(const StatisticsSet& s) {
    if (s.nx != s.ny)
        throw std::invalid_argument("rac_exclusion_set: outcome counts must match");
    const int d = s.nx;
    const auto pts = scan_points(s);
    std::vector<std::vector<double>> w(d, std::vector<double>(d, 0.0));
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            double best = 0.0;
            for (const auto& pt : pts) best = std::max(best, pt.qx[k] + pt.qy[l]);
            w[k][l] = best;
        }
    return 1.0 - max_assignment(w).value / (2.0 * d);
}

namespace {

// All deterministic relabelings of d outcomes (d^d of them).
std::vector<std::vector<int>> all_relabelings(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    for (;;) {
        out.push_back(cur);
        int k = d - 1;
        while (k >= 0 && ++cur[k] == d) cur[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

Dist relabel(const Dist& q, const std::vector<int>& image, int d) {
    Dist out(d, 0.0);
    for (int j = 0; j < static_cast<int>(q.size()); ++j) out[image[j]] += q[j];
    return out;
}

// Success probability when observable `ox` answers question 1 and `oy`
// answers question 2, maximized over deterministic relabelings and over
// the generating preparations per input pair.
double rac_success_assignment(const Theory& t, int ox, int oy) {
    const int d = t.observables[ox].outcomes;
    if (t.observables[oy].outcomes != d)
        throw std::invalid_argument("rac success: outcome counts must match");
    const int np = t.num_preparations();
    const auto relabelings = all_relabelings(d);
    double best = 0.0;
    std::vector<Dist> qx(np), qy(np);
    for (const auto& lx : relabelings) {
        for (int p = 0; p < np; ++p) qx[p] = relabel(t.stats[ox][p], lx, d);
        for (const auto& ly : relabelings) {
            for (int p = 0; p < np; ++p) qy[p] = relabel(t.stats[oy][p], ly, d);
            double total = 0.0;
            for (int a1 = 0; a1 < d; ++a1)
                for (int a2 = 0; a2 < d; ++a2) {
                    double m = 0.0;
                    for (int p = 0; p < np; ++p)
                        m = std::max(m, 0.5 * (qx[p][a1] + qy[p][a2]));
                    total += m;
                }
            best = std::max(best, total / (d * d));
        }
    }
    return best;
}

}  // namespace

double rac_success_pair(const Theory& t, int x, int y) {
    return std::max({rac_success_assignment(t, x, y), rac_success_assignment(t, y, x),
                     rac_success_assignment(t, x, x), rac_success_assignment(t, y, y)});
}

double rac_success_single(const Theory& t, int x) {
    return rac_success_assignment(t, x, x);
}

double rac_independence_gpt(const Theory& t, int x, int y) {
    const double both = rac_success_pair(t, x, y);
    const double single = std::max(rac_success_single(t, x), rac_success_single(t, y));
    if (single >= 1.0 - 1e-12) return 0.0;
    return std::max(0.0, (both - single) / (1.0 - single));
}

RescalingReport rescaling_independence(const StatisticsSet& s) {
    if (!s.binary())
        throw std::invalid_argument(
            "rescaling_independence: only binary statistics sets are supported");
    const InscribedCopy copy = max_inscribed_scaled_copy(s.geometry, unit_square_polytope());
    RescalingReport r;
    r.value = copy.scale;  // unit-square template: scale is already the ratio
    r.shift = copy.shift;
    return r;
}

double volume_independence(const StatisticsSet& s) {
    if (!s.binary())
        throw std::invalid_argument("volume_independence: only binary statistics sets");
    return 4.0 * polygon_area(s.geometry);  // average coordinates scale areas by 4
}

double simulation_gap_independence(const Theory& t, int x, int y) {
    auto gap = [&](int from, int to) {
        const int nin = t.observables[from].outcomes;
        const int nout = t.observables[to].outcomes;
        const int np = t.num_preparations();
        const int nvars = nin * nout + 1;  // map entries + epsilon
        const int eps = nin * nout;
        LinearProgram lp;
        lp.objective.assign(nvars, 0.0);
        lp.objective[eps] = -1.0;  // maximize -eps
        auto idx = [&](int i, int j) { return i * nin + j; };
        for (int p = 0; p < np; ++p)
            for (int i = 0; i < nout; ++i) {
                std::vector<double> pos(nvars, 0.0), neg(nvars, 0.0);
                for (int j = 0; j < nin; ++j) pos[idx(i, j)] = t.stats[from][p][j];
                neg = pos;
                for (auto& v : neg) v = -v;
                pos[eps] = -1.0;
                neg[eps] = -1.0;
                lp.add_constraint(std::move(pos), Rel::LessEq, t.stats[to][p][i]);
                lp.add_constraint(std::move(neg), Rel::LessEq, -t.stats[to][p][i]);
            }
        for (int j = 0; j < nin; ++j) {
            std::vector<double> row(nvars, 0.0);
            for (int i = 0; i < nout; ++i) row[idx(i, j)] = 1.0;
            lp.add_constraint(std::move(row), Rel::Eq, 1.0);
        }
        const LpResult res = solve_lp(lp);
        if (!res.optimal()) throw std::logic_error("simulation gap LP must be feasible");
        return res.x[eps];
    };
    return std::min(gap(x, y), gap(y, x));
}

PreimageReport preimage_measure_examples() {
    PreimageReport out;

    // Classical bit: the diagonal is reached from perfectly correlated
    // joints through identity channels; every such joint has VI = 0.
    {
        double worst = 0.0;
        for (int k = 0; k <= 20; ++k) {
            const double p = k / 20.0;
            JointDistribution j{{{p, 0.0}, {0.0, 1.0 - p}}};
            worst = std::max(worst, variation_of_information(j).bits);
        }
        out.classical_bit = worst;
    }

    // Diamond: corners are pairs where one marginal is pure, so corner
    // preimages are product joints. Of the four deterministic 2x2
    // channels, the constant ones cannot emit two different pure outputs
    // and are discarded; identity and flip remain for each side.
    {
        const std::vector<std::vector<int>> channels = {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
        const char* names[] = {"identity", "flip", "const0", "const1"};
        for (std::size_t c = 0; c < channels.size(); ++c) {
            const auto& ch = channels[c];
            const bool surjective = ch[0] != ch[1];
            if (surjective) out.admissible_channels.push_back(names[c]);
        }
        // Under any admissible channel pair, the preimage of the corner set
        // is the set of products of a pure and a uniform bit; its convex
        // hull contains the uniform product as the equal mixture.
        auto product_joint = [](const Dist& a, const Dist& b) {
            JointDistribution j;
            j.p = {{a[0] * b[0], a[0] * b[1]}, {a[1] * b[0], a[1] * b[1]}};
            return j;
        };
        const Dist pure0 = {1.0, 0.0}, pure1 = {0.0, 1.0}, unif = {0.5, 0.5};
        const std::vector<JointDistribution> corner_preimages = {
            product_joint(unif, pure0), product_joint(unif, pure1),
            product_joint(pure0, unif), product_joint(pure1, unif)};
        JointDistribution mix{{{0, 0}, {0, 0}}};
        for (const auto& j : corner_preimages)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) mix.p[a][b] += 0.25 * j.p[a][b];
        const auto vi = variation_of_information(mix);
        out.diamond_bits = vi.bits;
        out.diamond_normalized = vi.normalized;
    }
    return out;
}

ComplementarityReport complementarity_from_independence(const Theory& t, int x, int y,
                                                        const IndependenceFn& ind) {
    // simulators[o] = listed observables that simulate o
    auto simulators_of = [&](int target) {
        std::vector<int> sims;
        for (int o = 0; o < t.num_observables(); ++o)
            if (simulates(t, o, target)) sims.push_back(o);
        return sims;
    };

    // C for one extremal pair: minimize ind over simulator pairs. Pairs the
    // measure cannot score (e.g. mismatched outcome counts for the RAC
    // measure) are skipped; the pair (x, y) itself always scores.
    auto pair_value = [&](int xi, int yj, std::string* witness) {
        const auto sx = simulators_of(xi);
        const auto sy = simulators_of(yj);
        double best = kInf;
        for (int a : sx)
            for (int b : sy) {
                double v;
                try {
                    v = ind(t, a, b);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (v < best - 1e-15) {
                    best = v;
                    if (witness)
                        *witness = t.observables[a].name + "," + t.observables[b].name;
                }
            }
        return best;
    };

    auto decs_of = [&](int o) {
        std::vector<Decomposition> decs;
        decs.push_back({{{1.0, t.observables[o].name}}});  // trivial
        const auto it = t.decompositions.find(t.observables[o].name);
        if (it != t.decompositions.end())
            decs.insert(decs.end(), it->second.begin(), it->second.end());
        return decs;
    };

    ComplementarityReport out;
    out.value = kInf;
    for (const auto& dx : decs_of(x)) {
        for (const auto& dy : decs_of(y)) {
            double total = 0.0;
            std::string sim_witness;
            for (const auto& [alpha, xname] : dx.terms)
                for (const auto& [beta, yname] : dy.terms) {
                    std::string w;
                    total += alpha * beta *
                             pair_value(t.require_observable(xname),
                                        t.require_observable(yname), &w);
                    if (sim_witness.empty()) sim_witness = w;
                }
            if (total < out.value - 1e-15) {
                out.value = total;
                out.simulators = sim_witness;
                std::string desc;
                for (const auto& [alpha, xname] : dx.terms)
                    desc += (desc.empty() ? "" : " + ") + std::to_string(alpha) + "*" + xname;
                out.decomposition = desc;
            }
        }
    }
    // Self-simulation guarantees at least the trivial witness.
    out.trivial_simulators_only = false;
    return out;
}

}  // namespace opuc
