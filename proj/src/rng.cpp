#include "opuc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace opuc {

Dist random_distribution(Rng& rng, int n) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Dist d(n);
    double sum = 0.0;
    for (auto& v : d) {
        v = -std::log(1.0 - uni(rng));  // exponential, flat on the simplex
        sum += v;
    }
    for (auto& v : d) v /= sum;
    return d;
}

std::vector<CVec> random_basis(Rng& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CVec> basis;
    basis.reserve(d);
    for (int k = 0; k < d; ++k) {
        CVec v(d);
        for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
        // Gram-Schmidt against previous vectors, twice for stability
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis) {
                const cplx c = inner(u, v);
                for (int i = 0; i < d; ++i) v[i] -= c * u[i];
            }
        basis.push_back(normalized(v));
    }
    return basis;
}

CMat random_pure_state(Rng& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec v(d);
    for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
    return CMat::outer(normalized(v));
}

StochasticMap random_stochastic(Rng& rng, int out, int in) {
    StochasticMap s;
    s.m.assign(out, std::vector<double>(in, 0.0));
    for (int j = 0; j < in; ++j) {
        const Dist col = random_distribution(rng, out);
        for (int i = 0; i < out; ++i) s.m[i][j] = col[i];
    }
    return s;
}

StochasticMap random_doubly_stochastic(Rng& rng, int n, int mixing) {
    // Birkhoff: random convex combination of permutation matrices
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const Dist weights = random_distribution(rng, mixing);
    StochasticMap s;
    s.m.assign(n, std::vector<double>(n, 0.0));
    for (int t = 0; t < mixing; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int j = 0; j < n; ++j) s.m[perm[j]][j] += weights[t];
    }
    return s;
}

StochasticMap random_deterministic(Rng& rng, int out, int in) {
    std::uniform_int_distribution<int> pick(0, out - 1);
    std::vector<int> image(in);
    for (auto& v : image) v = pick(rng);
    return StochasticMap::deterministic(image, out);
}

Theory random_mother_theory(Rng& rng, int mother_outcomes, int child_outcomes,
                            int children, int preps) {
    Theory t;
    const int z = t.add_observable("Z", mother_outcomes);
    std::vector<int> kids;
    for (int c = 0; c < children; ++c)
        kids.push_back(t.add_observable("C" + std::to_string(c), child_outcomes));
    std::vector<StochasticMap> maps;
    for (int c = 0; c < children; ++c)
        maps.push_back(random_stochastic(rng, child_outcomes, mother_outcomes));
    for (int p = 0; p < preps; ++p) {
        const Dist qz = random_distribution(rng, mother_outcomes);
        std::vector<Dist> per_obs(t.num_observables());
        per_obs[z] = qz;
        for (int c = 0; c < children; ++c) per_obs[kids[c]] = maps[c].apply(qz);
        t.add_preparation("P" + std::to_string(p), std::move(per_obs));
    }
    return t;
}

Theory random_free_theory(Rng& rng, int outcomes, int observables, int preps) {
    Theory t;
    for (int o = 0; o < observables; ++o)
        t.add_observable("O" + std::to_string(o), outcomes);
    for (int p = 0; p < preps; ++p) {
        std::vector<Dist> per_obs;
        for (int o = 0; o < observables; ++o)
            per_obs.push_back(random_distribution(rng, outcomes));
        t.add_preparation("P" + std::to_string(p), std::move(per_obs));
    }
    return t;
}

StatisticsSet random_sharp_binary_set(Rng& rng, int interior) {
    std::uniform_real_distribution<double> uni(0.05, 0.95);
    std::uniform_real_distribution<double> any(0.0, 1.0);
    std::vector<StatPoint> pts;
    auto push = [&](double u, double v) {
        pts.push_back({{1.0 - u, u}, {1.0 - v, v}});
    };
    push(uni(rng), 0.0);
    push(uni(rng), 1.0);
    push(0.0, uni(rng));
    push(1.0, uni(rng));
    for (int k = 0; k < interior; ++k) push(any(rng), any(rng));
    return make_statistics_set(2, 2, std::move(pts));
}

}  // namespace opuc
