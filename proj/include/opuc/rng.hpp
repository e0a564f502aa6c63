#pragma once
// Seeded generators for the randomized verification campaigns: Haar-ish
// random bases, random stochastic and doubly stochastic maps, random
// distributions, random theories with known mother structure, and random
// sharp 2D statistics sets.

#include <cstdint>
#include <random>

#include "opuc/quantum.hpp"
#include "opuc/theory.hpp"

namespace opuc {

using Rng = std::mt19937_64;

Dist random_distribution(Rng& rng, int n);
std::vector<CVec> random_basis(Rng& rng, int d);  // Gram-Schmidt on Gaussians
CMat random_pure_state(Rng& rng, int d);          // |psi><psi|
StochasticMap random_stochastic(Rng& rng, int out, int in);
StochasticMap random_doubly_stochastic(Rng& rng, int n, int mixing = 6);
StochasticMap random_deterministic(Rng& rng, int out, int in);

// Random theory built from a mother observable: Z has `mother_outcomes`
// outcomes with random statistics over `preps` generators; child
// observables are random post-processings of Z, so their joint
// measurability structure is known by construction.
Theory random_mother_theory(Rng& rng, int mother_outcomes, int child_outcomes,
                            int children, int preps);

// Random theory with no planted structure (independent random statistics).
Theory random_free_theory(Rng& rng, int outcomes, int observables, int preps);

// Random sharp binary statistics set in probability coordinates: touches
// all four sides of [0,1]^2, plus `interior` extra hull points.
StatisticsSet random_sharp_binary_set(Rng& rng, int interior);

}  // namespace opuc
