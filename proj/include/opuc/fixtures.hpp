#pragma once
// Named fixture catalog addressable from the CLI: the binary geometric
// sets (square bit, classical bit, diamond), the two-bit marginal theory,
// the mixed-observable three-outcome theory, the qubit family, and the
// quantum counterexample pairs.

#include <string>
#include <vector>

#include "opuc/quantum.hpp"
#include "opuc/theory.hpp"

namespace opuc {

// GPT fixtures: "c-bit", "square-bit", "diamond", "two-bit", "appendix-c".
Theory fixture_theory(const std::string& id);

struct QuantumPairFixture {
    std::string id;
    ProjectiveMeasurement a, b;
    // named probe states used to generate a statistics set
    std::vector<std::string> state_names;
    std::vector<CMat> states;
    // set when both measurements are rank-one
    std::vector<CVec> basis_a, basis_b;

    bool rank_one() const { return !basis_a.empty(); }
    StatisticsSet statistics_set() const;
};

// Quantum fixtures: "ex1", "ex2", "weird", "appendix-b", and the rank-one
// MUB pair "qubit-mub" (sigma_z / sigma_x eigenbases).
QuantumPairFixture fixture_quantum(const std::string& id);

// The state (2|0> + |2>)/sqrt(5) defeating strong uncertainty in the
// five-dimensional fixture.
CVec appendix_b_witness_state();

bool is_gpt_fixture(const std::string& id);
bool is_quantum_fixture(const std::string& id);
std::vector<std::string> fixture_ids();  // includes "qubit" (parametric)

}  // namespace opuc
