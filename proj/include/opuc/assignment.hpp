#pragma once
// Maximum-weight perfect assignment on a square matrix (Hungarian method),
// with a deterministic lexicographically-smallest optimal permutation so
// reported witnesses are reproducible.

#include <vector>

namespace opuc {

struct Assignment {
    std::vector<int> perm;  // perm[i] = column assigned to row i
    double value = 0.0;
};

Assignment max_assignment(const std::vector<std::vector<double>>& weights);

}  // namespace opuc
