#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "opuc/assignment.hpp"

using namespace opuc;

namespace {

// factorial brute force, lexicographically smallest maximizer
Assignment brute_force(const std::vector<std::vector<double>>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Assignment best;
    best.value = -1e300;
    do {
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += w[i][perm[i]];
        if (v > best.value + 1e-12) {
            best.value = v;
            best.perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("identity weights") {
    const std::vector<std::vector<double>> eye = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto a = max_assignment(eye);
    CHECK(a.value == doctest::Approx(3.0));
    CHECK(a.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("2x2 favors the diagonal") {
    const auto a = max_assignment({{0.9, 0.1}, {0.2, 0.8}});
    CHECK(a.value == doctest::Approx(1.7));
    CHECK(a.perm == std::vector<int>{0, 1});
}

TEST_CASE("ties broken lexicographically") {
    // both permutations score sqrt(2) on the flat overlap matrix
    const double v = 1.0 / std::sqrt(2.0);
    const auto a = max_assignment({{v, v}, {v, v}});
    CHECK(a.value == doctest::Approx(std::sqrt(2.0)));
    CHECK(a.perm == std::vector<int>{0, 1});
}

TEST_CASE("matches factorial brute force on random matrices") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::uniform_int_distribution<int> size(2, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = size(rng);
        std::vector<std::vector<double>> w(n, std::vector<double>(n));
        for (auto& row : w)
            for (auto& v : row) v = uni(rng);
        const auto fast = max_assignment(w);
        const auto slow = brute_force(w);
        CHECK(fast.value == doctest::Approx(slow.value).epsilon(1e-9));
        CHECK(fast.perm == slow.perm);  // both lexicographically smallest
    }
}
