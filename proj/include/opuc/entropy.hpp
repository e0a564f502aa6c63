#pragma once
// Shannon entropies in bits, the binary entropy and its inverse on the
// increasing branch, and variation of information for joint distributions.

#include <vector>

namespace opuc {

double binary_entropy(double p);                 // h(p), base 2
double binary_entropy_inverse(double y);         // h^-1 on [0, 1/2], bisection to 1e-12
double shannon_entropy(const std::vector<double>& p);

// Joint distribution over n x n outcomes, normalized to 1 within 1e-9.
struct JointDistribution {
    std::vector<std::vector<double>> p;

    int size() const { return static_cast<int>(p.size()); }
    std::vector<double> marginal_x() const;  // rows
    std::vector<double> marginal_y() const;  // columns
    void validate() const;
};

struct VariationOfInformation {
    double bits = 0.0;        // H(X|Y) + H(Y|X)
    double normalized = 0.0;  // bits / (2 log2 n)
};

VariationOfInformation variation_of_information(const JointDistribution& joint);

}  // namespace opuc
