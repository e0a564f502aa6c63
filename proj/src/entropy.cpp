#include "opuc/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace opuc {
namespace {

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double binary_entropy(double p) {
    if (p < -1e-12 || p > 1.0 + 1e-12)
        throw std::invalid_argument("binary_entropy: p outside [0,1]");
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -xlog2x(p) - xlog2x(1.0 - p);
}

double binary_entropy_inverse(double y) {
    if (y < -1e-12 || y > 1.0 + 1e-12)
        throw std::invalid_argument("binary_entropy_inverse: y outside [0,1]");
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double shannon_entropy(const std::vector<double>& p) {
    double h = 0.0;
    for (double v : p) h -= xlog2x(v);
    return h;
}

std::vector<double> JointDistribution::marginal_x() const {
    std::vector<double> m(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (double v : p[i]) m[i] += v;
    return m;
}

std::vector<double> JointDistribution::marginal_y() const {
    if (p.empty()) return {};
    std::vector<double> m(p[0].size(), 0.0);
    for (const auto& row : p)
        for (std::size_t j = 0; j < row.size(); ++j) m[j] += row[j];
    return m;
}

void JointDistribution::validate() const {
    double total = 0.0;
    for (const auto& row : p) {
        if (row.size() != p.size())
            throw std::invalid_argument("joint distribution must be square");
        for (double v : row) {
            if (v < -1e-12) throw std::invalid_argument("joint distribution has negative entry");
            total += v;
        }
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("joint distribution does not sum to 1");
}

VariationOfInformation variation_of_information(const JointDistribution& joint) {
    joint.validate();
    double hxy = 0.0;
    for (const auto& row : joint.p)
        for (double v : row) hxy -= xlog2x(v);
    const double hx = shannon_entropy(joint.marginal_x());
    const double hy = shannon_entropy(joint.marginal_y());
    VariationOfInformation out;
    out.bits = 2.0 * hxy - hx - hy;  // H(X|Y) + H(Y|X)
    if (out.bits < 0.0 && out.bits > -1e-12) out.bits = 0.0;
    const int n = joint.size();
    out.normalized = n > 1 ? out.bits / (2.0 * std::log2(static_cast<double>(n))) : 0.0;
    return out;
}

}  // namespace opuc
