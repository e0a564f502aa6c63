#include "opuc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "opuc/assignment.hpp"

namespace opuc {

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::outer(const CVec& v) {
    CMat m(static_cast<int>(v.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.at(i, j) = v[i] * std::conj(v[j]);
    return m;
}

CMat CMat::operator+(const CMat& o) const {
    CMat r(n);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    CMat r(n);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
    return r;
}

CMat CMat::operator*(const CMat& o) const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx v = at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

CMat CMat::scaled(double s) const {
    CMat r(n);
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
    return r;
}

CMat CMat::dagger() const {
    CMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

double CMat::frobenius() const {
    double s = 0.0;
    for (const auto& v : a) s += std::norm(v);
    return std::sqrt(s);
}

bool CMat::hermitian(double tol) const {
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

double commutator_norm(const CMat& p, const CMat& q) {
    return (p * q - q * p).frobenius();
}

namespace {

// Cyclic Jacobi on a real symmetric matrix; returns eigenvalues ascending
// with the rotation product as eigenvector columns.
void jacobi_symmetric(std::vector<std::vector<double>>& s,
                      std::vector<std::vector<double>>& vecs) {
    const int n = static_cast<int>(s.size());
    vecs.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) vecs[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += s[i][j] * s[i][j];
        if (off < 1e-26) return;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(s[p][q]) < 1e-15) continue;
                const double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (int k = 0; k < n; ++k) {
                    const double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - sn * skq;
                    s[k][q] = sn * skp + c * skq;
                }
                for (int k = 0; k < n; ++k) {
                    const double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - sn * sqk;
                    s[q][k] = sn * spk + c * sqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - sn * vkq;
                    vecs[k][q] = sn * vkp + c * vkq;
                }
            }
        }
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMat& h) {
    if (!h.hermitian())
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");
    const int n = h.n;
    // Real embedding [[A, -B], [B, A]] of H = A + iB; every eigenvalue of H
    // appears twice, with eigenvectors (x, y) <-> x + iy.
    std::vector<std::vector<double>> s(2 * n, std::vector<double>(2 * n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s[i][j] = h.at(i, j).real();
            s[i][j + n] = -h.at(i, j).imag();
            s[i + n][j] = h.at(i, j).imag();
            s[i + n][j + n] = h.at(i, j).real();
        }
    std::vector<std::vector<double>> vecs;
    jacobi_symmetric(s, vecs);
    std::vector<std::pair<double, int>> order(2 * n);
    for (int k = 0; k < 2 * n; ++k) order[k] = {s[k][k], k};
    std::sort(order.begin(), order.end());
    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    // take every other entry of the doubled spectrum
    for (int k = 0; k < 2 * n; k += 2) {
        out.values.push_back(0.5 * (order[k].first + order[k + 1].first));
        const int col = order[k].second;
        CVec v(n);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            v[i] = cplx(vecs[i][col], vecs[i + n][col]);
            norm += std::norm(v[i]);
        }
        norm = std::sqrt(norm);
        for (auto& x : v) x /= norm;
        out.vectors.push_back(std::move(v));
    }
    return out;
}

double top_eigenvalue(const CMat& h) { return hermitian_eigensystem(h).values.back(); }

CVec normalized(const CVec& v) {
    double n = 0.0;
    for (const auto& x : v) n += std::norm(x);
    n = std::sqrt(n);
    if (n < 1e-300) throw std::invalid_argument("cannot normalize zero vector");
    CVec out(v);
    for (auto& x : out) x /= n;
    return out;
}

cplx inner(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(const std::vector<CVec>& basis) {
    ProjectiveMeasurement m;
    m.effects.reserve(basis.size());
    for (const auto& v : basis) m.effects.push_back(CMat::outer(normalized(v)));
    m.validate();
    return m;
}

ProjectiveMeasurement ProjectiveMeasurement::from_projectors(std::vector<CMat> projectors) {
    ProjectiveMeasurement m;
    m.effects = std::move(projectors);
    m.validate();
    return m;
}

void ProjectiveMeasurement::validate(double tol) const {
    if (effects.empty()) throw std::invalid_argument("measurement with no effects");
    const int d = dim();
    CMat sum(d);
    for (const auto& p : effects) {
        if (p.n != d) throw std::invalid_argument("effect dimension mismatch");
        if (!p.hermitian(tol)) throw std::invalid_argument("effect is not Hermitian");
        if ((p * p - p).frobenius() > 1e-9)
            throw std::invalid_argument("effect is not a projector");
        sum = sum + p;
    }
    if ((sum - CMat::identity(d)).frobenius() > 1e-9)
        throw std::invalid_argument("effects do not sum to identity");
    for (std::size_t i = 0; i < effects.size(); ++i)
        for (std::size_t j = i + 1; j < effects.size(); ++j)
            if ((effects[i] * effects[j]).frobenius() > 1e-9)
                throw std::invalid_argument("effects are not pairwise orthogonal");
}

Dist born_stats(const ProjectiveMeasurement& meas, const CMat& rho) {
    if (rho.n != meas.dim()) throw std::invalid_argument("born_stats: dimension mismatch");
    if (!rho.hermitian(1e-9)) throw std::invalid_argument("born_stats: rho not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-9)
        throw std::invalid_argument("born_stats: rho trace != 1");
    const auto eig = hermitian_eigensystem(rho);
    if (eig.values.front() < -1e-9)
        throw std::invalid_argument("born_stats: rho not positive semidefinite");
    Dist out(meas.outcomes(), 0.0);
    double total = 0.0;
    for (int k = 0; k < meas.outcomes(); ++k) {
        out[k] = std::max(0.0, (meas.effects[k] * rho).trace().real());
        total += out[k];
    }
    for (auto& v : out) v /= total;  // renormalize away O(1e-15) drift
    return out;
}

bool projective_jointly_measurable(const ProjectiveMeasurement& a,
                                   const ProjectiveMeasurement& b, double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("projective_jointly_measurable: dimension mismatch");
    for (const auto& p : a.effects)
        for (const auto& q : b.effects)
            if (commutator_norm(p, q) > tol) return false;
    return true;
}

ProjectiveMeasurement coarse_grain(const ProjectiveMeasurement& meas,
                                   const std::vector<int>& block_of_outcome, int blocks) {
    if (static_cast<int>(block_of_outcome.size()) != meas.outcomes())
        throw std::invalid_argument("coarse_grain: block labels length mismatch");
    std::vector<CMat> out(blocks, CMat(meas.dim()));
    for (int k = 0; k < meas.outcomes(); ++k)
        out[block_of_outcome[k]] = out[block_of_outcome[k]] + meas.effects[k];
    return ProjectiveMeasurement::from_projectors(std::move(out));
}

std::vector<std::vector<double>> overlap_matrix(const std::vector<CVec>& basisA,
                                                const std::vector<CVec>& basisB) {
    if (basisA.size() != basisB.size() || basisA.empty() ||
        basisA[0].size() != basisA.size())
        throw std::invalid_argument("overlap_matrix: rank-one bases of equal dimension required");
    const int d = static_cast<int>(basisA.size());
    std::vector<std::vector<double>> u(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) u[i][j] = std::abs(inner(basisA[i], basisB[j]));
    return u;
}

double rac_optimal_ps(const std::vector<CVec>& basisA, const std::vector<CVec>& basisB) {
    const auto u = overlap_matrix(basisA, basisB);
    const int d = static_cast<int>(u.size());
    double sum = 0.0;
    for (const auto& row : u) sum = std::accumulate(row.begin(), row.end(), sum);
    return 0.5 + sum / (2.0 * d * d);
}

double QubitPair::nx() const {
    if (std::fabs(nz) >= 1.0 - 1e-12)
        throw std::invalid_argument("qubit pair degenerate: |n_z| = 1 is the classical segment");
    return std::sqrt(1.0 - nz * nz);
}

QubitEllipse qubit_statistics_ellipse(const QubitPair& q) {
    const double nx = q.nx();
    QubitEllipse e;
    e.a = nx / std::sqrt(1.0 - q.nz);
    e.b = nx / std::sqrt(1.0 + q.nz);
    return e;
}

std::array<double, 2> QubitEllipse::boundary_avg(double t) const {
    const double u = a * std::cos(t);
    const double v = b * std::sin(t);
    constexpr double inv_sqrt2 = 0.7071067811865475244;
    return {(u + v) * inv_sqrt2, (u - v) * inv_sqrt2};  // (x, z)
}

std::vector<std::array<double, 2>> QubitEllipse::polygon_avg(int resolution) const {
    if (resolution < 8) throw std::invalid_argument("polygon resolution too small");
    std::vector<double> ts;
    ts.reserve(resolution + 4);
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int k = 0; k < resolution; ++k) ts.push_back(two_pi * k / resolution);
    // tangency parameters where x and z reach ±1, so the polygon stays sharp
    const double tstar = std::atan2(b, a);
    for (double t : {tstar, tstar + two_pi / 2, -tstar, -tstar + two_pi / 2})
        ts.push_back(std::fmod(t + two_pi, two_pi));
    std::sort(ts.begin(), ts.end());
    std::vector<std::array<double, 2>> pts;
    pts.reserve(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0 && ts[i] - ts[i - 1] < 1e-12) continue;
        pts.push_back(boundary_avg(ts[i]));
    }
    return pts;
}

StatisticsSet QubitEllipse::statistics_set(int resolution) const {
    std::vector<StatPoint> pts;
    for (const auto& [x, z] : polygon_avg(resolution)) {
        // outcome 1 <-> eigenvalue +1, so q(2|P) = (1 - <·>)/2
        pts.push_back({{(1.0 + x) / 2.0, (1.0 - x) / 2.0},
                       {(1.0 + z) / 2.0, (1.0 - z) / 2.0}});
    }
    return make_statistics_set(2, 2, std::move(pts));
}

std::optional<CVec> common_deterministic_state(const CMat& effect_a, const CMat& effect_b,
                                               double tol) {
    // range(P) ∩ range(Q) is nonempty iff lambda_max(P Q P) = 1
    const CMat pqp = effect_a * effect_b * effect_a;
    const auto eig = hermitian_eigensystem(pqp);
    if (eig.values.back() < 1.0 - tol) return std::nullopt;
    return eig.vectors.back();
}

bool quantum_has_uncertainty(const ProjectiveMeasurement& a,
                             const ProjectiveMeasurement& b) {
    for (const auto& p : a.effects)
        for (const auto& q : b.effects)
            if (common_deterministic_state(p, q)) return false;
    return true;
}

bool quantum_has_exclusion(const std::vector<CVec>& basisA,
                           const std::vector<CVec>& basisB) {
    const auto u = overlap_matrix(basisA, basisB);
    const int d = static_cast<int>(u.size());
    std::vector<std::vector<double>> w(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w[i][j] = (u[i][j] >= 1.0 - 1e-9) ? 1.0 : 0.0;
    return max_assignment(w).value < d - 0.5;
}

bool quantum_single_outcome_complementary(const std::vector<CVec>& basisA,
                                          const std::vector<CVec>& basisB) {
    // keep outcome k on both sides; rank-one projectors commute iff the
    // overlap is 0 or 1
    const auto u = overlap_matrix(basisA, basisB);
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double o = u[k][k];
        if (o <= 1e-9 || o >= 1.0 - 1e-9) return false;
    }
    return true;
}

bool quantum_fully_complementary(const std::vector<CVec>& basisA,
                                 const std::vector<CVec>& basisB) {
    const auto ma = ProjectiveMeasurement::from_basis(basisA);
    const auto mb = ProjectiveMeasurement::from_basis(basisB);
    if (projective_jointly_measurable(ma, mb)) return false;
    const int d = ma.outcomes();
    if (d == 2) return true;
    for (const auto& map : enumerate_coarse_grainings(d, CoarseGrainMode::AllNontrivial)) {
        std::vector<int> blocks(d);
        int nblocks = map.out_count();
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < nblocks; ++i)
                if (map.m[i][j] > 0.5) blocks[j] = i;
        const auto ca = coarse_grain(ma, blocks, nblocks);
        const auto cb = coarse_grain(mb, blocks, nblocks);
        if (projective_jointly_measurable(ca, cb)) return false;
    }
    return true;
}

bool quantum_strong_uncertainty(const ProjectiveMeasurement& a,
                                const ProjectiveMeasurement& b) {
    const auto binsA = enumerate_coarse_grainings(a.outcomes(), CoarseGrainMode::Binary);
    const auto binsB = enumerate_coarse_grainings(b.outcomes(), CoarseGrainMode::Binary);
    auto blocks_of = [](const StochasticMap& map) {
        std::vector<int> blocks(map.in_count());
        for (int j = 0; j < map.in_count(); ++j)
            for (int i = 0; i < map.out_count(); ++i)
                if (map.m[i][j] > 0.5) blocks[j] = i;
        return blocks;
    };
    for (const auto& bma : binsA) {
        const auto ca = coarse_grain(a, blocks_of(bma), 2);
        for (const auto& bmb : binsB) {
            const auto cb = coarse_grain(b, blocks_of(bmb), 2);
            if (!quantum_has_uncertainty(ca, cb)) return false;
        }
    }
    return true;
}

}  // namespace opuc
