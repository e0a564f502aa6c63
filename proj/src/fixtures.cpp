#include "opuc/fixtures.hpp"

#include <cmath>
#include <stdexcept>

namespace opuc {
namespace {

Theory binary_set_theory(const std::string& id,
                         const std::vector<std::array<double, 2>>& corners) {
    // two binary observables X, Y; each generator pins (q_X(2|P), q_Y(2|P))
    Theory t;
    t.add_observable("X", 2, {.clean = true, .sharp = true, .extremal = true});
    t.add_observable("Y", 2, {.clean = true, .sharp = true, .extremal = true});
    int k = 0;
    for (const auto& [u, v] : corners)
        t.add_preparation(id + "-P" + std::to_string(k++),
                          {{1.0 - u, u}, {1.0 - v, v}});
    return t;
}

Theory make_two_bit() {
    Theory t;
    t.add_observable("X", 2, {.sharp = true, .extremal = true});
    t.add_observable("Y", 2, {.sharp = true, .extremal = true});
    t.add_observable("Z", 4, {.clean = true, .sharp = true, .extremal = true});
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
            Dist qx(2, 0.0), qy(2, 0.0), qz(4, 0.0);
            qx[b1] = 1.0;
            qy[b2] = 1.0;
            qz[2 * b1 + b2] = 1.0;
            t.add_preparation("P" + std::to_string(b1) + std::to_string(b2),
                              {qx, qy, qz});
        }
    return t;
}

Theory make_appendix_c() {
    Theory t;
    t.add_observable("X1", 3, {.extremal = true});
    t.add_observable("X2", 3, {.extremal = true});
    t.add_observable("Y", 3, {.extremal = true});
    t.add_preparation("P1", {{1, 0, 0}, {0.25, 0, 0.75}, {0.25, 0.75, 0}});
    t.add_preparation("P2", {{0, 1, 0}, {0.75, 0, 0.25}, {0.75, 0.25, 0}});
    t.add_preparation("P3", {{0, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    mix_observables(t, 0, 1, 0.5, "X");
    t.decompositions["X"] = {Decomposition{{{0.5, "X1"}, {0.5, "X2"}}}};
    return t;
}

CVec basis_vector(int d, int k) {
    CVec v(d, cplx{0.0});
    v[k] = 1.0;
    return v;
}

CVec lincomb(int d, std::initializer_list<std::pair<int, double>> terms) {
    CVec v(d, cplx{0.0});
    for (const auto& [k, w] : terms) v[k] += w;
    return normalized(v);
}

QuantumPairFixture make_ex1() {
    // 3x3 blocks: sigma_x ⊕ 1 versus sigma_z ⊕ 1; binary measurements with
    // the shared eigenvector e2.
    QuantumPairFixture f;
    f.id = "ex1";
    const int d = 3;
    const CVec plus = lincomb(d, {{0, 1.0}, {1, 1.0}});
    const CVec minus = lincomb(d, {{0, 1.0}, {1, -1.0}});
    const CVec e0 = basis_vector(d, 0), e1 = basis_vector(d, 1), e2 = basis_vector(d, 2);
    f.a = ProjectiveMeasurement::from_projectors(
        {CMat::outer(plus) + CMat::outer(e2), CMat::outer(minus)});
    f.b = ProjectiveMeasurement::from_projectors(
        {CMat::outer(e0) + CMat::outer(e2), CMat::outer(e1)});
    f.state_names = {"e0", "e1", "e2", "plus", "minus"};
    for (const auto& v : {e0, e1, e2, plus, minus}) f.states.push_back(CMat::outer(v));
    return f;
}

QuantumPairFixture make_ex2() {
    // sigma_x ⊕ sigma_x versus sigma_z ⊕ sigma_z as rank-one four-outcome
    // measurements; outcome order pairs the blocks.
    QuantumPairFixture f;
    f.id = "ex2";
    const int d = 4;
    f.basis_a = {lincomb(d, {{0, 1.0}, {1, 1.0}}), lincomb(d, {{0, 1.0}, {1, -1.0}}),
                 lincomb(d, {{2, 1.0}, {3, 1.0}}), lincomb(d, {{2, 1.0}, {3, -1.0}})};
    f.basis_b = {basis_vector(d, 0), basis_vector(d, 1), basis_vector(d, 2),
                 basis_vector(d, 3)};
    f.a = ProjectiveMeasurement::from_basis(f.basis_a);
    f.b = ProjectiveMeasurement::from_basis(f.basis_b);
    for (int k = 0; k < d; ++k) {
        f.state_names.push_back("e" + std::to_string(k));
        f.states.push_back(CMat::outer(basis_vector(d, k)));
        f.state_names.push_back("x" + std::to_string(k));
        f.states.push_back(CMat::outer(f.basis_a[k]));
    }
    return f;
}

QuantumPairFixture make_weird() {
    // C^6 dichotomic pair: not jointly measurable, yet the statistics set
    // is the full square (four corner states e2..e5).
    QuantumPairFixture f;
    f.id = "weird";
    const int d = 6;
    const CVec plus = lincomb(d, {{0, 1.0}, {1, 1.0}});
    const CVec minus = lincomb(d, {{0, 1.0}, {1, -1.0}});
    auto e = [&](int k) { return basis_vector(d, k); };
    f.a = ProjectiveMeasurement::from_projectors(
        {CMat::outer(e(0)) + CMat::outer(e(2)) + CMat::outer(e(3)),
         CMat::outer(e(1)) + CMat::outer(e(4)) + CMat::outer(e(5))});
    f.b = ProjectiveMeasurement::from_projectors(
        {CMat::outer(plus) + CMat::outer(e(2)) + CMat::outer(e(4)),
         CMat::outer(minus) + CMat::outer(e(3)) + CMat::outer(e(5))});
    for (int k = 0; k < d; ++k) {
        f.state_names.push_back("e" + std::to_string(k));
        f.states.push_back(CMat::outer(e(k)));
    }
    f.state_names.push_back("plus");
    f.states.push_back(CMat::outer(plus));
    return f;
}

QuantumPairFixture make_appendix_b() {
    QuantumPairFixture f;
    f.id = "appendix-b";
    const int d = 5;
    f.basis_a = {basis_vector(d, 0), basis_vector(d, 1), basis_vector(d, 2),
                 lincomb(d, {{3, 1.0}, {4, 1.0}}), lincomb(d, {{3, 1.0}, {4, -1.0}})};
    const double s6 = std::sqrt(6.0);
    // chi = (|0> - |1> - 2|2>)/sqrt(6)
    f.basis_b = {lincomb(d, {{0, 1.0}, {1, 1.0}}),
                 lincomb(d, {{0, 1.0}, {1, -1.0}, {2, 1.0}}),
                 lincomb(d, {{3, 1.0}, {0, 1.0 / s6}, {1, -1.0 / s6}, {2, -2.0 / s6}}),
                 basis_vector(d, 4),
                 lincomb(d, {{3, 1.0}, {0, -1.0 / s6}, {1, 1.0 / s6}, {2, 2.0 / s6}})};
    f.a = ProjectiveMeasurement::from_basis(f.basis_a);
    f.b = ProjectiveMeasurement::from_basis(f.basis_b);
    for (int k = 0; k < d; ++k) {
        f.state_names.push_back("e" + std::to_string(k));
        f.states.push_back(CMat::outer(basis_vector(d, k)));
    }
    f.state_names.push_back("witness");
    f.states.push_back(CMat::outer(appendix_b_witness_state()));
    return f;
}

QuantumPairFixture make_qubit_mub() {
    QuantumPairFixture f;
    f.id = "qubit-mub";
    const int d = 2;
    f.basis_a = {basis_vector(d, 0), basis_vector(d, 1)};
    f.basis_b = {lincomb(d, {{0, 1.0}, {1, 1.0}}), lincomb(d, {{0, 1.0}, {1, -1.0}})};
    f.a = ProjectiveMeasurement::from_basis(f.basis_a);
    f.b = ProjectiveMeasurement::from_basis(f.basis_b);
    f.state_names = {"z+", "z-", "x+", "x-"};
    for (const auto& v : {f.basis_a[0], f.basis_a[1], f.basis_b[0], f.basis_b[1]})
        f.states.push_back(CMat::outer(v));
    return f;
}

}  // namespace

Theory fixture_theory(const std::string& id) {
    if (id == "c-bit") return binary_set_theory(id, {{0, 0}, {1, 1}});
    if (id == "square-bit") return binary_set_theory(id, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    if (id == "diamond")
        return binary_set_theory(id, {{0.5, 0}, {1, 0.5}, {0.5, 1}, {0, 0.5}});
    if (id == "two-bit") return make_two_bit();
    if (id == "appendix-c") return make_appendix_c();
    throw std::invalid_argument("unknown theory fixture: " + id);
}

StatisticsSet QuantumPairFixture::statistics_set() const {
    std::vector<StatPoint> pts;
    pts.reserve(states.size());
    for (const auto& rho : states) pts.push_back({born_stats(a, rho), born_stats(b, rho)});
    return make_statistics_set(a.outcomes(), b.outcomes(), std::move(pts));
}

QuantumPairFixture fixture_quantum(const std::string& id) {
    if (id == "ex1") return make_ex1();
    if (id == "ex2") return make_ex2();
    if (id == "weird") return make_weird();
    if (id == "appendix-b") return make_appendix_b();
    if (id == "qubit-mub") return make_qubit_mub();
    throw std::invalid_argument("unknown quantum fixture: " + id);
}

CVec appendix_b_witness_state() {
    CVec v(5, cplx{0.0});
    v[0] = 2.0 / std::sqrt(5.0);
    v[2] = 1.0 / std::sqrt(5.0);
    return v;
}

bool is_gpt_fixture(const std::string& id) {
    return id == "c-bit" || id == "square-bit" || id == "diamond" || id == "two-bit" ||
           id == "appendix-c";
}

bool is_quantum_fixture(const std::string& id) {
    return id == "ex1" || id == "ex2" || id == "weird" || id == "appendix-b" ||
           id == "qubit-mub";
}

std::vector<std::string> fixture_ids() {
    return {"c-bit",      "square-bit", "diamond", "two-bit",   "appendix-c",
            "ex1",        "ex2",        "weird",   "appendix-b", "qubit-mub",
            "qubit"};
}

}  // namespace opuc
