#include <doctest.h>

#include <cmath>

#include "opuc/fixtures.hpp"
#include "opuc/rng.hpp"

using namespace opuc;

namespace {

CVec ket(int d, int k) {
    CVec v(d, cplx{0.0});
    v[k] = 1.0;
    return v;
}

}  // namespace

TEST_CASE("born statistics on eigenstates and unbiased states") {
    const auto mub = fixture_quantum("qubit-mub");
    const CMat zero = CMat::outer(ket(2, 0));
    CHECK(born_stats(mub.a, zero)[0] == doctest::Approx(1.0));
    const Dist x_on_zero = born_stats(mub.b, zero);
    CHECK(x_on_zero[0] == doctest::Approx(0.5));
    CHECK(x_on_zero[1] == doctest::Approx(0.5));

    CMat not_a_state = CMat::identity(2);  // trace 2
    CHECK_THROWS_AS(born_stats(mub.a, not_a_state), std::invalid_argument);
}

TEST_CASE("born statistics are convex-linear in the state") {
    Rng rng(11);
    const auto basis = random_basis(rng, 3);
    const auto meas = ProjectiveMeasurement::from_basis(basis);
    for (int trial = 0; trial < 20; ++trial) {
        const CMat r1 = random_pure_state(rng, 3);
        const CMat r2 = random_pure_state(rng, 3);
        const double a = 0.3;
        const CMat mix = r1.scaled(a) + r2.scaled(1 - a);
        const Dist dm = born_stats(meas, mix);
        const Dist d1 = born_stats(meas, r1);
        const Dist d2 = born_stats(meas, r2);
        for (int k = 0; k < 3; ++k)
            CHECK(dm[k] == doctest::Approx(a * d1[k] + (1 - a) * d2[k]).epsilon(1e-10));
    }
}

TEST_CASE("jacobi eigensystem against closed forms") {
    // sigma_x: eigenvalues -1, +1
    CMat sx(2);
    sx.at(0, 1) = 1.0;
    sx.at(1, 0) = 1.0;
    const auto eig = hermitian_eigensystem(sx);
    CHECK(eig.values[0] == doctest::Approx(-1.0));
    CHECK(eig.values[1] == doctest::Approx(1.0));

    // rank-two projector sum: top eigenvalue 1 + |overlap|
    Rng rng(17);
    for (int d : {2, 3, 4, 7}) {
        const auto a = random_basis(rng, d);
        const auto b = random_basis(rng, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const CMat sum = CMat::outer(a[i]) + CMat::outer(b[j]);
                const double overlap = std::abs(inner(a[i], b[j]));
                CHECK(top_eigenvalue(sum) == doctest::Approx(1.0 + overlap).epsilon(1e-9));
            }
    }
}

TEST_CASE("overlap matrices are doubly stochastic in the square") {
    Rng rng(23);
    for (int d : {2, 3, 5}) {
        const auto u = overlap_matrix(random_basis(rng, d), random_basis(rng, d));
        for (int i = 0; i < d; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < d; ++j) {
                row += u[i][j] * u[i][j];
                col += u[j][i] * u[j][i];
            }
            CHECK(row == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(col == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    const auto mub = fixture_quantum("qubit-mub");
    const auto u = overlap_matrix(mub.basis_a, mub.basis_b);
    for (const auto& row : u)
        for (double v : row) CHECK(v == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("identical bases give the identity overlap pattern") {
    Rng rng(29);
    const auto b = random_basis(rng, 4);
    const auto u = overlap_matrix(b, b);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(u[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
}

TEST_CASE("rac success probability: classical coincidence, MUB optimum, oracle") {
    const auto mub = fixture_quantum("qubit-mub");
    CHECK(rac_optimal_ps(mub.basis_a, mub.basis_a) == doctest::Approx(0.75));
    CHECK(rac_optimal_ps(mub.basis_a, mub.basis_b) ==
          doctest::Approx(0.5 + 0.5 / std::sqrt(2.0)).epsilon(1e-12));

    // eigenvalue oracle: the formula equals the mean of top eigenvalues
    Rng rng(37);
    for (int d : {2, 3}) {
        const auto a = random_basis(rng, d);
        const auto b = random_basis(rng, d);
        double oracle = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                oracle += top_eigenvalue(CMat::outer(a[i]) + CMat::outer(b[j]));
        oracle /= 2.0 * d * d;
        CHECK(rac_optimal_ps(a, b) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("quantum advantage over the classical bound for distinct bases") {
    Rng rng(41);
    for (int d : {2, 3, 4}) {
        const double classical = 0.5 + 0.5 / d;
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_basis(rng, d);
            const auto b = random_basis(rng, d);
            CHECK(rac_optimal_ps(a, b) > classical);
        }
    }
}

TEST_CASE("qubit ellipse semiaxes and boundary containment") {
    CHECK_THROWS_AS(QubitPair{1.0}.nx(), std::invalid_argument);

    const auto circle = qubit_statistics_ellipse(QubitPair{0.0});
    CHECK(circle.a == doctest::Approx(1.0));
    CHECK(circle.b == doctest::Approx(1.0));

    const auto e = qubit_statistics_ellipse(QubitPair{0.6});
    CHECK(e.a == doctest::Approx(1.2649110641).epsilon(1e-9));
    CHECK(e.b == doctest::Approx(0.6324555320).epsilon(1e-9));

    // boundary points satisfy the quadratic form
    for (int k = 0; k < 32; ++k) {
        const auto [x, z] = e.boundary_avg(2 * M_PI * k / 32);
        const double lhs = (x + z) * (x + z) / (2 * e.a * e.a) +
                           (x - z) * (x - z) / (2 * e.b * e.b);
        CHECK(lhs == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("sampled qubit states stay inside the ellipse") {
    const double nz = 0.6;
    const auto e = qubit_statistics_ellipse(QubitPair{nz});
    const double nx = QubitPair{nz}.nx();
    Rng rng(20231115);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        // random pure state: uniform Bloch direction
        double mx, my, mz, norm2;
        do {
            mx = uni(rng);
            my = uni(rng);
            mz = uni(rng);
            norm2 = mx * mx + my * my + mz * mz;
        } while (norm2 > 1.0 || norm2 < 1e-6);
        const double inv = 1.0 / std::sqrt(norm2);
        mx *= inv;
        my *= inv;
        mz *= inv;
        const double z = mz;                  // <sigma_z>
        const double x = nx * mx + nz * mz;   // <n·sigma>
        const double q = (x + z) * (x + z) / (2 * e.a * e.a) +
                         (x - z) * (x - z) / (2 * e.b * e.b);
        CHECK(q <= 1.0 + 1e-9);
    }
}

TEST_CASE("qubit polygon touches all four edges and matches closed forms") {
    for (double nz : {0.0, 0.37, -0.6, 0.9}) {
        const auto e = qubit_statistics_ellipse(QubitPair{nz});
        const auto s = e.statistics_set(256);
        double umin = 1, umax = 0, vmin = 1, vmax = 0;
        for (const auto& v : s.geometry.vertices) {
            umin = std::min(umin, v[0]);
            umax = std::max(umax, v[0]);
            vmin = std::min(vmin, v[1]);
            vmax = std::max(vmax, v[1]);
        }
        CHECK(umin == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(umax == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(vmin == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(vmax == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("commutation-based joint measurability") {
    const auto mub = fixture_quantum("qubit-mub");
    CHECK(projective_jointly_measurable(mub.a, mub.a));
    CHECK_FALSE(projective_jointly_measurable(mub.a, mub.b));

    const auto ex1 = fixture_quantum("ex1");
    CHECK_FALSE(projective_jointly_measurable(ex1.a, ex1.b));
    // shared eigenvector: the corner state e2 is deterministic for both
    const auto corner = common_deterministic_state(ex1.a.effects[0], ex1.b.effects[0]);
    REQUIRE(corner);
    CHECK(std::abs((*corner)[2]) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_FALSE(quantum_has_uncertainty(ex1.a, ex1.b));
}

TEST_CASE("the six-dimensional dichotomic pair fills the square") {
    const auto weird = fixture_quantum("weird");
    CHECK_FALSE(projective_jointly_measurable(weird.a, weird.b));
    const auto s = weird.statistics_set();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(corner_in_set(s, i, j));
    CHECK(polygon_area(s.geometry) == doctest::Approx(1.0));
    CHECK_FALSE(has_uncertainty(s));
}

TEST_CASE("block pair keeps uncertainty but not full complementarity") {
    const auto ex2 = fixture_quantum("ex2");
    CHECK(quantum_has_uncertainty(ex2.a, ex2.b));
    CHECK_FALSE(quantum_fully_complementary(ex2.basis_a, ex2.basis_b));
    CHECK(quantum_single_outcome_complementary(ex2.basis_a, ex2.basis_b));
}

TEST_CASE("five-dimensional pair: fully complementary, strong uncertainty fails") {
    const auto app_b = fixture_quantum("appendix-b");
    CHECK(overlap_matrix(app_b.basis_a, app_b.basis_b)[0][0] ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(quantum_fully_complementary(app_b.basis_a, app_b.basis_b));
    CHECK_FALSE(quantum_strong_uncertainty(app_b.a, app_b.b));

    // the witness state is deterministic for the {0,1,2}|{3,4} merges
    const CVec w = appendix_b_witness_state();
    const auto ca = coarse_grain(app_b.a, {0, 0, 0, 1, 1}, 2);
    const auto cb = coarse_grain(app_b.b, {0, 0, 0, 1, 1}, 2);
    CHECK(born_stats(ca, CMat::outer(w))[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(born_stats(cb, CMat::outer(w))[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("measurement validation catches bad inputs") {
    CHECK_THROWS_AS(ProjectiveMeasurement::from_basis({ket(2, 0), ket(2, 0)}),
                    std::invalid_argument);
    CMat half = CMat::identity(2).scaled(0.5);
    CHECK_THROWS_AS(ProjectiveMeasurement::from_projectors({half, half}),
                    std::invalid_argument);
}
