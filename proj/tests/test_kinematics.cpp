#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fvw/kinematics.hpp"

using namespace fvw;

TEST_CASE("pauli-type matrices") {
    CHECK((tau1() * tau1() - id2()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((tau2() * tau2() - id2()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((tau3() * tau3() - id2()).cwiseAbs().maxCoeff() == 0.0);
    Mat2 comm = tau1() * tau2() - tau2() * tau1();
    CHECK((comm - cd(0, 2) * tau3()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("relativistic energy") {
    auto g = make_grid(16, 4.0, 1.0, 2.0, 3.0);
    CHECK(energy(g, 0.0) == doctest::Approx(2.0 * 9.0)); // m c^2
    CHECK(energy(g, 4.0) ==
          doctest::Approx(std::sqrt(4.0 * 81.0 + 9.0 * 16.0)));
}

TEST_CASE("eps chi hyperbolic identity") {
    auto g = make_grid(16, 4.0);
    for (double p1 : {-3.0, 0.0, 0.7, 2.5})
        for (double p2 : {-1.0, 0.4, 3.9}) {
            auto [eps, chi] = epsilon_chi(g, p1, p2);
            CHECK(eps * eps - chi * chi == doctest::Approx(1.0).epsilon(1e-14));
            auto [eps2, chi2] = epsilon_chi(g, p2, p1);
            CHECK(eps2 == doctest::Approx(eps));
            CHECK(chi2 == doctest::Approx(-chi));
        }
}

TEST_CASE("R matrix and its inverse") {
    auto g = make_grid(16, 4.0, 1.0, 0.5, 2.0);
    for (double p1 : {-2.0, 0.3})
        for (double p2 : {1.1, 3.0}) {
            Mat2 r = R_matrix(g, p1, p2);
            Mat2 ri = R_inverse(g, p1, p2);
            CHECK((r * ri - id2()).cwiseAbs().maxCoeff() < 1e-14);
            CHECK(std::abs(r.determinant() - cd(1.0)) < 1e-14);
        }
}

TEST_CASE("G is nilpotent") {
    auto g = make_grid(16, 4.0);
    Mat2 G = G_fn(g, 0.5, 1.0, -0.7);
    CHECK((G * G).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("U diagonalizes the free two-component Hamiltonian") {
    auto g = make_grid(16, 4.0, 1.0, 1.3, 0.8);
    const double mc2 = g.mass * g.c * g.c;
    for (double p : {-3.0, 0.0, 1.7}) {
        const double kin = p * p / (2.0 * g.mass);
        Mat2 H = (tau3() + cd(0, 1) * tau2()) * kin + tau3() * mc2;
        Mat2 D = U_matrix(g, p) * H * U_inverse(g, p);
        Mat2 expect = tau3() * energy(g, p);
        CHECK((D - expect).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((U_matrix(g, p) * U_inverse(g, p) - id2()).cwiseAbs().maxCoeff() <
              1e-14);
    }
}

TEST_CASE("energy table") {
    auto g = make_grid(32, 4.0);
    Kinematics kin(g);
    REQUIRE(kin.E_nodes.size() == g.n);
    for (int k = 0; k < g.n; ++k)
        CHECK(kin.E_nodes[k] == doctest::Approx(energy(g, g.p(k))));
}
