#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fvw/kinematics.hpp"
#include "fvw/state.hpp"

using namespace fvw;

TEST_CASE("gaussian normalization and charge") {
    auto g = make_grid(256, 16.0);
    FVState sp = make_gaussian(g, 1.0, +1);
    CHECK(positive_norm(sp) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(charge_norm(sp) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sp.psi_minus.cwiseAbs().maxCoeff() == 0.0);

    FVState sm = make_gaussian(g, 0.5, -1, 0.3, -1.0);
    CHECK(positive_norm(sm) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(charge_norm(sm) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sm.psi_plus.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gaussian window guards") {
    auto g = make_grid(256, 16.0);
    CHECK_THROWS_AS(make_gaussian(g, 0.0, +1), std::invalid_argument);
    CHECK_THROWS_AS(make_gaussian(g, 1.0, 0), std::invalid_argument);
    // momentum tail sticks out of the window
    CHECK_THROWS_AS(make_gaussian(g, 100.0, +1), std::invalid_argument);
    CHECK_THROWS_AS(make_gaussian(g, 1.0, +1, 15.5), std::invalid_argument);
    // conjugate coordinate tail sticks out (sigma_q = 1/(2 sigma_p))
    CHECK_THROWS_AS(make_gaussian(g, 1e-6, +1), std::invalid_argument);
    CHECK_THROWS_AS(make_gaussian(g, 1.0, +1, 0.0, 25.0),
                    std::invalid_argument);
}

TEST_CASE("gaussian phase encodes the coordinate center") {
    auto g = make_grid(256, 16.0);
    FVState s = make_gaussian(g, 1.0, +1, 0.0, 2.0);
    const int k = g.n / 2 + 8;
    const double p = g.p(k);
    cd ratio = s.psi_plus[k] / std::abs(s.psi_plus[k]);
    cd expect = std::exp(cd(0, -2.0 * p / g.hbar));
    CHECK(std::abs(ratio - expect) < 1e-12);
}

TEST_CASE("representation round trip") {
    auto g = make_grid(128, 16.0);
    FVState s = make_gaussian(g, 1.0, +1, 0.5);
    FVState u = from_fv(s);
    CHECK(u.rep == Rep::Usual);
    // the transform mixes the components
    CHECK(u.psi_minus.cwiseAbs().maxCoeff() > 1e-6);
    FVState back = to_fv(u);
    CHECK((back.psi_plus - s.psi_plus).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((back.psi_minus - s.psi_minus).cwiseAbs().maxCoeff() < 1e-13);

    CHECK_THROWS_AS(to_fv(s), std::invalid_argument);
    CHECK_THROWS_AS(from_fv(u), std::invalid_argument);
}

TEST_CASE("free evolution") {
    auto g = make_grid(128, 16.0);
    FVState s = make_gaussian(g, 1.0, +1);
    s.psi_minus = 0.5 * s.psi_plus; // give the lower component content
    FVState e = evolve_free(s, 0.7);
    CHECK(positive_norm(e) == doctest::Approx(positive_norm(s)).epsilon(1e-14));
    const int k = 10;
    const double ph = energy(g, g.p(k)) * 0.7 / g.hbar;
    CHECK(std::abs(e.psi_plus[k] - s.psi_plus[k] * std::exp(cd(0, -ph))) <
          1e-14);
    CHECK(std::abs(e.psi_minus[k] - s.psi_minus[k] * std::exp(cd(0, ph))) <
          1e-14);

    FVState u = from_fv(make_gaussian(g, 1.0, +1));
    CHECK_THROWS_AS(evolve_free(u, 1.0), std::invalid_argument);
}

TEST_CASE("positive normalization of superpositions") {
    auto g = make_grid(128, 16.0);
    FVState a = make_gaussian(g, 1.0, +1);
    FVState b = make_gaussian(g, 1.0, -1);
    FVState s = a;
    s.psi_minus = b.psi_minus;
    FVState nrm = normalized_positive(s);
    CHECK(positive_norm(nrm) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(charge_norm(nrm)) < 1e-12);
}
