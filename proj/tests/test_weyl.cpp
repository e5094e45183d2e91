#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fvw/poly.hpp"
#include "fvw/weyl.hpp"

using namespace fvw;

namespace {

// phase-space Gaussian bump, well localized inside the window
CMat bump(const PhaseSpaceGrid& g, double p0, double q0, double wp,
          double wq, cd amp = 1.0) {
    CMat f(g.n, g.n);
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) {
            const double dp = (g.p(k) - p0) / wp;
            const double dq = (g.q(j) - q0) / wq;
            f(k, j) = amp * std::exp(-0.5 * (dp * dp + dq * dq));
        }
    return f;
}

double kernel_diff(const OperatorKernel& A, const OperatorKernel& B) {
    double m = 0;
    for (int i = 0; i < 4; ++i)
        m = std::max(m, (A.k[i] - B.k[i]).cwiseAbs().maxCoeff());
    return m;
}

} // namespace

TEST_CASE("scalar symbol <-> kernel round trip") {
    auto g = make_grid(64, 8.0);
    CMat A = bump(g, 0.3, -1.0, 0.8, 1.2, cd(1.0, 0.3));
    CMat K = scalar_symbol_to_kernel(g, A);
    CMat back = scalar_kernel_to_symbol(g, K);
    CHECK((back - A).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("constant symbol gives the identity kernel over dp") {
    auto g = make_grid(64, 8.0);
    CMat one = CMat::Constant(g.n, g.n, 1.0);
    CMat K = scalar_symbol_to_kernel(g, one);
    for (int k1 = 0; k1 < g.n; ++k1)
        for (int k2 = 0; k2 < g.n; ++k2) {
            cd expect = (k1 == k2) ? cd(1.0 / g.dp) : cd(0.0);
            CHECK(std::abs(K(k1, k2) - expect) < 1e-10 / g.dp);
        }
}

TEST_CASE("f(p) symbol gives a diagonal kernel") {
    auto g = make_grid(64, 8.0);
    CMat A(g.n, g.n);
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) A(k, j) = std::exp(-g.p(k) * g.p(k));
    CMat K = scalar_symbol_to_kernel(g, A);
    for (int k1 = 0; k1 < g.n; ++k1)
        for (int k2 = 0; k2 < g.n; ++k2) {
            cd expect = (k1 == k2) ? A(k1, 0) / g.dp : cd(0.0);
            CHECK(std::abs(K(k1, k2) - expect) < 1e-10 / g.dp);
        }
}

TEST_CASE("star product equals kernel composition") {
    auto g = make_grid(64, 8.0);
    MatrixSymbol A = zero_symbol(g);
    A.at(0, 0) = bump(g, 0.3, 0.5, 0.8, 1.0);
    A.at(0, 1) = bump(g, -0.4, 0.0, 0.8, 0.9, cd(0.2, 0.1));
    A.at(1, 0) = bump(g, 0.0, -0.7, 0.7, 1.3, cd(0.0, -0.4));
    A.at(1, 1) = bump(g, 0.2, 0.1, 0.8, 1.0, -0.7);
    MatrixSymbol B = zero_symbol(g);
    B.at(0, 0) = bump(g, -0.2, 0.4, 0.8, 1.1, cd(0.5, 0.5));
    B.at(1, 1) = bump(g, 0.4, -0.3, 0.8, 1.0);

    OperatorKernel KA = symbol_to_kernel(A);
    OperatorKernel KB = symbol_to_kernel(B);
    OperatorKernel comp = compose(KA, KB);
    OperatorKernel via_star = symbol_to_kernel(star_product(A, B));
    // kernels carry a 1/dp density factor; compare in symbol units
    CHECK(kernel_diff(comp, via_star) * g.dp < 1e-10);

    // symbol route round trip of the composed kernel
    MatrixSymbol S = kernel_to_symbol(comp);
    OperatorKernel back = symbol_to_kernel(S);
    CHECK(kernel_diff(comp, back) * g.dp < 1e-10);
}

TEST_CASE("star product is associative") {
    auto g = make_grid(64, 8.0);
    MatrixSymbol A = scalar_symbol(g, bump(g, 0.3, 0.5, 0.8, 1.0));
    MatrixSymbol B = zero_symbol(g);
    B.at(0, 0) = bump(g, -0.2, 0.0, 0.8, 0.9);
    B.at(0, 1) = bump(g, 0.1, 0.3, 0.8, 1.0, cd(0, 0.5));
    B.at(1, 0) = B.at(0, 1).conjugate();
    B.at(1, 1) = bump(g, 0.4, -0.2, 0.8, 1.2);
    MatrixSymbol C = scalar_symbol(g, bump(g, 0.0, -0.5, 0.8, 1.0, cd(0.3, 0.7)));

    MatrixSymbol lhs = star_product(star_product(A, B), C);
    MatrixSymbol rhs = star_product(A, star_product(B, C));
    CHECK(sym_max_abs(sym_add(lhs, rhs, 1.0, -1.0)) < 1e-10);
}

TEST_CASE("identity symbol is a star unit") {
    auto g = make_grid(64, 8.0);
    MatrixSymbol one = scalar_symbol(g, CMat::Constant(g.n, g.n, 1.0));
    MatrixSymbol A = zero_symbol(g);
    A.at(0, 0) = bump(g, 0.3, 0.5, 0.8, 1.0);
    A.at(1, 1) = bump(g, -0.1, 0.2, 0.8, 0.8, cd(0.4, 0.1));
    CHECK(sym_max_abs(sym_add(star_product(one, A), A, 1.0, -1.0)) < 1e-10);
    CHECK(sym_max_abs(sym_add(star_product(A, one), A, 1.0, -1.0)) < 1e-10);
}

TEST_CASE("moyal bracket of commuting scalar symbols approaches poisson") {
    // scalar symbols commute, so the classical limit is the plain Poisson
    // bracket and the remainder is O(hbar^2)
    auto run = [](double hbar) {
        auto g = make_grid(128, 8.0, hbar);
        MatrixSymbol A = scalar_symbol(g, bump(g, 0.0, 0.0, 1.0, 0.6));
        MatrixSymbol B = scalar_symbol(g, bump(g, 0.4, 0.5, 0.9, 0.7));
        MatrixSymbol d = sym_add(moyal_bracket(A, B),
                                 classical_limit_bracket(A, B), 1.0, -1.0);
        return sym_max_abs(d);
    };
    const double e1 = run(0.5), e2 = run(0.25);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("hamiltonian symbol layout") {
    auto g = make_grid(16, 4.0, 1.0, 2.0, 3.0);
    RVec phi = RVec::Zero(g.n), a = RVec::Zero(g.n);
    phi[3] = 1.5;
    MatrixSymbol H = hamiltonian_symbol(g, phi, a);
    const double kin = g.p(5) * g.p(5) / (2.0 * g.mass);
    const double mc2 = g.mass * g.c * g.c;
    CHECK(H.at(0, 0)(5, 3) == cd(kin + mc2 + 1.5));
    CHECK(H.at(0, 1)(5, 3) == cd(kin));
    CHECK(H.at(1, 0)(5, 3) == cd(-kin));
    CHECK(H.at(1, 1)(5, 3) == cd(-kin - mc2 + 1.5));

    RVec bad = RVec::Zero(g.n - 1);
    CHECK_THROWS_AS(hamiltonian_symbol(g, bad, a), std::invalid_argument);
}

TEST_CASE("polynomial star identities") {
    const double hbar = 0.7;
    PolySymbol p = PolySymbol::p_sym();
    PolySymbol q = PolySymbol::q_sym();

    // p * q = p q - i hbar/2, so {p,q}_M = -1 with no grid error at all
    PolySymbol pq = star_poly(p, q, hbar);
    CHECK(std::abs(pq.term(1, 1)(0, 0) - cd(1.0)) == 0.0);
    CHECK(std::abs(pq.term(0, 0)(0, 0) - cd(0, -0.5 * hbar)) == 0.0);

    PolySymbol m = moyal_poly(p, q, hbar);
    CHECK(std::abs(m.term(0, 0)(0, 0) - cd(-1.0)) < 1e-15);
    CHECK(std::abs(m.term(1, 1)(0, 0)) == 0.0);
    CHECK(std::abs(m.term(1, 0)(0, 0)) == 0.0);
    CHECK(std::abs(m.term(0, 1)(0, 0)) == 0.0);

    // p^2 * q^2 = p^2 q^2 - 2 i hbar p q - hbar^2/2
    PolySymbol p2 = p.mul(p), q2 = q.mul(q);
    PolySymbol s = star_poly(p2, q2, hbar);
    CHECK(std::abs(s.term(2, 2)(0, 0) - cd(1.0)) < 1e-15);
    CHECK(std::abs(s.term(1, 1)(0, 0) - cd(0, -2.0 * hbar)) < 1e-15);
    CHECK(std::abs(s.term(0, 0)(0, 0) - cd(-0.5 * hbar * hbar)) < 1e-15);
}

TEST_CASE("polynomial evaluation and calculus") {
    PolySymbol f = PolySymbol::zero();
    f.set(2, 1, Mat2::Identity());       // p^2 q
    f.set(0, 0, 3.0 * Mat2::Identity()); // + 3
    CHECK(std::abs(f.eval(2.0, -1.0)(0, 0) - cd(-1.0)) < 1e-15);
    CHECK(std::abs(f.d_dp().eval(2.0, -1.0)(0, 0) - cd(-4.0)) < 1e-15);
    CHECK(std::abs(f.d_dq().eval(2.0, -1.0)(0, 0) - cd(4.0)) < 1e-15);
}

TEST_CASE("charge invariance predicate") {
    auto g = make_grid(16, 4.0);
    MatrixSymbol s = scalar_symbol(g, CMat::Random(g.n, g.n));
    CHECK(s.charge_invariant());
    s.at(0, 1)(0, 0) = 1e-3;
    CHECK_FALSE(s.charge_invariant());
    CHECK(s.charge_invariant(1e-2));
}
