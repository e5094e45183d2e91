#include "fvw/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fvw {

namespace {

constexpr double pi = std::numbers::pi;

void check_same_grid(const PhaseSpaceGrid& a, const PhaseSpaceGrid& b) {
    if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

} // namespace

bool MatrixSymbol::charge_invariant(double tol) const {
    double off = std::max(at(0, 1).cwiseAbs().maxCoeff(),
                          at(1, 0).cwiseAbs().maxCoeff());
    double diag = (at(0, 0) - at(1, 1)).cwiseAbs().maxCoeff();
    return off <= tol && diag <= tol;
}

MatrixSymbol scalar_symbol(const PhaseSpaceGrid& g, const CMat& field) {
    MatrixSymbol s;
    s.grid = g;
    s.at(0, 0) = field;
    s.at(1, 1) = field;
    s.at(0, 1) = CMat::Zero(g.n, g.n);
    s.at(1, 0) = CMat::Zero(g.n, g.n);
    return s;
}

MatrixSymbol zero_symbol(const PhaseSpaceGrid& g) {
    MatrixSymbol s;
    s.grid = g;
    for (auto& m : s.a) m = CMat::Zero(g.n, g.n);
    return s;
}

CMat scalar_bref(const PhaseSpaceGrid& g, const CMat& A) {
    const int n = g.n;
    // B(k,m) = sum_j A(k,j) exp(-i P_m q_j/hbar) dq / (2 pi hbar)
    CMat B = transform_q_to_P(g, A) / (2.0 * pi * g.hbar);
    // refine the midpoint axis to the half-step lattice
    CMat Bref(2 * n, n);
    for (int m = 0; m < n; ++m) {
        CVec col = B.col(m);
        Bref.col(m) = upsample2(col);
    }
    return Bref;
}

CMat scalar_symbol_to_kernel(const PhaseSpaceGrid& g, const CMat& A) {
    const int n = g.n;
    CMat Bref = scalar_bref(g, A);
    CMat K = CMat::Zero(n, n);
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) {
            const int d = k1 - k2;
            if (d >= -n / 2 && d < n / 2) K(k1, k2) = Bref(k1 + k2, d + n / 2);
        }
    return K;
}

CMat scalar_kernel_to_symbol(const PhaseSpaceGrid& g, const CMat& K) {
    const int n = g.n;
    // scatter the kernel back into (midpoint, transfer) classes
    CMat Bref = CMat::Zero(2 * n, n);
    for (int k1 = 0; k1 < n; ++k1)
        for (int k2 = 0; k2 < n; ++k2) {
            const int d = k1 - k2;
            if (d >= -n / 2 && d < n / 2) Bref(k1 + k2, d + n / 2) = K(k1, k2);
        }
    // collapse to the integer midpoint lattice: even-transfer columns hold
    // integer-node samples directly, odd-transfer ones sit on half nodes
    CMat B(n, n);
    for (int m = 0; m < n; ++m) {
        if ((m - n / 2) % 2 == 0) {
            for (int k = 0; k < n; ++k) B(k, m) = Bref(2 * k, m);
        } else {
            CVec half(n);
            for (int k = 0; k < n; ++k) half[k] = Bref(2 * k + 1, m);
            B.col(m) = shift_minus_half(half);
        }
    }
    // A(k,j) = 2 pi hbar / (n dq) * sum_m B(k,m) exp(+i P_m q_j / hbar);
    // transform_P_to_q already divides the plain sum by n dq
    return transform_P_to_q(g, CMat(B * (2.0 * pi * g.hbar)));
}

OperatorKernel symbol_to_kernel(const MatrixSymbol& A) {
    OperatorKernel K;
    K.grid = A.grid;
    K.rep = Rep::Usual;
    for (int i = 0; i < 4; ++i)
        K.k[i] = scalar_symbol_to_kernel(A.grid, A.a[i]);
    return K;
}

MatrixSymbol kernel_to_symbol(const OperatorKernel& K) {
    MatrixSymbol A;
    A.grid = K.grid;
    for (int i = 0; i < 4; ++i)
        A.a[i] = scalar_kernel_to_symbol(K.grid, K.k[i]);
    return A;
}

OperatorKernel compose(const OperatorKernel& A, const OperatorKernel& B) {
    check_same_grid(A.grid, B.grid);
    OperatorKernel C;
    C.grid = A.grid;
    C.rep = A.rep;
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
            CMat acc = CMat::Zero(A.grid.n, A.grid.n);
            for (int ga = 0; ga < 2; ++ga)
                acc += A.at(al, ga) * B.at(ga, be);
            C.at(al, be) = acc * A.grid.dp;
        }
    return C;
}

CVec apply(const OperatorKernel& K, const FVState& s, int row, int col) {
    const CVec& v = (col == 0) ? s.psi_plus : s.psi_minus;
    return K.at(row, col) * v * K.grid.dp;
}

MatrixSymbol star_product(const MatrixSymbol& A, const MatrixSymbol& B) {
    check_same_grid(A.grid, B.grid);
    return kernel_to_symbol(compose(symbol_to_kernel(A), symbol_to_kernel(B)));
}

MatrixSymbol moyal_bracket(const MatrixSymbol& A, const MatrixSymbol& B) {
    MatrixSymbol AB = star_product(A, B);
    MatrixSymbol BA = star_product(B, A);
    return sym_add(AB, BA, cd(0, -1) / A.grid.hbar, cd(0, 1) / A.grid.hbar);
}

MatrixSymbol classical_limit_bracket(const MatrixSymbol& A,
                                     const MatrixSymbol& B) {
    check_same_grid(A.grid, B.grid);
    const PhaseSpaceGrid& g = A.grid;
    std::array<CMat, 4> dAp, dAq, dBp, dBq;
    for (int i = 0; i < 4; ++i) {
        dAp[i] = spectral_deriv_p(g, A.a[i]);
        dAq[i] = spectral_deriv_q(g, A.a[i]);
        dBp[i] = spectral_deriv_p(g, B.a[i]);
        dBq[i] = spectral_deriv_q(g, B.a[i]);
    }
    MatrixSymbol out = zero_symbol(g);
    const cd ih = cd(0, 1) * g.hbar;
    for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
            CMat acc = CMat::Zero(g.n, g.n);
            for (int ga = 0; ga < 2; ++ga) {
                // (1/ih)[A,B]
                acc += (A.at(al, ga).cwiseProduct(B.at(ga, be)) -
                        B.at(al, ga).cwiseProduct(A.at(ga, be))) / ih;
                // ({A,B}_P - {B,A}_P)/2 with written factor order kept
                acc += 0.5 * (dAq[2 * al + ga].cwiseProduct(dBp[2 * ga + be]) -
                              dAp[2 * al + ga].cwiseProduct(dBq[2 * ga + be]));
                acc -= 0.5 * (dBq[2 * al + ga].cwiseProduct(dAp[2 * ga + be]) -
                              dBp[2 * al + ga].cwiseProduct(dAq[2 * ga + be]));
            }
            out.at(al, be) = acc;
        }
    return out;
}

MatrixSymbol hamiltonian_symbol(const PhaseSpaceGrid& g, const RVec& phi,
                                const RVec& a_vec) {
    if (phi.size() != g.n || a_vec.size() != g.n)
        throw std::invalid_argument("hamiltonian_symbol: potential size mismatch");
    MatrixSymbol H = zero_symbol(g);
    const double mc2 = g.mass * g.c * g.c;
    for (int k = 0; k < g.n; ++k)
        for (int j = 0; j < g.n; ++j) {
            const double kin = std::pow(g.p(k) - g.e_charge * a_vec[j], 2) /
                               (2.0 * g.mass);
            const double pot = g.e_charge * phi[j];
            // tau3 + i tau2 = [[1,1],[-1,-1]]
            H.at(0, 0)(k, j) = kin + mc2 + pot;
            H.at(0, 1)(k, j) = kin;
            H.at(1, 0)(k, j) = -kin;
            H.at(1, 1)(k, j) = -kin - mc2 + pot;
        }
    return H;
}

MatrixSymbol sym_add(const MatrixSymbol& A, const MatrixSymbol& B, cd ca,
                     cd cb) {
    check_same_grid(A.grid, B.grid);
    MatrixSymbol out;
    out.grid = A.grid;
    for (int i = 0; i < 4; ++i) out.a[i] = ca * A.a[i] + cb * B.a[i];
    return out;
}

double sym_max_abs(const MatrixSymbol& A) {
    double m = 0;
    for (const auto& f : A.a) m = std::max(m, f.cwiseAbs().maxCoeff());
    return m;
}

} // namespace fvw
