#include "fvw/fv_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace fvw {

namespace {

enum class Weight { Full, Even, Odd };

OperatorKernel assemble(const PhaseSpaceGrid& g, const CMat& A, Weight w) {
    const int n = g.n;
    CMat Bref = scalar_bref(g, A);
    OperatorKernel K;
    K.grid = g;
    K.rep = Rep::FV;
    for (auto& m : K.k) m = CMat::Zero(n, n);
    for (int k1 = 0; k1 < n; ++k1) {
        const double p1 = g.p(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const int d = k1 - k2;
            if (d < -n / 2 || d >= n / 2) continue;
            const cd b = Bref(k1 + k2, d + n / 2);
            auto [eps, chi] = epsilon_chi(g, p1, g.p(k2));
            if (w != Weight::Odd) {
                K.at(0, 0)(k1, k2) += eps * b;
                K.at(1, 1)(k1, k2) += eps * b;
            }
            if (w != Weight::Even) {
                K.at(0, 1)(k1, k2) += chi * b;
                K.at(1, 0)(k1, k2) += chi * b;
            }
        }
    }
    return K;
}

} // namespace

OperatorKernel fv_kernel(const PhaseSpaceGrid& g, const CMat& A) {
    return assemble(g, A, Weight::Full);
}

OperatorKernel even_kernel(const PhaseSpaceGrid& g, const CMat& A) {
    return assemble(g, A, Weight::Even);
}

OperatorKernel odd_kernel(const PhaseSpaceGrid& g, const CMat& A) {
    return assemble(g, A, Weight::Odd);
}

CMat reconstruct_symbol(const OperatorKernel& K, ReconstructMode mode) {
    const PhaseSpaceGrid& g = K.grid;
    const int n = g.n;
    CMat scalar = CMat::Zero(n, n);
    const double chi_floor = 1e-12;
    bool any_odd = false;
    for (int k1 = 0; k1 < n; ++k1) {
        const double p1 = g.p(k1);
        for (int k2 = 0; k2 < n; ++k2) {
            const int d = k1 - k2;
            if (d < -n / 2 || d >= n / 2) continue;
            auto [eps, chi] = epsilon_chi(g, p1, g.p(k2));
            switch (mode) {
            case ReconstructMode::Full:
                // R^-1 K has the scalar transform factor on the diagonal
                scalar(k1, k2) =
                    eps * K.at(0, 0)(k1, k2) - chi * K.at(1, 0)(k1, k2);
                break;
            case ReconstructMode::Even:
                scalar(k1, k2) = K.at(0, 0)(k1, k2) / eps;
                break;
            case ReconstructMode::Odd:
                if (std::abs(chi) > chi_floor) {
                    scalar(k1, k2) = K.at(0, 1)(k1, k2) / chi;
                    if (std::abs(scalar(k1, k2)) > 0) any_odd = true;
                }
                break;
            }
        }
    }
    if (mode == ReconstructMode::Odd && !any_odd)
        throw std::runtime_error(
            "reconstruct: odd kernel has no usable off-diagonal content");
    return scalar_kernel_to_symbol(g, scalar);
}

double even_odd_relation_residual(const PhaseSpaceGrid& g, const CMat& A) {
    OperatorKernel ev = even_kernel(g, A);
    OperatorKernel od = odd_kernel(g, A);
    const int n = g.n;
    double res = 0;
    for (int k1 = 0; k1 < n; ++k1) {
        const double e1 = energy(g, g.p(k1));
        for (int k2 = 0; k2 < n; ++k2) {
            const double e2 = energy(g, g.p(k2));
            const double ratio = (e1 - e2) / (e1 + e2);
            // tau1 * even swaps the rows of the (diagonal) even kernel
            res = std::max(res, std::abs(od.at(0, 1)(k1, k2) -
                                         ratio * ev.at(1, 1)(k1, k2)));
            res = std::max(res, std::abs(od.at(1, 0)(k1, k2) -
                                         ratio * ev.at(0, 0)(k1, k2)));
        }
    }
    return res;
}

OperatorKernel time_derivative_kernel_linear(const PhaseSpaceGrid& g,
                                             const CMat& A) {
    const int n = g.n;
    // exact linear fit in q from two columns, then verify
    const int j0 = 0, j1 = n / 2;
    CVec b = (A.col(j1) - A.col(j0)) / (g.q(j1) - g.q(j0));
    CVec a = A.col(j0) - b * g.q(j0);
    double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
    for (int j = 0; j < n; ++j)
        if (((A.col(j) - (a + b * g.q(j))).cwiseAbs().maxCoeff()) >
            1e-9 * scale)
            throw std::invalid_argument(
                "time_derivative: symbol is not linear in q");

    OperatorKernel K;
    K.grid = g;
    K.rep = Rep::FV;
    for (auto& m : K.k) m = CMat::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double p = g.p(k);
        const double dEdp = g.c * g.c * p / energy(g, p);
        const cd v = b[k] * dEdp / g.dp;
        // tau3 + i tau2 = [[1,1],[-1,-1]]
        K.at(0, 0)(k, k) = v;
        K.at(0, 1)(k, k) = v;
        K.at(1, 0)(k, k) = -v;
        K.at(1, 1)(k, k) = -v;
    }
    return K;
}

OperatorKernel free_hamiltonian_kernel(const PhaseSpaceGrid& g) {
    OperatorKernel K;
    K.grid = g;
    K.rep = Rep::FV;
    for (auto& m : K.k) m = CMat::Zero(g.n, g.n);
    for (int k = 0; k < g.n; ++k) {
        const double e = energy(g, g.p(k)) / g.dp;
        K.at(0, 0)(k, k) = e;
        K.at(1, 1)(k, k) = -e;
    }
    return K;
}

} // namespace fvw
