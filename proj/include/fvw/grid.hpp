#pragma once

#include <complex>
#include <Eigen/Dense>

namespace fvw {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Uniform symmetric momentum grid p_k = -p_max + k*dp together with the
// conjugate coordinate grid. dp*dq*n = 2*pi*hbar, so the discrete q<->P
// transforms below are exactly unitary and the P lattice coincides with
// the p lattice.
struct PhaseSpaceGrid {
    int n = 0;
    double p_max = 0;
    double hbar = 1, mass = 1, c = 1, e_charge = 1;
    double dp = 0, dq = 0, q_max = 0;

    double p(int k) const { return -p_max + k * dp; }
    double q(int j) const { return -q_max + j * dq; }
    // node on the twice-refined momentum lattice (spacing dp/2), u in [0, 2n)
    double p_half(int u) const { return -p_max + 0.5 * dp * u; }

    bool operator==(const PhaseSpaceGrid& o) const {
        return n == o.n && p_max == o.p_max && hbar == o.hbar &&
               mass == o.mass && c == o.c;
    }
};

PhaseSpaceGrid make_grid(int n, double p_max, double hbar = 1.0,
                         double mass = 1.0, double c = 1.0);

// In-place unnormalized DFT: x_k <- sum_j x_j exp(sign*2*pi*i*j*k/n).
// Radix-2 for powers of two, direct evaluation otherwise.
void dft(CVec& x, int sign);

// f spans (p,q): rows are p nodes, columns q nodes. Result spans (p,P) with
// F(k,m) = sum_j f(k,j) exp(-i P_m q_j / hbar) dq. P lattice = p lattice.
CMat transform_q_to_P(const PhaseSpaceGrid& g, const CMat& f);
CMat transform_P_to_q(const PhaseSpaceGrid& g, const CMat& F);

// Same kernel applied along a single axis (column vector over q nodes).
CVec transform_q_to_P(const PhaseSpaceGrid& g, const CVec& f);
CVec transform_P_to_q(const PhaseSpaceGrid& g, const CVec& F);

// Riemann sums; exact for band-limited periodic integrands.
cd quadrature(const CVec& f, double cell);
cd quadrature(const CMat& f, double cell);

// Band-limited refinement of an n-periodic sample vector to 2n samples.
// Even output indices reproduce the input exactly; odd indices are the
// trigonometric interpolant at half-step positions.
CVec upsample2(const CVec& x);

// Spectral translation by -half a sample step (Nyquist bin zeroed).
CVec shift_minus_half(const CVec& h);

// Spectral derivative along the p axis (columns fixed) or of a vector
// sampled on the p nodes. Odd orders zero the Nyquist bin.
CVec spectral_deriv_p(const PhaseSpaceGrid& g, const CVec& f, int order = 1);
CMat spectral_deriv_p(const PhaseSpaceGrid& g, const CMat& f, int order = 1);
CMat spectral_deriv_q(const PhaseSpaceGrid& g, const CMat& f, int order = 1);

} // namespace fvw
