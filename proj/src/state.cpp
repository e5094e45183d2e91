#include "fvw/state.hpp"
#include "fvw/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fvw {

FVState make_gaussian(const PhaseSpaceGrid& g, double sigma_p2, int charge,
                      double p_center, double q_center) {
    if (!(sigma_p2 > 0))
        throw std::invalid_argument("gaussian: sigma_p2 must be positive");
    if (charge != 1 && charge != -1)
        throw std::invalid_argument("gaussian: charge must be +1 or -1");

    const double sigma = std::sqrt(sigma_p2);
    // window honesty: both the p tail and the conjugate q tail (width
    // hbar/(2 sigma)) must be below the decay floor
    const double p_margin = g.p_max - std::abs(p_center);
    const double sigma_q = g.hbar / (2.0 * sigma);
    const double q_margin = g.q_max - std::abs(q_center);
    const double amp = std::pow(2.0 * std::numbers::pi * sigma_p2, -0.25);
    if (p_margin <= 0 ||
        amp * std::exp(-p_margin * p_margin / (4.0 * sigma_p2)) > 1e-10)
        throw std::invalid_argument("gaussian: momentum tail exceeds window");
    const double qamp = std::pow(2.0 * std::numbers::pi * sigma_q * sigma_q, -0.25);
    if (q_margin <= 0 ||
        qamp * std::exp(-q_margin * q_margin / (4.0 * sigma_q * sigma_q)) > 1e-10)
        throw std::invalid_argument("gaussian: coordinate tail exceeds window");

    CVec psi(g.n);
    for (int k = 0; k < g.n; ++k) {
        const double p = g.p(k);
        const double mag =
            amp * std::exp(-(p - p_center) * (p - p_center) / (4.0 * sigma_p2));
        const double ph = -q_center * p / g.hbar;
        psi[k] = mag * cd(std::cos(ph), std::sin(ph));
    }
    // renormalize on the grid so the discrete norm is exactly 1
    psi /= std::sqrt(psi.squaredNorm() * g.dp);

    FVState s;
    s.grid = g;
    s.rep = Rep::FV;
    if (charge > 0) {
        s.psi_plus = psi;
        s.psi_minus = CVec::Zero(g.n);
    } else {
        s.psi_plus = CVec::Zero(g.n);
        s.psi_minus = psi;
    }
    return s;
}

FVState to_fv(const FVState& s) {
    if (s.rep != Rep::Usual)
        throw std::invalid_argument("to_fv: state is not in the usual representation");
    FVState out = s;
    out.rep = Rep::FV;
    for (int k = 0; k < s.grid.n; ++k) {
        Mat2 u = U_matrix(s.grid, s.grid.p(k));
        Eigen::Vector2cd v(s.psi_plus[k], s.psi_minus[k]);
        Eigen::Vector2cd r = u * v;
        out.psi_plus[k] = r[0];
        out.psi_minus[k] = r[1];
    }
    return out;
}

FVState from_fv(const FVState& s) {
    if (s.rep != Rep::FV)
        throw std::invalid_argument("from_fv: state is not in the FV representation");
    FVState out = s;
    out.rep = Rep::Usual;
    for (int k = 0; k < s.grid.n; ++k) {
        Mat2 u = U_inverse(s.grid, s.grid.p(k));
        Eigen::Vector2cd v(s.psi_plus[k], s.psi_minus[k]);
        Eigen::Vector2cd r = u * v;
        out.psi_plus[k] = r[0];
        out.psi_minus[k] = r[1];
    }
    return out;
}

FVState evolve_free(const FVState& s, double t) {
    if (s.rep != Rep::FV)
        throw std::invalid_argument("evolve_free: state must be in FV representation");
    FVState out = s;
    for (int k = 0; k < s.grid.n; ++k) {
        const double ph = energy(s.grid, s.grid.p(k)) * t / s.grid.hbar;
        out.psi_plus[k] *= cd(std::cos(ph), -std::sin(ph));
        out.psi_minus[k] *= cd(std::cos(ph), std::sin(ph));
    }
    return out;
}

double charge_norm(const FVState& s) {
    return (s.psi_plus.squaredNorm() - s.psi_minus.squaredNorm()) * s.grid.dp;
}

double positive_norm(const FVState& s) {
    return (s.psi_plus.squaredNorm() + s.psi_minus.squaredNorm()) * s.grid.dp;
}

FVState normalized_positive(const FVState& s) {
    FVState out = s;
    const double nn = std::sqrt(positive_norm(s));
    if (nn == 0) throw std::invalid_argument("normalize: zero state");
    out.psi_plus /= nn;
    out.psi_minus /= nn;
    return out;
}

} // namespace fvw
