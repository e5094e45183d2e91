#pragma once

#include "fvw/grid.hpp"

namespace fvw {

enum class Rep { FV, Usual };

// Two-component momentum-space wavefunction over the charge index.
// psi_plus is the particle component, psi_minus the antiparticle one.
struct FVState {
    PhaseSpaceGrid grid;
    CVec psi_plus;
    CVec psi_minus;
    Rep rep = Rep::FV;
};

// Gaussian packet exp(-(p-p0)^2/(4*sigma_p2)) * exp(-i*q0*p/hbar) on the
// selected charge component. Throws if the state does not decay below
// 1e-10 at the p or q window boundary.
FVState make_gaussian(const PhaseSpaceGrid& g, double sigma_p2, int charge,
                      double p_center = 0.0, double q_center = 0.0);

FVState to_fv(const FVState& s);   // Usual -> FV (multiply by U(p))
FVState from_fv(const FVState& s); // FV -> Usual

// Free evolution: psi^{+-} <- exp(-+ i E(p) t / hbar) psi^{+-}.
FVState evolve_free(const FVState& s, double t);

// Indefinite (tau3) norm: integral of |psi+|^2 - |psi-|^2.
double charge_norm(const FVState& s);
// Positive-definite norm used to normalize mixed-charge superpositions.
double positive_norm(const FVState& s);

FVState normalized_positive(const FVState& s);

} // namespace fvw
