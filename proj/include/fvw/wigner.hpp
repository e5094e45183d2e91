#pragma once

#include "fvw/state.hpp"
#include "fvw/weyl.hpp"

namespace fvw {

// Four-component Wigner data held in the mixed (p,P) representation:
// c_ab(k,m) is the coefficient at midpoint p_k and transfer P_m, built from
// wavefunction values on the half-step lattice. Real-space fields are
// synthesized on demand:
//   w(k,j) = dp/(2*pi*hbar) * sum_m c(k,m) exp(-i P_m q_j / hbar).
//
// Sign conventions: the even coefficients carry eps and are positive for
// both charge signs (the antiparticle metric sign is dropped so that the
// even part integrates to the positive-definite norm); c_mp carries -chi
// so that w_mp = conj(w_pm) holds.
struct WignerComponents {
    PhaseSpaceGrid grid;
    CMat c_pp, c_mm, c_pm, c_mp;
};

WignerComponents fv_wigner_components(const FVState& s);

CMat wigner_field(const WignerComponents& w, int al, int be);
CMat field_to_coeffs(const PhaseSpaceGrid& g, const CMat& field);
WignerComponents components_from_fields(const PhaseSpaceGrid& g,
                                        const CMat& w_pp, const CMat& w_mm,
                                        const CMat& w_pm, const CMat& w_mp);

// Exact free propagation: even coefficients rotate with E1-E2 phases,
// odd ones with E1+E2, at the staggered half-node energies. Matches the
// wavefunction route fv_wigner_components(evolve_free(s,t)).
WignerComponents evolve_components(const WignerComponents& w, double t);

RVec momentum_marginal(const WignerComponents& w);     // over p
RVec coordinate_quasidensity(const WignerComponents& w); // over q

// Relative residual of the pure-state coupling between even and odd
// coefficient products; 0 is reported when the odd content is negligible.
double constraint_residual(const WignerComponents& w);

// (max |Im w_even|, max |w_mp - conj(w_pm)|)
std::pair<double, double> reality_report(const WignerComponents& w);

// Convex combination of component sets (mixtures live at this level).
WignerComponents mix_components(
    const std::vector<std::pair<double, const WignerComponents*>>& parts);

// Standard matrix-valued Wigner transform of a state given in the usual
// representation, built over the coordinate grid.
MatrixSymbol matrix_wigner(const FVState& s);

// tr of the phase-space pairing of a matrix symbol with a matrix Wigner
// function.
cd average_matrix(const MatrixSymbol& A, const MatrixSymbol& W);

} // namespace fvw
