#pragma once

#include <vector>
#include "fvw/wigner.hpp"

namespace fvw {

// Phase-space average of a charge-invariant symbol against the scalar
// Wigner function (sum of the four components).
double average(const PhaseSpaceGrid& g, const CMat& A,
               const WignerComponents& w);

struct MomentReport {
    int order = 0;
    double formula_value = 0; // pseudo-differential route
    double grid_value = 0;    // direct integral of q^n against the even part
};

// n in {1,2,3,4}, single-charge state. Throws when the two routes disagree
// beyond 1e-6 relative (convention guard, not a return value).
MomentReport coordinate_moment(const FVState& s, int n);

// The two terms of the corrected second moment: (usual, correction) with
// <q^2> = usual - correction; correction > 0 for any nonzero state.
std::pair<double, double> second_moment_corrected(const FVState& s);

enum class CriterionPart { Even, Odd };

// Residual of the log-bilinear purity identity on the staggered (p1,p2)
// lattice, finite-difference step = one grid spacing. Entries outside the
// magnitude floor (1e-8 of max) are zero; the odd part also skips a margin
// around the lattice lines where its denominator (E1-E2)^2 vanishes.
RMat purity_criterion_residual(const WignerComponents& w, CriterionPart part);
double purity_criterion_max(const WignerComponents& w, CriterionPart part);

// |<Psi|Phi>|^2 via the eps^-2 / chi^-2 staggered multipliers; symmetric.
double overlap(const WignerComponents& wa, const WignerComponents& wb);

// Left side of the purity inequality; <= 1/(2*pi*hbar), equality iff pure.
double purity_functional(const WignerComponents& w);

struct Fig2Row {
    double sigma_p = 0;
    double dx2_usual = 0;
    double dx2_corrected = 0;
    double reference_dx2 = 0; // hbar^2/(4 sigma_p^2)
    bool ok = true;
};

// One row per sigma^2. The momentum window shrinks with sigma
// (p_max_eff = min(p_max, 16 sigma)) so that narrow packets keep both
// window tails below the decay floor; n stays fixed.
std::vector<Fig2Row> fig2_curve(const std::vector<double>& sigma2_list,
                                const PhaseSpaceGrid& cfg);

// Bisection for the sigma_p where the corrected dispersion changes sign.
double fig2_sign_change(const PhaseSpaceGrid& cfg, double lo = 0.5,
                        double hi = 4.0, double xtol = 1e-6);

} // namespace fvw
