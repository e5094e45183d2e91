#pragma once

#include <array>
#include "fvw/grid.hpp"
#include "fvw/kinematics.hpp"
#include "fvw/state.hpp"

namespace fvw {

// 2x2 matrix field over (p,q). Component (a,b) with a,b in {0,1} mapping
// to charge indices {+,-} is stored at index 2*a+b.
struct MatrixSymbol {
    PhaseSpaceGrid grid;
    std::array<CMat, 4> a;

    CMat& at(int al, int be) { return a[2 * al + be]; }
    const CMat& at(int al, int be) const { return a[2 * al + be]; }

    bool charge_invariant(double tol = 0.0) const;
};

// 2x2 matrix kernel over (p1,p2).
struct OperatorKernel {
    PhaseSpaceGrid grid;
    std::array<CMat, 4> k;
    Rep rep = Rep::Usual;

    CMat& at(int al, int be) { return k[2 * al + be]; }
    const CMat& at(int al, int be) const { return k[2 * al + be]; }
};

MatrixSymbol scalar_symbol(const PhaseSpaceGrid& g, const CMat& field);
MatrixSymbol zero_symbol(const PhaseSpaceGrid& g);

// Mixed (p,P) coefficients of a scalar symbol, refined to the half-step
// midpoint lattice: row u in [0,2n) is the midpoint node p_half(u), column
// m the transfer P_m. Includes the 1/(2*pi*hbar) kernel prefactor.
CMat scalar_bref(const PhaseSpaceGrid& g, const CMat& A);

// <p1|A|p2> on the (p1,p2) grid. Entries whose momentum transfer p1-p2
// falls outside [-p_max, p_max) are out of band and set to zero.
CMat scalar_symbol_to_kernel(const PhaseSpaceGrid& g, const CMat& A);
CMat scalar_kernel_to_symbol(const PhaseSpaceGrid& g, const CMat& K);

OperatorKernel symbol_to_kernel(const MatrixSymbol& A);
MatrixSymbol kernel_to_symbol(const OperatorKernel& K);

// Operator composition: charge-index contraction plus dp-weighted momentum
// integration.
OperatorKernel compose(const OperatorKernel& A, const OperatorKernel& B);
CVec apply(const OperatorKernel& K, const FVState& s, int component_row,
           int component_col); // helper: K.at(row,col) acting on one column

MatrixSymbol star_product(const MatrixSymbol& A, const MatrixSymbol& B);
MatrixSymbol moyal_bracket(const MatrixSymbol& A, const MatrixSymbol& B);

// (1/(i*hbar))[A,B] + ({A,B}_P - {B,A}_P)/2 with matrix-ordered Poisson
// brackets evaluated by spectral derivatives.
MatrixSymbol classical_limit_bracket(const MatrixSymbol& A,
                                     const MatrixSymbol& B);

// H = (tau3 + i*tau2) (p - e*A(q))^2 / 2m + tau3 m c^2 + e*phi(q) I.
MatrixSymbol hamiltonian_symbol(const PhaseSpaceGrid& g, const RVec& phi,
                                const RVec& a_vec);

MatrixSymbol sym_add(const MatrixSymbol& A, const MatrixSymbol& B,
                     cd ca = 1.0, cd cb = 1.0);
double sym_max_abs(const MatrixSymbol& A);

} // namespace fvw
