#pragma once

#include "fvw/weyl.hpp"

namespace fvw {

// Kernels of charge-invariant observables in the representation with
// diagonal free Hamiltonian. The scalar symbol is a complex field over
// (p,q); the matrix weight R = eps*I + chi*tau1 is attached per entry.
OperatorKernel fv_kernel(const PhaseSpaceGrid& g, const CMat& A);
OperatorKernel even_kernel(const PhaseSpaceGrid& g, const CMat& A);
OperatorKernel odd_kernel(const PhaseSpaceGrid& g, const CMat& A);

enum class ReconstructMode { Full, Even, Odd };

// Inverts the three constructors above. Odd-mode division by chi is only
// possible where chi is nonzero on the staggered lattice; the zero-transfer
// column and the zero-midpoint row are unrecoverable from the odd part and
// are filled with zeros.
CMat reconstruct_symbol(const OperatorKernel& K, ReconstructMode mode);

// Max deviation of the odd kernel from (E1-E2)/(E1+E2) * tau1 * even kernel.
double even_odd_relation_residual(const PhaseSpaceGrid& g, const CMat& A);

// For A(p,q) = a(p) + b(p) q: diagonal kernel b(p) E'(p) (tau3+i*tau2)/dp.
// Throws if A is not linear in q.
OperatorKernel time_derivative_kernel_linear(const PhaseSpaceGrid& g,
                                             const CMat& A);

// Kernel of the free Hamiltonian, E(p) tau3 / dp on the diagonal.
OperatorKernel free_hamiltonian_kernel(const PhaseSpaceGrid& g);

} // namespace fvw
