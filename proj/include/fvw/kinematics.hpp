#pragma once

#include <utility>
#include "fvw/grid.hpp"

namespace fvw {

using Mat2 = Eigen::Matrix2cd;

Mat2 id2();
Mat2 tau1();
Mat2 tau2();
Mat2 tau3();

double energy(const PhaseSpaceGrid& g, double p);

// (eps, chi) = ((E1+E2), (E1-E2)) / (2*sqrt(E1*E2)); eps^2 - chi^2 = 1.
std::pair<double, double> epsilon_chi(const PhaseSpaceGrid& g, double p1,
                                      double p2);

// R = eps*I + chi*tau1, the even/odd weight of a charge-invariant kernel.
Mat2 R_matrix(const PhaseSpaceGrid& g, double p1, double p2);
Mat2 R_inverse(const PhaseSpaceGrid& g, double p1, double p2);

// G = E(p)^2 / (2*sqrt(E(p1)*E(p2))) * (tau3 + i*tau2); nilpotent.
Mat2 G_fn(const PhaseSpaceGrid& g, double p1, double p, double p2);

// Diagonalizing transform of the two-component free Hamiltonian.
Mat2 U_matrix(const PhaseSpaceGrid& g, double p);
Mat2 U_inverse(const PhaseSpaceGrid& g, double p);

// Energy table over the grid nodes, shared by the modules that stagger
// their arguments: energies at half nodes are evaluated analytically.
struct Kinematics {
    const PhaseSpaceGrid grid;
    RVec E_nodes; // E(p_k)

    explicit Kinematics(const PhaseSpaceGrid& g);
};

} // namespace fvw
