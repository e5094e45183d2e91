#include "fvw/kinematics.hpp"

#include <cmath>

namespace fvw {

Mat2 id2() { return Mat2::Identity(); }

Mat2 tau1() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 tau2() {
    Mat2 m;
    m << 0, cd(0, -1), cd(0, 1), 0;
    return m;
}

Mat2 tau3() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

double energy(const PhaseSpaceGrid& g, double p) {
    return std::sqrt(g.mass * g.mass * std::pow(g.c, 4) + g.c * g.c * p * p);
}

std::pair<double, double> epsilon_chi(const PhaseSpaceGrid& g, double p1,
                                      double p2) {
    const double e1 = energy(g, p1), e2 = energy(g, p2);
    const double d = 2.0 * std::sqrt(e1 * e2);
    return {(e1 + e2) / d, (e1 - e2) / d};
}

Mat2 R_matrix(const PhaseSpaceGrid& g, double p1, double p2) {
    auto [eps, chi] = epsilon_chi(g, p1, p2);
    return eps * id2() + chi * tau1();
}

Mat2 R_inverse(const PhaseSpaceGrid& g, double p1, double p2) {
    auto [eps, chi] = epsilon_chi(g, p1, p2);
    return eps * id2() - chi * tau1(); // det R = eps^2 - chi^2 = 1
}

Mat2 G_fn(const PhaseSpaceGrid& g, double p1, double p, double p2) {
    const double e = energy(g, p);
    const double s = e * e / (2.0 * std::sqrt(energy(g, p1) * energy(g, p2)));
    return s * (tau3() + cd(0, 1) * tau2());
}

Mat2 U_matrix(const PhaseSpaceGrid& g, double p) {
    const double e = energy(g, p);
    const double mc2 = g.mass * g.c * g.c;
    const double s = 1.0 / (2.0 * std::sqrt(mc2 * e));
    return s * ((e + mc2) * id2() + (e - mc2) * tau1());
}

Mat2 U_inverse(const PhaseSpaceGrid& g, double p) {
    const double e = energy(g, p);
    const double mc2 = g.mass * g.c * g.c;
    const double s = 1.0 / (2.0 * std::sqrt(mc2 * e));
    return s * ((e + mc2) * id2() - (e - mc2) * tau1());
}

Kinematics::Kinematics(const PhaseSpaceGrid& g) : grid(g) {
    E_nodes.resize(g.n);
    for (int k = 0; k < g.n; ++k) E_nodes[k] = energy(g, g.p(k));
}

} // namespace fvw
