#include "fvw/wigner.hpp"
#include "fvw/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fvw {

namespace {

constexpr double pi = std::numbers::pi;

// staggered wavefunction indices for midpoint k, transfer m:
// p1 = p_k + P_m/2 -> refined index 2k + (m - n/2)
// p2 = p_k - P_m/2 -> refined index 2k - (m - n/2)
inline bool staggered(int n, int k, int m, int& u1, int& u2) {
    u1 = 2 * k + m - n / 2;
    u2 = 2 * k - m + n / 2;
    return u1 >= 0 && u1 < 2 * n && u2 >= 0 && u2 < 2 * n;
}

} // namespace

WignerComponents fv_wigner_components(const FVState& s) {
    if (s.rep != Rep::FV)
        throw std::invalid_argument("wigner: state must be in FV representation");
    const PhaseSpaceGrid& g = s.grid;
    const int n = g.n;
    const CVec fp = upsample2(s.psi_plus);
    const CVec fm = upsample2(s.psi_minus);

    WignerComponents w;
    w.grid = g;
    w.c_pp = CMat::Zero(n, n);
    w.c_mm = CMat::Zero(n, n);
    w.c_pm = CMat::Zero(n, n);
    w.c_mp = CMat::Zero(n, n);

    const bool has_p = s.psi_plus.cwiseAbs().maxCoeff() > 0;
    const bool has_m = s.psi_minus.cwiseAbs().maxCoeff() > 0;

    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            int u1, u2;
            if (!staggered(n, k, m, u1, u2)) continue;
            auto [eps, chi] = epsilon_chi(g, g.p_half(u1), g.p_half(u2));
            if (has_p) w.c_pp(k, m) = eps * std::conj(fp[u1]) * fp[u2];
            if (has_m) w.c_mm(k, m) = eps * std::conj(fm[u1]) * fm[u2];
            if (has_p && has_m) {
                w.c_pm(k, m) = chi * std::conj(fp[u1]) * fm[u2];
                w.c_mp(k, m) = -chi * std::conj(fm[u1]) * fp[u2];
            }
        }
    return w;
}

CMat wigner_field(const WignerComponents& w, int al, int be) {
    const PhaseSpaceGrid& g = w.grid;
    const CMat& c = (al == 0) ? (be == 0 ? w.c_pp : w.c_pm)
                              : (be == 0 ? w.c_mp : w.c_mm);
    // w(k,j) = dp/(2 pi hbar) sum_m c(k,m) e^{-i P_m q_j/hbar}; the sum is
    // the q_to_P bilinear with the roles of j and m exchanged
    CMat f = transform_q_to_P(g, c) / g.dq;
    return f * (g.dp / (2.0 * pi * g.hbar));
}

CMat field_to_coeffs(const PhaseSpaceGrid& g, const CMat& field) {
    // c(k,m) = sum_j w(k,j) e^{+i P_m q_j/hbar} dq
    return transform_q_to_P(g, CMat(field.conjugate())).conjugate();
}

WignerComponents components_from_fields(const PhaseSpaceGrid& g,
                                        const CMat& w_pp, const CMat& w_mm,
                                        const CMat& w_pm, const CMat& w_mp) {
    WignerComponents w;
    w.grid = g;
    w.c_pp = field_to_coeffs(g, w_pp);
    w.c_mm = field_to_coeffs(g, w_mm);
    w.c_pm = field_to_coeffs(g, w_pm);
    w.c_mp = field_to_coeffs(g, w_mp);
    return w;
}

WignerComponents evolve_components(const WignerComponents& w, double t) {
    const PhaseSpaceGrid& g = w.grid;
    const int n = g.n;
    WignerComponents out = w;
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            int u1, u2;
            if (!staggered(n, k, m, u1, u2)) continue;
            const double e1 = energy(g, g.p_half(u1));
            const double e2 = energy(g, g.p_half(u2));
            const double a = (e1 - e2) * t / g.hbar;
            const double b = (e1 + e2) * t / g.hbar;
            const cd ph_even(std::cos(a), std::sin(a));
            const cd ph_odd(std::cos(b), std::sin(b));
            out.c_pp(k, m) *= ph_even;
            out.c_mm(k, m) *= std::conj(ph_even);
            out.c_pm(k, m) *= ph_odd;
            out.c_mp(k, m) *= std::conj(ph_odd);
        }
    return out;
}

RVec momentum_marginal(const WignerComponents& w) {
    const int n = w.grid.n;
    RVec m(n);
    for (int k = 0; k < n; ++k)
        m[k] = (w.c_pp(k, n / 2) + w.c_mm(k, n / 2)).real();
    return m;
}

RVec coordinate_quasidensity(const WignerComponents& w) {
    CMat even = wigner_field(w, 0, 0) + wigner_field(w, 1, 1);
    const int n = w.grid.n;
    RVec rho(n);
    for (int j = 0; j < n; ++j)
        rho[j] = (even.col(j).sum() * w.grid.dp).real();
    return rho;
}

double constraint_residual(const WignerComponents& w) {
    const PhaseSpaceGrid& g = w.grid;
    const int n = g.n;
    double num = 0, den = 0;
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            int u1, u2;
            if (!staggered(n, k, m, u1, u2)) continue;
            const double e1 = energy(g, g.p_half(u1));
            const double e2 = energy(g, g.p_half(u2));
            const cd even = (e1 - e2) * (e1 - e2) * w.c_pp(k, m) * w.c_mm(k, m);
            const cd odd = (e1 + e2) * (e1 + e2) * w.c_pm(k, m) * w.c_mp(k, m);
            num = std::max(num, std::abs(even + odd));
            den = std::max(den, std::max(std::abs(even), std::abs(odd)));
        }
    if (den < 1e-300) return 0.0; // no cross-charge content at all
    return num / den;
}

std::pair<double, double> reality_report(const WignerComponents& w) {
    CMat wpp = wigner_field(w, 0, 0);
    CMat wmm = wigner_field(w, 1, 1);
    CMat wpm = wigner_field(w, 0, 1);
    CMat wmp = wigner_field(w, 1, 0);
    double im_even = std::max(wpp.imag().cwiseAbs().maxCoeff(),
                              wmm.imag().cwiseAbs().maxCoeff());
    double conj_dev = (wmp - wpm.conjugate()).cwiseAbs().maxCoeff();
    return {im_even, conj_dev};
}

WignerComponents mix_components(
    const std::vector<std::pair<double, const WignerComponents*>>& parts) {
    if (parts.empty()) throw std::invalid_argument("mix: empty");
    WignerComponents out;
    out.grid = parts[0].second->grid;
    const int n = out.grid.n;
    out.c_pp = CMat::Zero(n, n);
    out.c_mm = CMat::Zero(n, n);
    out.c_pm = CMat::Zero(n, n);
    out.c_mp = CMat::Zero(n, n);
    for (const auto& [s, wp] : parts) {
        out.c_pp += s * wp->c_pp;
        out.c_mm += s * wp->c_mm;
        out.c_pm += s * wp->c_pm;
        out.c_mp += s * wp->c_mp;
    }
    return out;
}

MatrixSymbol matrix_wigner(const FVState& s) {
    if (s.rep != Rep::Usual)
        throw std::invalid_argument(
            "matrix_wigner: state must be in the usual representation");
    const PhaseSpaceGrid& g = s.grid;
    const int n = g.n;

    // coordinate-space wavefunctions:
    // psi(q_j) = sum_k psi(p_k) e^{+i p_k q_j/hbar} dp / sqrt(2 pi hbar)
    auto to_q = [&](const CVec& f) {
        CVec t = transform_q_to_P(g, CVec(f.conjugate())).conjugate();
        return CVec(t * (g.dp / g.dq) / std::sqrt(2.0 * pi * g.hbar));
    };
    std::array<CVec, 2> psi_q = {to_q(s.psi_plus), to_q(s.psi_minus)};
    std::array<CVec, 2> fine;
    for (int a = 0; a < 2; ++a) fine[a] = upsample2(psi_q[a]);

    // c_ab(j, m) = conj(psi_a(q + Q/2)) psi_b(q - Q/2) on the refined
    // coordinate lattice; W(k,j) = dq/(2 pi hbar) sum_m c e^{+i Q_m p_k/hbar}
    MatrixSymbol W = zero_symbol(g);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CMat c = CMat::Zero(n, n);
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) {
                    int v1, v2;
                    if (!staggered(n, j, m, v1, v2)) continue;
                    c(j, m) = std::conj(fine[a][v1]) * fine[b][v2];
                }
            // plus-sign synthesis along m, output indexed by p_k
            CMat f =
                CMat(transform_q_to_P(g, CMat(c.conjugate())).conjugate()) /
                g.dq;
            // f(j, k): rows coordinate, columns momentum; transpose to (p,q)
            W.at(a, b) = f.transpose() * (g.dq / (2.0 * pi * g.hbar));
        }
    return W;
}

cd average_matrix(const MatrixSymbol& A, const MatrixSymbol& W) {
    const PhaseSpaceGrid& g = A.grid;
    cd acc = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            acc += (A.at(a, b).array() * W.at(b, a).array()).sum();
    return acc * g.dp * g.dq;
}

} // namespace fvw
