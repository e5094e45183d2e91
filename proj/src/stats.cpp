#include "fvw/stats.hpp"
#include "fvw/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fvw {

namespace {

constexpr double pi = std::numbers::pi;

inline bool staggered(int n, int k, int m, int& u1, int& u2) {
    u1 = 2 * k + m - n / 2;
    u2 = 2 * k - m + n / 2;
    return u1 >= 0 && u1 < 2 * n && u2 >= 0 && u2 < 2 * n;
}

// analytic diagonal derivatives of eps(p,p') with respect to p' at p'=p
double eps_d(const PhaseSpaceGrid& g, double p, int order) {
    const double c = g.c, m = g.mass;
    const double w = c * c * m * m + p * p; // (E/c)^2
    switch (order) {
    case 0: return 1.0;
    case 1: return 0.0;
    case 2: return p * p / (4.0 * w * w);
    case 3: return -3.0 * p * (p - c * m) * (p + c * m) / (4.0 * w * w * w);
    case 4:
        return 3.0 *
               (4.0 * std::pow(c * m, 4) - 40.0 * c * c * m * m * p * p +
                15.0 * std::pow(p, 4)) /
               (16.0 * std::pow(w, 4));
    default: throw std::invalid_argument("moment order out of range");
    }
}

double binom(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const CVec& single_component(const FVState& s) {
    const bool hp = s.psi_plus.cwiseAbs().maxCoeff() > 0;
    const bool hm = s.psi_minus.cwiseAbs().maxCoeff() > 0;
    if (hp == hm)
        throw std::invalid_argument("moment routes need a single-charge state");
    return hp ? s.psi_plus : s.psi_minus;
}

} // namespace

double average(const PhaseSpaceGrid& g, const CMat& A,
               const WignerComponents& w) {
    CMat total = wigner_field(w, 0, 0) + wigner_field(w, 1, 1) +
                 wigner_field(w, 0, 1) + wigner_field(w, 1, 0);
    return (A.array() * total.array()).sum().real() * g.dp * g.dq;
}

MomentReport coordinate_moment(const FVState& s, int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("coordinate_moment: order must be 1..4");
    const PhaseSpaceGrid& g = s.grid;
    const CVec& psi = single_component(s);

    // formula route: <q^n> = int conj(psi) (i hbar)^n
    //                d^n/dp'^n [ psi(p') eps(p,p') ]|_{p'=p} dp
    std::array<CVec, 5> dpsi;
    dpsi[0] = psi;
    for (int j = 1; j <= n; ++j) dpsi[j] = spectral_deriv_p(g, psi, j);
    cd acc = 0;
    for (int k = 0; k < g.n; ++k) {
        cd inner = 0;
        for (int j = 0; j <= n; ++j)
            inner += binom(n, j) * eps_d(g, g.p(k), j) * dpsi[n - j][k];
        acc += std::conj(psi[k]) * inner;
    }
    const cd ihn = std::pow(cd(0, g.hbar), n);
    const double formula = (ihn * acc * cd(g.dp)).real();

    // grid route: direct integral of q^n against the even Wigner part
    WignerComponents w = fv_wigner_components(s);
    CMat even = wigner_field(w, 0, 0) + wigner_field(w, 1, 1);
    double grid_val = 0;
    for (int j = 0; j < g.n; ++j) {
        const double qn = std::pow(g.q(j), n);
        grid_val += qn * even.col(j).sum().real();
    }
    grid_val *= g.dp * g.dq;

    const double scale = std::max({std::abs(grid_val), std::abs(formula), 1e-3});
    if (std::abs(formula - grid_val) > 1e-6 * scale)
        throw std::runtime_error("coordinate_moment: route disagreement");

    return MomentReport{n, formula, grid_val};
}

std::pair<double, double> second_moment_corrected(const FVState& s) {
    const PhaseSpaceGrid& g = s.grid;
    const CVec& psi = single_component(s);
    CVec d1 = spectral_deriv_p(g, psi, 1);
    const double usual = g.hbar * g.hbar * d1.squaredNorm() * g.dp;
    double corr = 0;
    for (int k = 0; k < g.n; ++k) {
        const double p = g.p(k);
        const double e = energy(g, p);
        const double f = g.hbar * g.c * g.c * p / (2.0 * e * e);
        corr += std::norm(psi[k]) * f * f;
    }
    corr *= g.dp;
    return {usual, corr};
}

RMat purity_criterion_residual(const WignerComponents& w, CriterionPart part) {
    const PhaseSpaceGrid& g = w.grid;
    const int n = g.n;
    const CMat* F = nullptr;
    if (part == CriterionPart::Even)
        F = (w.c_pp.cwiseAbs().maxCoeff() >= w.c_mm.cwiseAbs().maxCoeff())
                ? &w.c_pp
                : &w.c_mm;
    else
        F = &w.c_pm;

    const double fmax = F->cwiseAbs().maxCoeff();
    if (fmax <= 0)
        throw std::runtime_error("criterion: component is identically zero");
    const double floor = 1e-8 * fmax;

    // the odd identity's denominator (E1-E2)^2 vanishes on the lattice
    // lines k = n/2 (zero midpoint) and m = n/2 (zero transfer); finite
    // differences of ln chi are unreliable close to them, so a margin of
    // stencils around those lines is excluded
    const int margin = (part == CriterionPart::Odd) ? 8 : 0;

    RMat res = RMat::Zero(n, n);
    bool any = false;
    for (int k = 1; k + 1 < n; ++k)
        for (int m = 1; m + 1 < n; ++m) {
            if (std::abs(k - n / 2) < margin || std::abs(m - n / 2) < margin)
                continue;
            int u1, u2, t1, t2;
            if (!staggered(n, k, m, u1, u2)) continue;
            bool ok = true;
            for (int dk = -1; dk <= 1 && ok; ++dk)
                for (int dm = -1; dm <= 1 && ok; ++dm) {
                    if (!staggered(n, k + dk, m + dm, t1, t2)) ok = false;
                    else if (std::abs((*F)(k + dk, m + dm)) < floor) ok = false;
                }
            if (!ok) continue;

            // d^2 ln F / dp1 dp2 = (1/4) d^2_s - d^2_d on the (k,m) lattice.
            // Second differences of ln F are taken as logs of neighbor
            // ratios, which stay on the principal branch as long as the
            // phase moves less than pi per step.
            const cd f0 = (*F)(k, m);
            const cd fs1 = (*F)(k + 1, m), fs2 = (*F)(k - 1, m);
            const cd fd1 = (*F)(k, m + 1), fd2 = (*F)(k, m - 1);
            const double h2 = g.dp * g.dp;
            const cd d2s = (std::log(fs1 / f0) + std::log(fs2 / f0)) / h2;
            const cd d2d = (std::log(fd1 / f0) + std::log(fd2 / f0)) / h2;
            const cd lhs = 0.25 * d2s - d2d;

            const double p1 = g.p_half(u1), p2 = g.p_half(u2);
            const double e1 = energy(g, p1), e2 = energy(g, p2);
            const double c4 = std::pow(g.c, 4);
            double rhs;
            if (part == CriterionPart::Even)
                rhs = -c4 * p1 * p2 / (e1 * e2 * (e1 + e2) * (e1 + e2));
            else
                rhs = c4 * p1 * p2 / (e1 * e2 * (e1 - e2) * (e1 - e2));
            res(k, m) = std::abs(lhs - rhs);
            any = true;
        }
    if (!any)
        throw std::runtime_error("criterion: probed region is empty");
    return res;
}

double purity_criterion_max(const WignerComponents& w, CriterionPart part) {
    return purity_criterion_residual(w, part).maxCoeff();
}

double overlap(const WignerComponents& wa, const WignerComponents& wb) {
    if (!(wa.grid == wb.grid)) throw std::invalid_argument("overlap: grid mismatch");
    const PhaseSpaceGrid& g = wa.grid;
    const int n = g.n;
    cd acc = 0;
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            int u1, u2;
            if (!staggered(n, k, m, u1, u2)) continue;
            const int mn = (n - m) % n; // coefficient at transfer -P
            auto [eps, chi] = epsilon_chi(g, g.p_half(u1), g.p_half(u2));
            const double ie2 = 1.0 / (eps * eps);
            acc += wa.c_pp(k, mn) * ie2 * wb.c_pp(k, m);
            acc += wa.c_mm(k, mn) * ie2 * wb.c_mm(k, m);
            if (std::abs(chi) > 1e-12) {
                const double ic2 = 1.0 / (chi * chi);
                acc += wa.c_pm(k, mn) * ic2 * wb.c_mp(k, m);
                acc += wa.c_mp(k, mn) * ic2 * wb.c_pm(k, m);
            }
        }
    return (acc * cd(g.dp * g.dp)).real();
}

double purity_functional(const WignerComponents& w) {
    return overlap(w, w) / (2.0 * pi * w.grid.hbar);
}

std::vector<Fig2Row> fig2_curve(const std::vector<double>& sigma2_list,
                                const PhaseSpaceGrid& cfg) {
    std::vector<Fig2Row> rows;
    rows.reserve(sigma2_list.size());
    for (double s2 : sigma2_list) {
        Fig2Row r;
        r.sigma_p = std::sqrt(s2);
        r.reference_dx2 = cfg.hbar * cfg.hbar / (4.0 * s2);
        try {
            const double pme = std::min(cfg.p_max, 16.0 * r.sigma_p);
            PhaseSpaceGrid g =
                make_grid(cfg.n, pme, cfg.hbar, cfg.mass, cfg.c);
            FVState s = make_gaussian(g, s2, +1);
            auto [usual, corr] = second_moment_corrected(s);
            r.dx2_usual = usual;
            r.dx2_corrected = usual - corr;
        } catch (const std::exception&) {
            r.ok = false;
        }
        rows.push_back(r);
    }
    return rows;
}

double fig2_sign_change(const PhaseSpaceGrid& cfg, double lo, double hi,
                        double xtol) {
    auto f = [&](double sigma) {
        auto rows = fig2_curve({sigma * sigma}, cfg);
        if (!rows[0].ok) throw std::runtime_error("fig2: sigma not representable");
        return rows[0].dx2_corrected;
    };
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi > 0)
        throw std::runtime_error("fig2: no sign change in bracket");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (flo * fm <= 0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace fvw
