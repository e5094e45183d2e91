#include "fvw/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fvw {

namespace {

constexpr double pi = std::numbers::pi;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_pow2(CVec& x, int sign) {
    const int n = static_cast<int>(x.size());
    // bit reversal
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * pi / len;
        const cd wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                cd u = x[i + k];
                cd v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void dft_direct(CVec& x, int sign) {
    const int n = static_cast<int>(x.size());
    CVec y = CVec::Zero(n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            double ang = sign * 2.0 * pi * double(j) * double(k) / n;
            y[k] += x[j] * cd(std::cos(ang), std::sin(ang));
        }
    }
    x = y;
}

// e^{i s P_m q_j / hbar} = phase0 * (-1)^(m+j) * omega^(s m j),
// phase0 = (-1)^(n/2) for even n.
double corner_phase(int n) { return (n / 2) % 2 ? -1.0 : 1.0; }

} // namespace

PhaseSpaceGrid make_grid(int n, double p_max, double hbar, double mass,
                         double c) {
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("grid: n must be even and >= 8");
    if (!(p_max > 0) || !(hbar > 0) || !(mass > 0) || !(c > 0))
        throw std::invalid_argument("grid: physical constants must be positive");
    PhaseSpaceGrid g;
    g.n = n;
    g.p_max = p_max;
    g.hbar = hbar;
    g.mass = mass;
    g.c = c;
    g.dp = 2.0 * p_max / n;
    g.dq = 2.0 * pi * hbar / (n * g.dp);
    g.q_max = 0.5 * n * g.dq;
    if (!std::isfinite(g.dq)) throw std::invalid_argument("grid: overflow");
    return g;
}

void dft(CVec& x, int sign) {
    if (is_pow2(static_cast<int>(x.size())))
        fft_pow2(x, sign);
    else
        dft_direct(x, sign);
}

CVec transform_q_to_P(const PhaseSpaceGrid& g, const CVec& f) {
    const int n = g.n;
    CVec x(n);
    for (int j = 0; j < n; ++j) x[j] = (j % 2 ? -f[j] : f[j]);
    dft(x, -1);
    const double ph0 = corner_phase(n);
    CVec F(n);
    for (int m = 0; m < n; ++m)
        F[m] = ph0 * (m % 2 ? -1.0 : 1.0) * x[m] * g.dq;
    return F;
}

CVec transform_P_to_q(const PhaseSpaceGrid& g, const CVec& F) {
    const int n = g.n;
    const double ph0 = corner_phase(n);
    CVec x(n);
    for (int m = 0; m < n; ++m)
        x[m] = ph0 * (m % 2 ? -1.0 : 1.0) * F[m];
    dft(x, +1);
    CVec f(n);
    const double scale = 1.0 / (n * g.dq);
    for (int j = 0; j < n; ++j)
        f[j] = (j % 2 ? -x[j] : x[j]) * scale;
    return f;
}

CMat transform_q_to_P(const PhaseSpaceGrid& g, const CMat& f) {
    CMat F(f.rows(), f.cols());
    for (int k = 0; k < f.rows(); ++k) {
        CVec row = f.row(k).transpose();
        F.row(k) = transform_q_to_P(g, row).transpose();
    }
    return F;
}

CMat transform_P_to_q(const PhaseSpaceGrid& g, const CMat& F) {
    CMat f(F.rows(), F.cols());
    for (int k = 0; k < F.rows(); ++k) {
        CVec row = F.row(k).transpose();
        f.row(k) = transform_P_to_q(g, row).transpose();
    }
    return f;
}

cd quadrature(const CVec& f, double cell) { return f.sum() * cell; }
cd quadrature(const CMat& f, double cell) { return f.sum() * cell; }

CVec upsample2(const CVec& x) {
    const int n = static_cast<int>(x.size());
    CVec X = x;
    dft(X, -1);
    CVec Y = CVec::Zero(2 * n);
    for (int nu = 0; nu < n / 2; ++nu) Y[nu] = X[nu];
    for (int nu = n / 2 + 1; nu < n; ++nu) Y[nu + n] = X[nu];
    Y[n / 2] = 0.5 * X[n / 2];
    Y[2 * n - n / 2] = 0.5 * X[n / 2];
    dft(Y, +1);
    return Y / double(n); // ifft normalization 1/(2n) times the factor 2
}

CVec shift_minus_half(const CVec& h) {
    const int n = static_cast<int>(h.size());
    CVec H = h;
    dft(H, -1);
    for (int nu = 0; nu < n; ++nu) {
        int f = nu <= n / 2 ? nu : nu - n; // signed frequency
        if (nu == n / 2) {
            H[nu] = 0.0;
            continue;
        }
        double ang = -std::numbers::pi * double(f) / n;
        H[nu] *= cd(std::cos(ang), std::sin(ang));
    }
    dft(H, +1);
    return H / double(n);
}

CVec spectral_deriv_p(const PhaseSpaceGrid& g, const CVec& f, int order) {
    const int n = g.n;
    CVec X = f;
    dft(X, -1);
    const double base = 2.0 * std::numbers::pi / (n * g.dp);
    for (int nu = 0; nu < n; ++nu) {
        int fr = nu <= n / 2 ? nu : nu - n;
        if (nu == n / 2 && order % 2 != 0) {
            X[nu] = 0.0;
            continue;
        }
        X[nu] *= std::pow(cd(0.0, base * fr), order);
    }
    dft(X, +1);
    return X / double(n);
}

CMat spectral_deriv_p(const PhaseSpaceGrid& g, const CMat& f, int order) {
    CMat out(f.rows(), f.cols());
    for (int j = 0; j < f.cols(); ++j) {
        CVec col = f.col(j);
        out.col(j) = spectral_deriv_p(g, col, order);
    }
    return out;
}

CMat spectral_deriv_q(const PhaseSpaceGrid& g, const CMat& f, int order) {
    const int n = g.n;
    CMat out(f.rows(), f.cols());
    const double base = 2.0 * std::numbers::pi / (n * g.dq);
    for (int k = 0; k < f.rows(); ++k) {
        CVec row = f.row(k).transpose();
        dft(row, -1);
        for (int nu = 0; nu < n; ++nu) {
            int fr = nu <= n / 2 ? nu : nu - n;
            if (nu == n / 2 && order % 2 != 0) {
                row[nu] = 0.0;
                continue;
            }
            row[nu] *= std::pow(cd(0.0, base * fr), order);
        }
        dft(row, +1);
        out.row(k) = row.transpose() / double(n);
    }
    return out;
}

} // namespace fvw
