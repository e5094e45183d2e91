#include "fvw/poly.hpp"

#include <cmath>

namespace fvw {

namespace {
double binom(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

int PolySymbol::deg_q() const {
    int d = -1;
    for (const auto& row : coef)
        d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Mat2 PolySymbol::term(int i, int j) const {
    if (i < static_cast<int>(coef.size()) &&
        j < static_cast<int>(coef[i].size()))
        return coef[i][j];
    return Mat2::Zero();
}

void PolySymbol::set(int i, int j, const Mat2& m) {
    if (static_cast<int>(coef.size()) <= i) coef.resize(i + 1);
    if (static_cast<int>(coef[i].size()) <= j)
        coef[i].resize(j + 1, Mat2::Zero());
    coef[i][j] = m;
}

PolySymbol PolySymbol::d_dp() const {
    PolySymbol r = zero();
    for (int i = 1; i <= deg_p(); ++i)
        for (int j = 0; j <= deg_q(); ++j)
            r.set(i - 1, j, double(i) * term(i, j));
    return r;
}

PolySymbol PolySymbol::d_dq() const {
    PolySymbol r = zero();
    for (int i = 0; i <= deg_p(); ++i)
        for (int j = 1; j <= deg_q(); ++j)
            r.set(i, j - 1, double(j) * term(i, j));
    return r;
}

PolySymbol PolySymbol::mul(const PolySymbol& o) const {
    PolySymbol r = zero();
    for (int i = 0; i <= deg_p(); ++i)
        for (int j = 0; j <= deg_q(); ++j)
            for (int k = 0; k <= o.deg_p(); ++k)
                for (int l = 0; l <= o.deg_q(); ++l) {
                    Mat2 m = term(i, j) * o.term(k, l);
                    if (!m.isZero(0)) r.set(i + k, j + l, r.term(i + k, j + l) + m);
                }
    return r;
}

PolySymbol PolySymbol::add(const PolySymbol& o, cd scale) const {
    PolySymbol r = *this;
    for (int i = 0; i <= o.deg_p(); ++i)
        for (int j = 0; j <= o.deg_q(); ++j)
            r.set(i, j, r.term(i, j) + scale * o.term(i, j));
    return r;
}

Mat2 PolySymbol::eval(double p, double q) const {
    Mat2 r = Mat2::Zero();
    for (int i = 0; i <= deg_p(); ++i)
        for (int j = 0; j <= deg_q(); ++j)
            r += term(i, j) * std::pow(p, i) * std::pow(q, j);
    return r;
}

PolySymbol PolySymbol::zero() { return PolySymbol{}; }

PolySymbol PolySymbol::constant(const Mat2& m) {
    PolySymbol r;
    r.set(0, 0, m);
    return r;
}

PolySymbol PolySymbol::p_sym() {
    PolySymbol r;
    r.set(1, 0, Mat2::Identity());
    return r;
}

PolySymbol PolySymbol::q_sym() {
    PolySymbol r;
    r.set(0, 1, Mat2::Identity());
    return r;
}

PolySymbol star_poly(const PolySymbol& A, const PolySymbol& B, double hbar) {
    // terminating expansion of the exponential bidifferential form
    const int rmax = std::min(A.deg_p() + A.deg_q(), B.deg_p() + B.deg_q());
    PolySymbol out = PolySymbol::zero();
    cd pref(1.0, 0.0);
    for (int r = 0; r <= rmax; ++r) {
        if (r > 0) pref *= cd(0, 0.5 * hbar) / double(r);
        for (int s = 0; s <= r; ++s) {
            PolySymbol a = A, b = B;
            for (int t = 0; t < r - s; ++t) a = a.d_dq();
            for (int t = 0; t < s; ++t) a = a.d_dp();
            for (int t = 0; t < r - s; ++t) b = b.d_dp();
            for (int t = 0; t < s; ++t) b = b.d_dq();
            const cd w = pref * binom(r, s) * (s % 2 ? -1.0 : 1.0);
            out = out.add(a.mul(b), w);
        }
    }
    return out;
}

PolySymbol moyal_poly(const PolySymbol& A, const PolySymbol& B, double hbar) {
    PolySymbol diff = star_poly(A, B, hbar).add(star_poly(B, A, hbar), -1.0);
    return PolySymbol::zero().add(diff, 1.0 / cd(0, hbar));
}

} // namespace fvw
