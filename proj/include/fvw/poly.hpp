#pragma once

#include <vector>
#include "fvw/kinematics.hpp"

namespace fvw {

// Matrix-valued polynomial in (p,q). The star product of two polynomials
// is a terminating bidifferential series, so linear-symbol identities such
// as {p,q}_M = -1 come out exact here, free of periodic-grid artifacts.
struct PolySymbol {
    // coef[i][j] multiplies p^i q^j
    std::vector<std::vector<Mat2>> coef;

    int deg_p() const { return static_cast<int>(coef.size()) - 1; }
    int deg_q() const;
    Mat2 term(int i, int j) const;
    void set(int i, int j, const Mat2& m);

    PolySymbol d_dp() const;
    PolySymbol d_dq() const;

    PolySymbol mul(const PolySymbol& o) const; // matrix-ordered product
    PolySymbol add(const PolySymbol& o, cd scale = 1.0) const;

    Mat2 eval(double p, double q) const;

    static PolySymbol zero();
    static PolySymbol constant(const Mat2& m);
    static PolySymbol p_sym();
    static PolySymbol q_sym();
};

PolySymbol star_poly(const PolySymbol& A, const PolySymbol& B, double hbar);
PolySymbol moyal_poly(const PolySymbol& A, const PolySymbol& B, double hbar);

} // namespace fvw
