#pragma once

#include <utility>
#include <vector>

#include "agqc/curve.hpp"

namespace agqc {

/// Monomial basis of L(t * P_inf): all x^a y^b with 0 <= a < m and
/// a*d + b*m <= t (pole orders d and m of x and y at P_inf).
struct MonomialBasis {
    int t = 0;
    int m = 0, d = 0;                            // from the curve
    std::vector<std::pair<int, int>> monomials;  // (a, b), sorted by pole order then a
    int dim() const { return static_cast<int>(monomials.size()); }
    int pole_order(int i) const { return monomials[i].first * d + monomials[i].second * m; }
};

MonomialBasis rr_basis(const KummerCurve& curve, int t);

/// [x(P)^a * y(P)^b] in basis order; P must be affine and on the curve.
std::vector<FieldElement> evaluate_basis(const MonomialBasis& basis, const AffinePoint& P);

}  // namespace agqc
