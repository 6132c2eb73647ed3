#include "agqc/rrspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace agqc {

MonomialBasis rr_basis(const KummerCurve& curve, int t) {
    if (t < 0) throw std::invalid_argument("pole budget t must be nonnegative");
    MonomialBasis basis;
    basis.t = t;
    basis.m = curve.m();
    basis.d = curve.d();
    for (int a = 0; a < basis.m; ++a)
        for (int b = 0; a * basis.d + b * basis.m <= t; ++b) basis.monomials.emplace_back(a, b);
    std::sort(basis.monomials.begin(), basis.monomials.end(), [&](const auto& u, const auto& v) {
        int pu = u.first * basis.d + u.second * basis.m;
        int pv = v.first * basis.d + v.second * basis.m;
        if (pu != pv) return pu < pv;
        return u.first < v.first;
    });
    // Riemann-Roch: past 2g-2 the dimension formula is exact
    if (t > 2 * curve.genus() - 2 && basis.dim() != t + 1 - curve.genus())
        throw std::logic_error("Riemann-Roch dimension mismatch; pole orders are wrong");
    return basis;
}

std::vector<FieldElement> evaluate_basis(const MonomialBasis& basis, const AffinePoint& P) {
    std::vector<FieldElement> out;
    out.reserve(basis.monomials.size());
    for (const auto& [a, b] : basis.monomials)
        out.push_back(P.x.pow(a) * P.y.pow(b));
    return out;
}

}  // namespace agqc
