#pragma once

#include <string>
#include <vector>

#include "agqc/curve.hpp"

namespace agqc {

/// Affine-triangular curve automorphism (x,y) -> (ax+b, cx+dy+e), validated
/// symbolically against the curve equation at construction. Fixes P_inf.
class Automorphism {
public:
    Automorphism(KummerCurve curve, FieldElement alpha, FieldElement beta,
                 FieldElement gamma, FieldElement delta, FieldElement eps);

    const KummerCurve& curve() const { return curve_; }
    FieldElement alpha() const { return alpha_; }
    FieldElement beta() const { return beta_; }
    FieldElement gamma() const { return gamma_; }
    FieldElement delta() const { return delta_; }
    FieldElement eps() const { return eps_; }
    std::uint64_t order() const { return order_; }
    bool is_identity() const;

    AffinePoint apply(const AffinePoint& P) const;
    std::string describe() const;

private:
    KummerCurve curve_;
    FieldElement alpha_, beta_, gamma_, delta_, eps_;
    std::uint64_t order_;
};

/// (x, y) -> (eps_x * x, xi_y * y)
Automorphism make_diagonal(const KummerCurve& curve, FieldElement eps_x, FieldElement xi_y);
/// Hermitian psi_{a,b,c}: (x,y) -> (ax+b, a b^q x + a^{q+1} y + c), c^q + c = b^{q+1}.
Automorphism make_hermitian_psi(const KummerCurve& curve, FieldElement a, FieldElement b,
                                FieldElement c);
/// Norm-trace map (x,y) -> (bx, b^{(q^r-1)/(q-1)} y + a) with Tr_{q^r|q}(a) = 0.
Automorphism make_norm_trace_map(const KummerCurve& curve, FieldElement b, FieldElement a);
/// Quotient-curve eta: (x,y) -> (zeta_m x, y + c), c the smallest nonzero
/// element with c^q + c = 0.
Automorphism make_quotient_eta(const KummerCurve& curve, FieldElement zeta);
Automorphism make_identity(const KummerCurve& curve);

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
Automorphism automorphism_power(const Automorphism& s, std::uint64_t i);

struct OrbitPartition {
    std::uint64_t sigma_order = 1;
    /// Orbits partition the affine points; each orbit is [P, sP, s^2 P, ...]
    /// starting at its minimal point; orbits sorted by that minimal point.
    std::vector<std::vector<AffinePoint>> orbits;

    std::vector<const std::vector<AffinePoint>*> short_orbits() const;
    std::vector<const std::vector<AffinePoint>*> long_orbits() const;
};

OrbitPartition orbit_partition(const Automorphism& sigma, const RationalPointSet& points);

std::vector<std::vector<AffinePoint>> select_long_orbits(const OrbitPartition& part);
std::vector<std::vector<AffinePoint>> select_orbits_by_length(const OrbitPartition& part,
                                                              const std::vector<int>& lengths);
/// All orbits of length >= 2, shorts first, canonical order within each group.
std::vector<std::vector<AffinePoint>> select_nontrivial_orbits(const OrbitPartition& part);

}  // namespace agqc
