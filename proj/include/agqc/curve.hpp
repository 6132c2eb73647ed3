#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agqc/gf.hpp"
#include "agqc/poly.hpp"

namespace agqc {

enum class CurveFamily { Generic, Hyperelliptic, NormTrace, Hermitian, HermitianQuotient };

std::string family_name(CurveFamily f);

struct AffinePoint {
    FieldElement x, y;
    bool operator==(const AffinePoint& o) const { return x == o.x && y == o.y; }
    // global point order: y ascending, then x ascending
    bool operator<(const AffinePoint& o) const {
        if (y != o.y) return y < o.y;
        return x < o.x;
    }
};

/// Plane curve x^m = B(y) over a finite field, with B separable,
/// gcd(m, deg B) = 1 and m not divisible by the characteristic.
class KummerCurve {
public:
    KummerCurve(FieldRef field, int m, Poly B, CurveFamily family = CurveFamily::Generic);

    const FieldRef& field() const { return field_; }
    int m() const { return m_; }
    int d() const { return d_; }
    int genus() const { return genus_; }
    CurveFamily family() const { return family_; }
    const Poly& B() const { return B_; }

    /// Preset parameter q = p^h for Hermitian / norm-trace / quotient presets
    /// (0 for curves without a preset shape).
    std::uint64_t preset_q() const { return preset_q_; }

    bool contains(const AffinePoint& P) const;
    std::string describe() const;

private:
    FieldRef field_;
    int m_, d_, genus_;
    Poly B_;
    CurveFamily family_;
    std::uint64_t preset_q_ = 0;

    friend KummerCurve make_hermitian(std::uint64_t q);
    friend KummerCurve make_norm_trace(std::uint64_t q, int r);
    friend KummerCurve make_hermitian_quotient(std::uint64_t q, int m);
};

KummerCurve make_curve(FieldRef field, int m, Poly B, CurveFamily family = CurveFamily::Generic);
KummerCurve make_hyperelliptic(FieldRef field, Poly f);
/// Hermitian curve x^{q+1} = y^q + y over F_{q^2}.
KummerCurve make_hermitian(std::uint64_t q);
/// Norm-trace curve x^{(q^r-1)/(q-1)} = y^{q^{r-1}} + ... + y over F_{q^r}.
KummerCurve make_norm_trace(std::uint64_t q, int r);
/// Quotient x^m = y^q + y over F_{q^2}, with m | q+1, gcd(m, q) = 1, p != 3.
KummerCurve make_hermitian_quotient(std::uint64_t q, int m);
/// x^2 = y^{2g+1} + 1 over F_{q^2}; maximal iff 2g+1 | q+1.
KummerCurve make_maximal_hyperelliptic(std::uint64_t q, int g);

struct RationalPointSet {
    std::vector<AffinePoint> affine;  // sorted in the global point order
    bool has_infinity = true;
    std::uint64_t count() const { return affine.size() + (has_infinity ? 1 : 0); }
};

/// Exhaustive, deterministic enumeration of the rational points.
RationalPointSet enumerate_points(const KummerCurve& curve);

/// True iff the point count attains Q + 1 + 2g*sqrt(Q); the field order
/// must be a square.
bool is_maximal(const KummerCurve& curve);

}  // namespace agqc
