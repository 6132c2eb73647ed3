#include "agqc/curve.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agqc {

std::string family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::Generic: return "generic";
        case CurveFamily::Hyperelliptic: return "hyperelliptic";
        case CurveFamily::NormTrace: return "norm_trace";
        case CurveFamily::Hermitian: return "hermitian";
        case CurveFamily::HermitianQuotient: return "hermitian_quotient";
    }
    return "?";
}

namespace {

// q = p^h for prime p; returns {p, h}
std::pair<long, int> factor_prime_power(std::uint64_t q) {
    for (long p = 2; static_cast<std::uint64_t>(p) * p <= q || static_cast<std::uint64_t>(p) == q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p == 0) {
            int h = 0;
            std::uint64_t x = q;
            while (x % p == 0) { x /= p; ++h; }
            if (x != 1) throw std::invalid_argument("q must be a prime power");
            return {p, h};
        }
    }
    if (is_prime(static_cast<long>(q))) return {static_cast<long>(q), 1};
    throw std::invalid_argument("q must be a prime power");
}

Poly monomial_sum(const FieldRef& field, const std::vector<std::uint64_t>& exps,
                  const std::vector<int>& signs) {
    std::uint64_t top = 0;
    for (auto e : exps) top = std::max(top, e);
    Poly B(top + 1, field->zero());
    for (size_t i = 0; i < exps.size(); ++i) B[exps[i]] = B[exps[i]] + field->from_int(signs[i]);
    return B;
}

}  // namespace

KummerCurve::KummerCurve(FieldRef field, int m, Poly B, CurveFamily family)
    : field_(std::move(field)), m_(m), B_(poly_trim(std::move(B))), family_(family) {
    d_ = poly_deg(B_);
    if (m_ < 2) throw std::invalid_argument("curve exponent m must be >= 2");
    if (d_ < 1) throw std::invalid_argument("B must have degree >= 1");
    if (m_ + d_ < 3) throw std::invalid_argument("curve degree must be >= 3");
    long p = field_->characteristic();
    if (m_ % p == 0) throw std::invalid_argument("m must not be divisible by the characteristic");
    if (std::gcd(m_, d_) != 1) throw std::invalid_argument("gcd(m, deg B) must be 1");
    if (p == 2 && (family_ == CurveFamily::Generic || family_ == CurveFamily::Hyperelliptic))
        throw std::invalid_argument("characteristic 2 is not supported for this family");
    Poly g = poly_gcd(B_, poly_derivative(B_));
    if (poly_deg(g) != 0) throw std::invalid_argument("B must be separable (gcd(B, B') = 1)");
    genus_ = (m_ - 1) * (d_ - 1) / 2;

    std::uint64_t q = field_->subfield_order();
    switch (family_) {
        case CurveFamily::Hyperelliptic:
            if (m_ != 2) throw std::invalid_argument("hyperelliptic curves require m = 2");
            break;
        case CurveFamily::Hermitian: {
            if (field_->ext_degree() != 2) throw std::invalid_argument("Hermitian curve lives over F_{q^2}");
            if (static_cast<std::uint64_t>(m_) != q + 1)
                throw std::invalid_argument("Hermitian curve requires m = q+1");
            Poly want = monomial_sum(field_, {q, 1}, {1, 1});
            if (poly_trim(B_) != want) throw std::invalid_argument("Hermitian curve requires B(y) = y^q + y");
            preset_q_ = q;
            break;
        }
        case CurveFamily::NormTrace: {
            int r = field_->ext_degree();
            if (r < 2) throw std::invalid_argument("norm-trace curve requires r >= 2");
            std::uint64_t qr = field_->order();
            if (static_cast<std::uint64_t>(m_) != (qr - 1) / (q - 1))
                throw std::invalid_argument("norm-trace curve requires m = (q^r-1)/(q-1)");
            std::vector<std::uint64_t> exps;
            std::vector<int> signs;
            std::uint64_t e = 1;
            for (int i = 0; i < r; ++i) { exps.push_back(e); signs.push_back(1); e *= q; }
            if (poly_trim(B_) != monomial_sum(field_, exps, signs))
                throw std::invalid_argument("norm-trace curve requires B(y) = y^{q^{r-1}} + ... + y");
            preset_q_ = q;
            break;
        }
        case CurveFamily::HermitianQuotient: {
            if (field_->ext_degree() != 2) throw std::invalid_argument("quotient curve lives over F_{q^2}");
            if (p == 3) throw std::invalid_argument("quotient curve requires p != 3");
            if (m_ <= 1 || (q + 1) % m_ != 0) throw std::invalid_argument("quotient curve requires 1 < m | q+1");
            if (std::gcd(static_cast<std::uint64_t>(m_), q) != 1)
                throw std::invalid_argument("quotient curve requires gcd(m, q) = 1");
            // the y^q - y twist has the wrong point count; the genuine
            // quotient of x^{q+1} = y^q + y under x -> lambda*x keeps B
            Poly want = monomial_sum(field_, {q, 1}, {1, 1});
            if (poly_trim(B_) != want) throw std::invalid_argument("quotient curve requires B(y) = y^q + y");
            preset_q_ = q;
            break;
        }
        case CurveFamily::Generic:
            break;
    }
}

KummerCurve make_curve(FieldRef field, int m, Poly B, CurveFamily family) {
    return KummerCurve(std::move(field), m, std::move(B), family);
}

KummerCurve make_hyperelliptic(FieldRef field, Poly f) {
    return KummerCurve(std::move(field), 2, std::move(f), CurveFamily::Hyperelliptic);
}

KummerCurve make_hermitian(std::uint64_t q) {
    auto [p, h] = factor_prime_power(q);
    FieldRef field = FieldCtx::make(p, h, 2);
    Poly B = monomial_sum(field, {q, 1}, {1, 1});
    return KummerCurve(field, static_cast<int>(q + 1), std::move(B), CurveFamily::Hermitian);
}

KummerCurve make_norm_trace(std::uint64_t q, int r) {
    auto [p, h] = factor_prime_power(q);
    FieldRef field = FieldCtx::make(p, h, r);
    std::vector<std::uint64_t> exps;
    std::vector<int> signs;
    std::uint64_t e = 1;
    for (int i = 0; i < r; ++i) { exps.push_back(e); signs.push_back(1); e *= q; }
    Poly B = monomial_sum(field, exps, signs);
    std::uint64_t m = (field->order() - 1) / (q - 1);
    return KummerCurve(field, static_cast<int>(m), std::move(B), CurveFamily::NormTrace);
}

KummerCurve make_hermitian_quotient(std::uint64_t q, int m) {
    auto [p, h] = factor_prime_power(q);
    FieldRef field = FieldCtx::make(p, h, 2);
    Poly B = monomial_sum(field, {q, 1}, {1, 1});
    return KummerCurve(field, m, std::move(B), CurveFamily::HermitianQuotient);
}

KummerCurve make_maximal_hyperelliptic(std::uint64_t q, int g) {
    auto [p, h] = factor_prime_power(q);
    if (g < 1) throw std::invalid_argument("genus must be positive");
    if ((q + 1) % (2 * static_cast<std::uint64_t>(g) + 1) != 0)
        throw std::invalid_argument("maximality over F_{q^2} needs 2g+1 | q+1");
    FieldRef field = FieldCtx::make(p, h, 2);
    Poly B(2 * g + 2, field->zero());
    B[0] = field->one();
    B[2 * g + 1] = field->one();
    return KummerCurve(field, 2, std::move(B), CurveFamily::Hyperelliptic);
}

bool KummerCurve::contains(const AffinePoint& P) const {
    return P.x.pow(m_) == poly_eval(B_, P.y);
}

std::string KummerCurve::describe() const {
    std::ostringstream os;
    os << "x^" << m_ << " = B(y), deg B = " << d_ << ", genus " << genus_ << ", "
       << family_name(family_) << ", over " << field_->describe();
    return os.str();
}

RationalPointSet enumerate_points(const KummerCurve& curve) {
    const FieldCtx& F = *curve.field();
    std::uint64_t Q = F.order();
    // bucket the m-th power map once; x ascending keeps buckets sorted
    std::vector<std::vector<std::uint32_t>> roots(Q);
    for (std::uint32_t x = 0; x < Q; ++x) roots[F.pow(x, curve.m())].push_back(x);

    RationalPointSet out;
    Poly Bp = poly_derivative(curve.B());
    for (std::uint32_t y = 0; y < Q; ++y) {
        FieldElement ye = F.from_index(y);
        FieldElement by = poly_eval(curve.B(), ye);
        for (std::uint32_t x : roots[by.packed()]) {
            // no affine singular points on this family; assert it anyway
            if (x == 0 && poly_eval(Bp, ye).is_zero())
                throw std::logic_error("unexpected singular affine point");
            out.affine.push_back({F.from_index(x), ye});
        }
    }
    out.has_infinity = true;
    return out;
}

bool is_maximal(const KummerCurve& curve) {
    std::uint64_t Q = curve.field()->order();
    auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(Q))));
    if (s * s != Q) throw std::invalid_argument("maximality test requires a square field order");
    return enumerate_points(curve).count() == Q + 1 + 2 * static_cast<std::uint64_t>(curve.genus()) * s;
}

}  // namespace agqc
