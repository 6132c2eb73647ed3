#include "agqc/aut.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace agqc {

namespace {

using CoeffTuple = std::array<std::uint32_t, 5>;  // alpha, beta, gamma, delta, eps

CoeffTuple compose_coeffs(const FieldCtx& F, const CoeffTuple& f, const CoeffTuple& g) {
    // (f o g): apply g first
    auto [a1, b1, c1, d1, e1] = f;
    auto [a2, b2, c2, d2, e2] = g;
    return {F.mul(a1, a2),
            F.add(F.mul(a1, b2), b1),
            F.add(F.mul(c1, a2), F.mul(d1, c2)),
            F.mul(d1, d2),
            F.add(F.add(F.mul(c1, b2), F.mul(d1, e2)), e1)};
}

bool is_identity_tuple(const CoeffTuple& t) {
    return t[0] == 1 && t[1] == 0 && t[2] == 0 && t[3] == 1 && t[4] == 0;
}

// Dense bivariate polynomial, coeff[i][j] = packed coefficient of X^i Y^j.
using BiPoly = std::vector<std::vector<std::uint32_t>>;

BiPoly bi_zero(int dx, int dy) { return BiPoly(dx + 1, std::vector<std::uint32_t>(dy + 1, 0)); }

// Symbolic expansion of F(aX+b, cX+dY+e) where F(X,Y) = X^m - B(Y);
// valid automorphisms satisfy result = lambda * F for some lambda != 0.
bool preserves_curve(const KummerCurve& curve, const CoeffTuple& s) {
    const FieldCtx& F = *curve.field();
    int m = curve.m(), d = curve.d();
    auto [a, b, c, dd, e] = s;

    // (aX+b)^m, univariate in X
    std::vector<std::uint32_t> t1{1};
    for (int i = 0; i < m; ++i) {
        std::vector<std::uint32_t> nxt(t1.size() + 1, 0);
        for (size_t j = 0; j < t1.size(); ++j) {
            nxt[j + 1] = F.add(nxt[j + 1], F.mul(t1[j], a));
            nxt[j] = F.add(nxt[j], F.mul(t1[j], b));
        }
        t1 = std::move(nxt);
    }

    // B(cX + dY + e): accumulate powers of the linear form
    BiPoly acc = bi_zero(std::max(m, d), d);
    BiPoly lp = bi_zero(d, d);  // (cX+dY+e)^j, degree <= j
    lp[0][0] = 1;
    const Poly& B = curve.B();
    for (int j = 0; j <= d; ++j) {
        if (j > 0) {
            BiPoly nxt = bi_zero(d, d);
            for (int i = 0; i <= d; ++i)
                for (int k = 0; k <= d; ++k) {
                    std::uint32_t v = lp[i][k];
                    if (v == 0) continue;
                    if (i + 1 <= d) nxt[i + 1][k] = F.add(nxt[i + 1][k], F.mul(v, c));
                    if (k + 1 <= d) nxt[i][k + 1] = F.add(nxt[i][k + 1], F.mul(v, dd));
                    nxt[i][k] = F.add(nxt[i][k], F.mul(v, e));
                }
            lp = std::move(nxt);
        }
        if (j < static_cast<int>(B.size()) && !B[j].is_zero()) {
            std::uint32_t bj = B[j].packed();
            for (int i = 0; i <= d; ++i)
                for (int k = 0; k <= d; ++k)
                    if (lp[i][k]) acc[i][k] = F.add(acc[i][k], F.mul(bj, lp[i][k]));
        }
    }

    // R = (aX+b)^m - B(...); must equal lambda * (X^m - B(Y))
    int DX = std::max(m, d);
    BiPoly R = bi_zero(DX, d);
    for (int i = 0; i <= m; ++i) R[i][0] = t1[i];
    for (int i = 0; i <= DX; ++i)
        for (int k = 0; k <= d; ++k) R[i][k] = F.sub(R[i][k], acc[i][k]);

    std::uint32_t lambda = R[m][0];
    if (lambda == 0) return false;
    for (int i = 0; i <= DX; ++i)
        for (int k = 0; k <= d; ++k) {
            std::uint32_t want = 0;
            if (i == m && k == 0)
                want = lambda;
            else if (i == 0 && k < static_cast<int>(B.size()))
                want = F.mul(lambda, F.neg(B[k].packed()));
            if (R[i][k] != want) return false;
        }
    return true;
}

std::uint64_t tuple_order(const FieldCtx& F, const CoeffTuple& s) {
    std::uint64_t cap = static_cast<std::uint64_t>(F.characteristic()) * (F.order() - 1);
    CoeffTuple t = s;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (is_identity_tuple(t)) return k;
        t = compose_coeffs(F, t, s);
    }
    throw std::logic_error("automorphism order exceeds cap p*(Q-1)");
}

}  // namespace

Automorphism::Automorphism(KummerCurve curve, FieldElement alpha, FieldElement beta,
                           FieldElement gamma, FieldElement delta, FieldElement eps)
    : curve_(std::move(curve)), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), eps_(eps) {
    const FieldCtx* ctx = curve_.field().get();
    for (const FieldElement* c : {&alpha_, &beta_, &gamma_, &delta_, &eps_})
        if (c->ctx() != ctx) throw std::invalid_argument("automorphism coefficients must live in the curve's field");
    if (alpha_.is_zero() || delta_.is_zero())
        throw std::invalid_argument("automorphism requires alpha != 0 and delta != 0");
    CoeffTuple t{alpha_.packed(), beta_.packed(), gamma_.packed(), delta_.packed(), eps_.packed()};
    if (!preserves_curve(curve_, t))
        throw std::invalid_argument("map does not preserve the curve equation");
    order_ = tuple_order(*ctx, t);
}

bool Automorphism::is_identity() const { return order_ == 1; }

AffinePoint Automorphism::apply(const AffinePoint& P) const {
    if (!curve_.contains(P)) throw std::invalid_argument("point is not on the curve");
    AffinePoint img{alpha_ * P.x + beta_, gamma_ * P.x + delta_ * P.y + eps_};
    return img;
}

std::string Automorphism::describe() const {
    std::ostringstream os;
    os << "(x,y) -> (" << alpha_.packed() << "*x";
    if (!beta_.is_zero()) os << " + " << beta_.packed();
    os << ", ";
    if (!gamma_.is_zero()) os << gamma_.packed() << "*x + ";
    os << delta_.packed() << "*y";
    if (!eps_.is_zero()) os << " + " << eps_.packed();
    os << "), order " << order_;
    return os.str();
}

Automorphism make_diagonal(const KummerCurve& curve, FieldElement eps_x, FieldElement xi_y) {
    const FieldCtx& F = *curve.field();
    return Automorphism(curve, eps_x, F.zero(), F.zero(), xi_y, F.zero());
}

Automorphism make_hermitian_psi(const KummerCurve& curve, FieldElement a, FieldElement b,
                                FieldElement c) {
    if (curve.family() != CurveFamily::Hermitian)
        throw std::invalid_argument("psi_{a,b,c} requires a Hermitian curve");
    std::uint64_t q = curve.preset_q();
    if (c.pow(q) + c != b.pow(q + 1))
        throw std::invalid_argument("Hermitian constraint c^q + c = b^{q+1} violated");
    return Automorphism(curve, a, b, a * b.pow(q), a.pow(q + 1), c);
}

Automorphism make_norm_trace_map(const KummerCurve& curve, FieldElement b, FieldElement a) {
    if (curve.family() != CurveFamily::NormTrace)
        throw std::invalid_argument("norm-trace map requires a norm-trace curve");
    const FieldCtx& F = *curve.field();
    if (!F.trace_to_subfield(a, F.base_degree()).is_zero())
        throw std::invalid_argument("translation part must have trace zero");
    return Automorphism(curve, b, F.zero(), F.zero(), b.pow(curve.m()), a);
}

Automorphism make_quotient_eta(const KummerCurve& curve, FieldElement zeta) {
    if (curve.family() != CurveFamily::HermitianQuotient)
        throw std::invalid_argument("eta requires a Hermitian-quotient curve");
    const FieldCtx& F = *curve.field();
    if (zeta.is_zero() || F.element_order(zeta) != static_cast<std::uint64_t>(curve.m()))
        throw std::invalid_argument("zeta must be a primitive m-th root of unity");
    // shift part: smallest nonzero c with c^q + c = 0, so B(y+c) = B(y)
    std::uint64_t q = curve.preset_q();
    FieldElement c = F.zero();
    for (std::uint32_t i = 1; i < F.order(); ++i) {
        FieldElement e = F.from_index(i);
        if ((e.pow(q) + e).is_zero()) { c = e; break; }
    }
    if (c.is_zero()) throw std::logic_error("no nonzero trace-zero shift exists");
    return Automorphism(curve, zeta, F.zero(), F.zero(), F.one(), c);
}

Automorphism make_identity(const KummerCurve& curve) {
    const FieldCtx& F = *curve.field();
    return Automorphism(curve, F.one(), F.zero(), F.zero(), F.one(), F.zero());
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    const FieldCtx& F = *f.curve().field();
    CoeffTuple a{f.alpha().packed(), f.beta().packed(), f.gamma().packed(), f.delta().packed(), f.eps().packed()};
    CoeffTuple b{g.alpha().packed(), g.beta().packed(), g.gamma().packed(), g.delta().packed(), g.eps().packed()};
    CoeffTuple t = compose_coeffs(F, a, b);
    return Automorphism(f.curve(), F.from_index(t[0]), F.from_index(t[1]), F.from_index(t[2]),
                        F.from_index(t[3]), F.from_index(t[4]));
}

Automorphism automorphism_power(const Automorphism& s, std::uint64_t i) {
    Automorphism acc = make_identity(s.curve());
    for (std::uint64_t k = 0; k < i % s.order(); ++k) acc = compose(s, acc);
    return acc;
}

std::vector<const std::vector<AffinePoint>*> OrbitPartition::short_orbits() const {
    std::vector<const std::vector<AffinePoint>*> out;
    for (const auto& o : orbits)
        if (o.size() < sigma_order) out.push_back(&o);
    return out;
}

std::vector<const std::vector<AffinePoint>*> OrbitPartition::long_orbits() const {
    std::vector<const std::vector<AffinePoint>*> out;
    for (const auto& o : orbits)
        if (o.size() == sigma_order) out.push_back(&o);
    return out;
}

OrbitPartition orbit_partition(const Automorphism& sigma, const RationalPointSet& points) {
    const FieldCtx& F = *sigma.curve().field();
    std::uint64_t Q = F.order();
    OrbitPartition part;
    part.sigma_order = sigma.order();
    std::unordered_set<std::uint64_t> visited;
    auto key = [Q](const AffinePoint& P) {
        return static_cast<std::uint64_t>(P.x.packed()) * Q + P.y.packed();
    };
    // points are sorted, so each orbit starts at its minimal point and the
    // orbit list comes out sorted by those minima
    for (const AffinePoint& P : points.affine) {
        if (visited.count(key(P))) continue;
        std::vector<AffinePoint> orbit;
        AffinePoint cur = P;
        do {
            visited.insert(key(cur));
            orbit.push_back(cur);
            cur = sigma.apply(cur);
        } while (!(cur == P));
        if (orbit.size() > sigma.order() || sigma.order() % orbit.size() != 0)
            throw std::logic_error("orbit length does not divide the automorphism order");
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

std::vector<std::vector<AffinePoint>> select_long_orbits(const OrbitPartition& part) {
    std::vector<std::vector<AffinePoint>> out;
    for (const auto& o : part.orbits)
        if (o.size() == part.sigma_order) out.push_back(o);
    if (out.empty()) throw std::domain_error("no long orbits present");
    return out;
}

std::vector<std::vector<AffinePoint>> select_orbits_by_length(const OrbitPartition& part,
                                                              const std::vector<int>& lengths) {
    std::vector<std::vector<AffinePoint>> out;
    std::vector<bool> used(part.orbits.size(), false);
    for (int len : lengths) {
        bool found = false;
        for (std::size_t i = 0; i < part.orbits.size() && !found; ++i)
            if (!used[i] && static_cast<int>(part.orbits[i].size()) == len) {
                used[i] = true;
                out.push_back(part.orbits[i]);
                found = true;
            }
        if (!found) throw std::domain_error("no unused orbit of length " + std::to_string(len));
    }
    return out;
}

std::vector<std::vector<AffinePoint>> select_nontrivial_orbits(const OrbitPartition& part) {
    std::vector<std::vector<AffinePoint>> out;
    for (const auto& o : part.orbits)
        if (o.size() >= 2 && o.size() < part.sigma_order) out.push_back(o);
    for (const auto& o : part.orbits)
        if (o.size() == part.sigma_order) out.push_back(o);
    return out;
}

}  // namespace agqc
