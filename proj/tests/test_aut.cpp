#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "agqc/aut.hpp"
#include "agqc/presets.hpp"

using namespace agqc;

namespace {
Poly ints(const FieldRef& F, std::initializer_list<long> cs) {
    Poly p;
    for (long c : cs) p.push_back(F->from_int(c));
    return p;
}
AffinePoint pt(const FieldRef& F, long x, long y) { return {F->from_int(x), F->from_int(y)}; }
}  // namespace

TEST_CASE("diagonal map application and order") {
    ReproPreset pre = make_preset("hyper-31");
    const FieldRef& F = pre.curve.field();
    CHECK(pre.sigma.order() == 10);
    CHECK(pre.sigma.apply(pt(F, 21, 11)) == pt(F, 10, 22));
    CHECK(pre.sigma.apply(pt(F, 1, 0)) == pt(F, 30, 0));
    CHECK_THROWS_AS(pre.sigma.apply(pt(F, 1, 1)), std::invalid_argument);  // not on curve
}

TEST_CASE("consecutive images match a recorded trajectory") {
    ReproPreset pre = make_preset("hyper-41");
    const FieldRef& F = pre.curve.field();
    CHECK(pre.sigma.apply(pt(F, 7, 19)) == pt(F, 21, 7));
    CHECK(pre.sigma.apply(pt(F, 21, 7)) == pt(F, 22, 22));
}

TEST_CASE("non-preserving maps are rejected") {
    FieldRef F = FieldCtx::make(127, 1, 1);
    KummerCurve curve = make_curve(F, 3, ints(F, {0, -1, 0, 0, 0, 0, 0, 0, 1}));
    // x-part cubes to 1 but the y-part scales B by 2: not an automorphism
    CHECK_THROWS_AS(make_diagonal(curve, F->from_int(19), F->from_int(2)), std::invalid_argument);
    CHECK_NOTHROW(make_diagonal(curve, F->from_int(100), F->from_int(2)));  // 100^3 = 2
    CHECK_NOTHROW(make_diagonal(curve, F->from_int(19), F->one()));
}

TEST_CASE("composition, powers and identity") {
    ReproPreset pre = make_preset("hyper-31");
    Automorphism id = make_identity(pre.curve);
    CHECK(id.order() == 1);
    CHECK(id.is_identity());
    Automorphism s2 = automorphism_power(pre.sigma, 2);
    CHECK(s2.order() == 5);
    CHECK(automorphism_power(pre.sigma, 5).order() == 2);
    CHECK(automorphism_power(pre.sigma, 10).is_identity());
    // compose(sigma, sigma^9) = identity
    CHECK(compose(pre.sigma, automorphism_power(pre.sigma, 9)).is_identity());
    // order of sigma^i = ord / gcd(ord, i)
    for (int i = 1; i <= 10; ++i)
        CHECK(automorphism_power(pre.sigma, i).order() == 10 / std::gcd(10, i));
}

TEST_CASE("orbit partition covers the points and respects order") {
    ReproPreset pre = make_preset("hyper-31");
    RationalPointSet pts = enumerate_points(pre.curve);
    OrbitPartition part = orbit_partition(pre.sigma, pts);
    std::size_t total = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& o : part.orbits) {
        total += o.size();
        CHECK(part.sigma_order % o.size() == 0);  // length divides ord
        // consecutive under sigma, starting at the orbit minimum
        for (std::size_t i = 0; i + 1 < o.size(); ++i) {
            CHECK(pre.sigma.apply(o[i]) == o[i + 1]);
            CHECK_FALSE(o[i + 1] < o[0]);
        }
        for (const AffinePoint& P : o) seen.insert({P.x.packed(), P.y.packed()});
    }
    CHECK(total == pts.affine.size());
    CHECK(seen.size() == total);
    CHECK(part.short_orbits().size() == 2);
    CHECK(part.long_orbits().size() == 2);
}

TEST_CASE("identity partition is all singletons") {
    ReproPreset pre = make_preset("hyper-31");
    RationalPointSet pts = enumerate_points(pre.curve);
    OrbitPartition part = orbit_partition(make_identity(pre.curve), pts);
    CHECK(part.orbits.size() == pts.affine.size());
    for (const auto& o : part.orbits) CHECK(o.size() == 1);
}

TEST_CASE("orbit selection helpers") {
    ReproPreset pre = make_preset("hyper-31");
    OrbitPartition part = orbit_partition(pre.sigma, enumerate_points(pre.curve));
    auto nontrivial = select_nontrivial_orbits(part);
    REQUIRE(nontrivial.size() == 4);
    CHECK(nontrivial[0].size() == 2);  // shorts first
    CHECK(nontrivial[1].size() == 5);
    CHECK(nontrivial[2].size() == 10);
    auto by_len = select_orbits_by_length(part, {10, 10});
    CHECK(by_len.size() == 2);
    CHECK_THROWS_AS(select_orbits_by_length(part, {3}), std::domain_error);
}

TEST_CASE("family-specific constructors validate constraints") {
    KummerCurve herm = make_hermitian(3);
    const FieldRef& F = herm.field();
    // c^q + c = b^{q+1} must hold
    CHECK_THROWS_AS(make_hermitian_psi(herm, F->one(), F->one(), F->zero()),
                    std::invalid_argument);
    KummerCurve nt = make_norm_trace(2, 3);
    const FieldRef& F8 = nt.field();
    // translation part must have trace zero
    FieldElement bad = F8->one();  // Tr(1) = 1 over F_2
    CHECK_THROWS_AS(make_norm_trace_map(nt, F8->one(), bad), std::invalid_argument);
    KummerCurve quo = make_hermitian_quotient(5, 2);
    const FieldRef& F25 = quo.field();
    Automorphism eta = make_quotient_eta(quo, F25->from_int(-1));
    CHECK(eta.order() == 10);  // lcm(m, p)
    CHECK_THROWS_AS(make_quotient_eta(quo, F25->one()), std::invalid_argument);
}
