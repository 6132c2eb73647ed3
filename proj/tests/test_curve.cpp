#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "agqc/curve.hpp"

using namespace agqc;

namespace {
Poly ints(const FieldRef& F, std::initializer_list<long> cs) {
    Poly p;
    for (long c : cs) p.push_back(F->from_int(c));
    return p;
}
}  // namespace

TEST_CASE("construction validates the defining equation") {
    FieldRef F = FieldCtx::make(31, 1, 1);
    CHECK_THROWS_AS(make_curve(F, 1, ints(F, {1, 0, 0, 1})), std::invalid_argument);  // m < 2
    CHECK_THROWS_AS(make_curve(F, 31, ints(F, {1, 0, 1})), std::invalid_argument);    // p | m
    CHECK_THROWS_AS(make_curve(F, 2, ints(F, {1, 0, 0, 0, 1})), std::invalid_argument);  // gcd(m,d)=2
    // non-separable B: (y+1)^2 = y^2 + 2y + 1 with m = 3
    CHECK_THROWS_AS(make_curve(F, 3, ints(F, {1, 2, 1})), std::invalid_argument);
    FieldRef F2 = FieldCtx::make(2, 1, 2);
    CHECK_THROWS_AS(make_hyperelliptic(F2, ints(F2, {1, 1, 0, 1})), std::invalid_argument);  // char 2
}

TEST_CASE("genus formula") {
    FieldRef F = FieldCtx::make(31, 1, 1);
    CHECK(make_hyperelliptic(F, ints(F, {1, 0, 0, 0, 0, 1})).genus() == 2);   // m=2, d=5
    FieldRef F127 = FieldCtx::make(127, 1, 1);
    CHECK(make_curve(F127, 3, ints(F127, {0, -1, 0, 0, 0, 0, 0, 0, 1})).genus() == 7);  // m=3, d=8
    FieldRef F73 = FieldCtx::make(73, 1, 1);
    CHECK(make_hyperelliptic(F73, ints(F73, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1})).genus() == 4);
}

TEST_CASE("point counts match closed forms") {
    FieldRef F = FieldCtx::make(31, 1, 1);
    CHECK(enumerate_points(make_hyperelliptic(F, ints(F, {1, 0, 0, 0, 0, 1}))).count() == 28);
    CHECK(enumerate_points(make_hermitian(3)).count() == 28);     // q^3 + 1
    CHECK(enumerate_points(make_hermitian(4)).count() == 65);
    CHECK(enumerate_points(make_norm_trace(2, 3)).count() == 33);  // q^{2r-1} + 1
    CHECK(enumerate_points(make_hermitian_quotient(5, 2)).count() == 46);
}

TEST_CASE("preset families validate their parameters") {
    CHECK_THROWS_AS(make_hermitian(6), std::invalid_argument);
    CHECK_THROWS_AS(make_hermitian_quotient(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_hermitian_quotient(5, 4), std::invalid_argument);  // 4 does not divide 6
    CHECK_THROWS_AS(make_hermitian_quotient(9, 2), std::invalid_argument);  // p = 3
    CHECK_THROWS_AS(make_maximal_hyperelliptic(8, 2), std::invalid_argument);  // q even
    CHECK_THROWS_AS(make_maximal_hyperelliptic(7, 2), std::invalid_argument);  // 5 does not divide 8
}

TEST_CASE("enumeration is sorted and on-curve") {
    KummerCurve curve = make_hermitian(3);
    RationalPointSet pts = enumerate_points(curve);
    CHECK(std::is_sorted(pts.affine.begin(), pts.affine.end()));
    for (const AffinePoint& P : pts.affine) CHECK(curve.contains(P));
    CHECK(pts.has_infinity);
}

TEST_CASE("maximality criterion") {
    CHECK(is_maximal(make_maximal_hyperelliptic(9, 2)));
    CHECK(enumerate_points(make_maximal_hyperelliptic(9, 2)).count() == 118);
    // same equation over F_49: 5 does not divide 7+1, so not maximal
    FieldRef F49 = FieldCtx::make(7, 1, 2);
    KummerCurve c49 = make_hyperelliptic(F49, ints(F49, {1, 0, 0, 0, 0, 1}));
    CHECK_FALSE(is_maximal(c49));
    // maximality is undefined over non-square fields
    FieldRef F31 = FieldCtx::make(31, 1, 1);
    CHECK_THROWS_AS(is_maximal(make_hyperelliptic(F31, ints(F31, {1, 0, 0, 0, 0, 1}))),
                    std::invalid_argument);
    CHECK(is_maximal(make_hermitian(3)));  // Hermitian curves are maximal
}
