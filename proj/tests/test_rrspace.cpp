#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "agqc/presets.hpp"
#include "agqc/rrspace.hpp"

using namespace agqc;

TEST_CASE("dimension formula past the gap range") {
    ReproPreset pre = make_preset("hyper-31");  // genus 2
    for (int t = 3; t <= 19; ++t) CHECK(rr_basis(pre.curve, t).dim() == t - 1);
    ReproPreset k = make_preset("kummer-127");  // genus 7
    for (int t = 13; t <= 40; ++t) CHECK(rr_basis(k.curve, t).dim() == t - 6);
}

TEST_CASE("monomials respect the pole bound and exponent range") {
    ReproPreset pre = make_preset("kummer-127");
    MonomialBasis basis = rr_basis(pre.curve, 30);
    int prev = -1;
    for (int i = 0; i < basis.dim(); ++i) {
        auto [a, b] = basis.monomials[i];
        CHECK(a >= 0);
        CHECK(a < pre.curve.m());
        CHECK(b >= 0);
        CHECK(basis.pole_order(i) <= 30);
        CHECK(basis.pole_order(i) >= prev);  // sorted by pole order
        prev = basis.pole_order(i);
    }
}

TEST_CASE("exactly g pole orders are missing below 2g") {
    ReproPreset pre = make_preset("hyper-31");  // g = 2: gaps {1, 3}
    MonomialBasis basis = rr_basis(pre.curve, 2 * pre.curve.genus() - 1);
    std::set<int> hit;
    for (int i = 0; i < basis.dim(); ++i) hit.insert(basis.pole_order(i));
    int gaps = 0;
    for (int v = 1; v <= 2 * pre.curve.genus() - 1; ++v) gaps += !hit.count(v);
    CHECK(gaps == pre.curve.genus());
}

TEST_CASE("dimension is monotone in t") {
    ReproPreset pre = make_preset("hyper-73");
    int prev = 0;
    for (int t = 0; t <= 30; ++t) {
        int dim = rr_basis(pre.curve, t).dim();
        CHECK(dim >= prev);
        prev = dim;
    }
    CHECK_THROWS_AS(rr_basis(pre.curve, -1), std::invalid_argument);
}

TEST_CASE("basis evaluation multiplies coordinates") {
    ReproPreset pre = make_preset("hyper-31");
    const FieldRef& F = pre.curve.field();
    MonomialBasis basis = rr_basis(pre.curve, 7);
    AffinePoint P{F->from_int(21), F->from_int(11)};
    auto vals = evaluate_basis(basis, P);
    REQUIRE(vals.size() == static_cast<std::size_t>(basis.dim()));
    for (int i = 0; i < basis.dim(); ++i) {
        auto [a, b] = basis.monomials[i];
        CHECK(vals[i] == P.x.pow(a) * P.y.pow(b));
    }
    CHECK(vals[0] == F->one());  // constant function first
}
