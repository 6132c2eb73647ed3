#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "agqc/gf.hpp"

using namespace agqc;

TEST_CASE("prime field basics") {
    FieldRef F = FieldCtx::make(7, 1, 1);
    CHECK(F->order() == 7);
    CHECK(F->subfield_order() == 7);
    FieldElement a = F->from_int(3), b = F->from_int(5);
    CHECK((a + b).packed() == 1);
    CHECK((a * b).packed() == 1);
    CHECK((a - b).packed() == 5);
    CHECK((a.inv() * a) == F->one());
    CHECK(F->from_int(-1).packed() == 6);
    CHECK(a.pow(6) == F->one());
}

TEST_CASE("deterministic modulus selection for F_8") {
    FieldRef F = FieldCtx::make(2, 1, 3);
    // monic degree-3 options over F_2 are z^3+z+1 and z^3+z^2+1; the
    // constant-major ordering picks z^3+z^2+1
    CHECK(F->modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(F->order() == 8);
    CHECK(F->element_order(F->generator()) == 7);
}

TEST_CASE("field construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::make(6, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 1, 21), std::invalid_argument);  // 2^21 > cap
    CHECK_THROWS_AS(FieldCtx::make(2, 1, 2, std::vector<int>{1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldCtx::make(2, 1, 2, std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("field axioms hold on random samples") {
    for (auto [p, h, r] : {std::tuple<long, int, int>{2, 2, 2}, {3, 1, 3}, {5, 1, 2}, {31, 1, 1}}) {
        FieldRef F = FieldCtx::make(p, h, r);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F->order() - 1));
        for (int i = 0; i < 200; ++i) {
            FieldElement a = F->from_index(pick(rng));
            FieldElement b = F->from_index(pick(rng));
            FieldElement c = F->from_index(pick(rng));
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (-a) == F->zero());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == F->one());
                CHECK(a.pow(F->order() - 1) == F->one());
            }
            // Frobenius is a ring homomorphism
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
    }
}

TEST_CASE("element order and roots of unity") {
    FieldRef F = FieldCtx::make(31, 1, 1);
    CHECK(F->element_order(F->from_int(2)) == 5);
    CHECK(F->element_order(F->from_int(30)) == 2);
    CHECK(F->element_order(F->one()) == 1);
    CHECK_THROWS_AS(F->element_order(F->zero()), std::domain_error);

    auto mu5 = F->roots_of_unity(5);
    CHECK(mu5.size() == 5);
    for (const FieldElement& z : mu5) CHECK(z.pow(5) == F->one());
    CHECK(std::is_sorted(mu5.begin(), mu5.end()));
    CHECK(F->roots_of_unity(7).size() == 1);  // gcd(7, 30) = 1
}

TEST_CASE("trace and subfield membership in F_9 over F_3") {
    FieldRef F = FieldCtx::make(3, 1, 2);
    int in_subfield = 0;
    for (std::uint32_t i = 0; i < F->order(); ++i) {
        FieldElement a = F->from_index(i);
        CHECK(F->subfield_membership(a, 1) == (a.pow(3) == a));
        in_subfield += F->subfield_membership(a, 1);
        FieldElement tr = F->trace_to_subfield(a, 1);
        CHECK(F->subfield_membership(tr, 1));
        CHECK(tr == a + a.frobenius());
    }
    CHECK(in_subfield == 3);
}

TEST_CASE("packed encoding round trips") {
    FieldRef F = FieldCtx::make(5, 1, 2);
    FieldElement a = F->element(std::vector<int>{3, 2});  // 3 + 2z
    CHECK(a.packed() == 13);
    CHECK(a.coeffs() == std::vector<int>{3, 2});
    CHECK(F->from_index(13) == a);
    CHECK_THROWS_AS(F->from_index(25), std::invalid_argument);
    CHECK_THROWS_AS(F->element(std::vector<int>{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(127));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
