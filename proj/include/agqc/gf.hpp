#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agqc {

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// Element of a finite field, stored as the base-p packed index of its
/// little-endian coefficient vector. Plain data; bound to one FieldCtx.
class FieldElement {
public:
    FieldElement() : ctx_(nullptr), v_(0) {}
    FieldElement(const FieldCtx* ctx, std::uint32_t packed) : ctx_(ctx), v_(packed) {}

    std::uint32_t packed() const { return v_; }
    const FieldCtx* ctx() const { return ctx_; }
    bool is_zero() const { return v_ == 0; }

    std::vector<int> coeffs() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement frobenius() const;  // a -> a^p

    bool operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // canonical order: packed index
    bool operator<(const FieldElement& o) const { return v_ < o.v_; }

private:
    const FieldCtx* ctx_;
    std::uint32_t v_;
};

/// A concrete finite field F_{p^{h*r}}, built as a single extension of F_p
/// with a monic irreducible modulus. Immutable after construction.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxOrder = 1u << 20;

    /// If no modulus is given, the lexicographically smallest monic
    /// irreducible of degree h*r over F_p is selected (deterministic).
    static FieldRef make(long p, int h, int r,
                         std::optional<std::vector<int>> modulus = std::nullopt);

    long characteristic() const { return p_; }
    int base_degree() const { return h_; }
    int ext_degree() const { return r_; }
    int degree() const { return deg_; }
    std::uint64_t order() const { return order_; }          // Q = p^{h*r}
    std::uint64_t subfield_order() const { return q_; }     // q = p^h
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement generator() const { return {this, gen_}; }

    /// Element from little-endian coefficient vector (entries reduced mod p).
    FieldElement element(std::span<const int> coeffs) const;
    /// Element from packed index in [0, Q).
    FieldElement from_index(std::uint32_t idx) const;
    /// Embedding of an integer: n mod p in the prime subfield.
    FieldElement from_int(long n) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Smallest k >= 1 with a^k = 1; divides Q-1. Requires a != 0.
    std::uint64_t element_order(const FieldElement& a) const;

    /// All solutions of a^n = 1, ascending; count = gcd(n, Q-1).
    std::vector<FieldElement> roots_of_unity(std::uint64_t n) const;

    /// True iff a lies in the subfield F_{p^k}; requires k | h*r.
    bool subfield_membership(const FieldElement& a, int k) const;

    /// Trace into F_{p^k}: sum of a^{p^{ik}}, i = 0..(h*r/k - 1).
    FieldElement trace_to_subfield(const FieldElement& a, int k) const;

    std::string describe() const;

private:
    FieldCtx() = default;
    void init_tables();
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    long p_ = 0;
    int h_ = 0, r_ = 0, deg_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    std::vector<int> modulus_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> log_, exp_;
    std::vector<std::uint32_t> ppow_;  // p^0 .. p^{deg}
};

bool is_prime(long n);

}  // namespace agqc
