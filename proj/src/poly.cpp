#include "agqc/poly.hpp"

#include <stdexcept>

namespace agqc {

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    return a;
}

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    const Poly& lo = a.size() < b.size() ? a : b;
    Poly out = a.size() < b.size() ? b : a;
    for (size_t i = 0; i < lo.size(); ++i) out[i] = out[i] + lo[i];
    return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const FieldCtx* ctx = a[0].ctx();
    Poly out(a.size() + b.size() - 1, ctx->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

Poly poly_derivative(const Poly& a) {
    if (a.size() < 2) return {};
    const FieldCtx* ctx = a[0].ctx();
    Poly out(a.size() - 1, ctx->zero());
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = ctx->from_int(static_cast<long>(i)) * a[i];
    return poly_trim(std::move(out));
}

namespace {
Poly poly_mod(Poly a, const Poly& b) {
    a = poly_trim(std::move(a));
    int db = poly_deg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    FieldElement lead_inv = b[db].inv();
    while (poly_deg(a) >= db) {
        int da = poly_deg(a);
        FieldElement c = a[da] * lead_inv;
        for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - c * b[i];
        a = poly_trim(std::move(a));
    }
    return a;
}
}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElement li = a[poly_deg(a)].inv();
        for (auto& c : a) c = c * li;  // monic normal form
    }
    return a;
}

FieldElement poly_eval(const Poly& a, const FieldElement& x) {
    FieldElement acc = x.ctx()->zero();
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * x + a[i];
    return acc;
}

}  // namespace agqc
