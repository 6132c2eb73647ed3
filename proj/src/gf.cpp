#include "agqc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agqc {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_p as int vectors (little-endian), used only for
// modulus selection and validation.
using IPoly = std::vector<long>;

void itrim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly imul(const IPoly& a, const IPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    IPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    itrim(c);
    return c;
}

IPoly imod(IPoly a, const IPoly& f, long p) {
    itrim(a);
    long lead_inv = 1;
    {
        // f is monic by construction, but keep it general
        long lead = f.back();
        for (long x = 1; x < p; ++x)
            if (lead * x % p == 1) { lead_inv = x; break; }
    }
    while (a.size() >= f.size()) {
        long c = a.back() * lead_inv % p;
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        itrim(a);
    }
    return a;
}

IPoly igcd(IPoly a, IPoly b, long p) {
    itrim(a);
    itrim(b);
    while (!b.empty()) {
        IPoly r = imod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// t -> t^p mod f, repeated k times
IPoly ifrob(IPoly t, const IPoly& f, long p, int k) {
    for (int i = 0; i < k; ++i) {
        // t^p via square-and-multiply on exponent p
        IPoly result{1};
        IPoly base = t;
        long e = p;
        while (e > 0) {
            if (e & 1) result = imod(imul(result, base, p), f, p);
            base = imod(imul(base, base, p), f, p);
            e >>= 1;
        }
        t = std::move(result);
    }
    return t;
}

bool is_irreducible(const IPoly& f, long p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    IPoly x{0, 1};
    // Rabin test: x^{p^n} = x mod f, and x^{p^{n/l}} != x for prime l | n
    IPoly t = ifrob(x, f, p, n);
    if (t != imod(x, f, p)) return false;
    int m = n;
    for (int l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        while (m % l == 0) m /= l;
        IPoly u = ifrob(x, f, p, n / l);
        IPoly diff = u;
        diff.resize(std::max(diff.size(), size_t{2}), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        itrim(diff);
        IPoly g = igcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<int> smallest_irreducible(long p, int n) {
    // Scan monic degree-n polynomials in lexicographic coefficient order
    // (c0 most significant).
    std::vector<int> c(n, 0);
    while (true) {
        IPoly f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            std::vector<int> out(c.begin(), c.end());
            out.push_back(1);
            return out;
        }
        int i = n - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldRef FieldCtx::make(long p, int h, int r, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (h < 1 || r < 1) throw std::invalid_argument("field degrees h, r must be positive");
    int deg = h * r;
    std::uint64_t order = 1;
    for (int i = 0; i < deg; ++i) {
        order *= static_cast<std::uint64_t>(p);
        if (order > kMaxOrder) throw std::invalid_argument("field order exceeds supported bound 2^20");
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->h_ = h;
    ctx->r_ = r;
    ctx->deg_ = deg;
    ctx->order_ = order;
    ctx->q_ = 1;
    for (int i = 0; i < h; ++i) ctx->q_ *= static_cast<std::uint64_t>(p);

    if (modulus) {
        std::vector<int>& m = *modulus;
        if (static_cast<int>(m.size()) != deg + 1 || m.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree h*r");
        for (int& c : m)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
        IPoly f(m.begin(), m.end());
        if (!is_irreducible(f, p)) throw std::invalid_argument("supplied modulus is reducible over F_p");
        ctx->modulus_ = m;
    } else {
        ctx->modulus_ = smallest_irreducible(p, deg);
    }
    ctx->init_tables();
    return ctx;
}

void FieldCtx::init_tables() {
    ppow_.resize(deg_ + 1);
    ppow_[0] = 1;
    for (int i = 1; i <= deg_; ++i) ppow_[i] = ppow_[i - 1] * static_cast<std::uint32_t>(p_);

    // find a generator of the multiplicative group
    std::uint64_t m = order_ - 1;
    std::vector<std::uint64_t> primes;
    {
        std::uint64_t x = m;
        for (std::uint64_t d = 2; d * d <= x; ++d)
            if (x % d == 0) {
                primes.push_back(d);
                while (x % d == 0) x /= d;
            }
        if (x > 1) primes.push_back(x);
    }
    auto pow_slow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t res = 1, base = a;
        while (e > 0) {
            if (e & 1) res = mul_slow(res, base);
            base = mul_slow(base, base);
            e >>= 1;
        }
        return res;
    };
    gen_ = 0;
    for (std::uint32_t cand = 2; cand < order_; ++cand) {
        bool ok = true;
        for (std::uint64_t ell : primes)
            if (pow_slow(cand, m / ell) == 1) { ok = false; break; }
        if (ok) { gen_ = cand; break; }
    }
    if (gen_ == 0 && order_ == 2) gen_ = 1;
    if (gen_ == 0) throw std::logic_error("no multiplicative generator found");

    exp_.resize(m);
    log_.assign(order_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_slow(cur, gen_);
    }
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<long> da(deg_), db(deg_), prod(2 * deg_ - 1, 0);
    for (int i = 0; i < deg_; ++i) {
        da[i] = a % p_;
        a /= static_cast<std::uint32_t>(p_);
        db[i] = b % p_;
        b /= static_cast<std::uint32_t>(p_);
    }
    for (int i = 0; i < deg_; ++i)
        for (int j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int i = 2 * deg_ - 2; i >= deg_; --i) {
        long c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg_; ++j)
            prod[i - deg_ + j] = ((prod[i - deg_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    std::uint32_t out = 0;
    for (int i = deg_ - 1; i >= 0; --i) out = out * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(prod[i]);
    return out;
}

FieldElement FieldCtx::element(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > deg_)
        throw std::invalid_argument("coefficient vector longer than field degree");
    std::uint32_t v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        long c = ((coeffs[i] % p_) + p_) % p_;
        v = v * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(c);
    }
    return {this, v};
}

FieldElement FieldCtx::from_index(std::uint32_t idx) const {
    if (idx >= order_) throw std::invalid_argument("element index out of range");
    return {this, idx};
}

FieldElement FieldCtx::from_int(long n) const {
    long c = ((n % p_) + p_) % p_;
    return {this, static_cast<std::uint32_t>(c)};
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
    if (deg_ == 1) return static_cast<std::uint32_t>((a + b) % p_);
    std::uint32_t out = 0;
    for (int i = 0; i < deg_; ++i) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= static_cast<std::uint32_t>(p_);
        b /= static_cast<std::uint32_t>(p_);
        out += ((da + db) % p_) * ppow_[i];
    }
    return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
    if (deg_ == 1) return static_cast<std::uint32_t>((p_ - a) % p_);
    std::uint32_t out = 0;
    for (int i = 0; i < deg_; ++i) {
        std::uint32_t da = a % p_;
        a /= static_cast<std::uint32_t>(p_);
        out += ((p_ - da) % p_) * ppow_[i];
    }
    return out;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    std::uint64_t m = order_ - 1;
    if (e >= m) e -= m;
    return exp_[e];
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    std::uint64_t m = order_ - 1;
    return exp_[(m - log_[a]) % m];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1u : 0u;
    std::uint64_t m = order_ - 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % m) % m];
}

std::uint64_t FieldCtx::element_order(const FieldElement& a) const {
    if (a.ctx() != this) throw std::invalid_argument("element from a different field");
    if (a.is_zero()) throw std::domain_error("order of zero is undefined");
    std::uint64_t m = order_ - 1;
    return m / std::gcd(m, static_cast<std::uint64_t>(log_[a.packed()]));
}

std::vector<FieldElement> FieldCtx::roots_of_unity(std::uint64_t n) const {
    std::vector<FieldElement> out;
    for (std::uint32_t v = 1; v < order_; ++v)
        if (pow(v, n) == 1) out.emplace_back(this, v);
    return out;
}

bool FieldCtx::subfield_membership(const FieldElement& a, int k) const {
    if (a.ctx() != this) throw std::invalid_argument("element from a different field");
    if (k < 1 || deg_ % k != 0) throw std::invalid_argument("k must divide h*r");
    std::uint32_t v = a.packed();
    for (int i = 0; i < k; ++i) v = pow(v, static_cast<std::uint64_t>(p_));
    return v == a.packed();
}

FieldElement FieldCtx::trace_to_subfield(const FieldElement& a, int k) const {
    if (a.ctx() != this) throw std::invalid_argument("element from a different field");
    if (k < 1 || deg_ % k != 0) throw std::invalid_argument("k must divide h*r");
    std::uint32_t acc = 0, cur = a.packed();
    for (int i = 0; i < deg_ / k; ++i) {
        acc = add(acc, cur);
        for (int j = 0; j < k; ++j) cur = pow(cur, static_cast<std::uint64_t>(p_));
    }
    return {this, acc};
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << order_ << " (p=" << p_ << ", h=" << h_ << ", r=" << r_ << ")";
    return os.str();
}

std::vector<int> FieldElement::coeffs() const {
    if (!ctx_) return {};
    std::vector<int> out(ctx_->degree());
    std::uint32_t v = v_;
    long p = ctx_->characteristic();
    for (int i = 0; i < ctx_->degree(); ++i) {
        out[i] = static_cast<int>(v % p);
        v /= static_cast<std::uint32_t>(p);
    }
    return out;
}

namespace {
void check_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (a.ctx() != b.ctx()) throw std::invalid_argument("operands from different field contexts");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_ctx(*this, o);
    return {ctx_, ctx_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_ctx(*this, o);
    return {ctx_, ctx_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_ctx(*this, o);
    return {ctx_, ctx_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {ctx_, ctx_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {ctx_, ctx_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }
FieldElement FieldElement::frobenius() const {
    return {ctx_, ctx_->pow(v_, static_cast<std::uint64_t>(ctx_->characteristic()))};
}

}  // namespace agqc
