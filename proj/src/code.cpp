#include "agqc/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace agqc {

QcCode build_code(const KummerCurve& curve, const Automorphism& sigma,
                  const std::vector<std::vector<AffinePoint>>& orbits, int t) {
    if (orbits.empty()) throw std::domain_error("orbit selection is empty");
    int n = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& o : orbits) {
        n += static_cast<int>(o.size());
        for (const AffinePoint& P : o) {
            if (!curve.contains(P)) throw std::invalid_argument("orbit point is not on the curve");
            if (!seen.insert({P.x.packed(), P.y.packed()}).second)
                throw std::invalid_argument("orbits are not pairwise disjoint");
        }
    }
    int g = curve.genus();
    if (!(2 * g - 2 < t && t < n))
        throw std::domain_error("t must satisfy 2g-2 < t < n (got t=" + std::to_string(t) +
                                ", n=" + std::to_string(n) + ", g=" + std::to_string(g) + ")");

    QcCode code{curve};
    code.sigma_order = sigma.order();
    code.t = t;
    code.n = n;
    code.basis = rr_basis(curve, t);
    int k0 = code.basis.dim();
    code.G = Matrix(curve.field().get(), k0, n);
    int col = 0;
    for (const auto& o : orbits) {
        code.block_lengths.push_back(static_cast<int>(o.size()));
        for (const AffinePoint& P : o) {
            std::vector<FieldElement> vals = evaluate_basis(code.basis, P);
            for (int r = 0; r < k0; ++r) code.G.at(r, col) = vals[r].packed();
            code.support.push_back(P);
            ++col;
        }
    }
    code.k = rank(code.G);
    if (code.k != t + 1 - g)
        throw std::logic_error("rank of generator matrix differs from t+1-g");
    return code;
}

QcCode build_gqc_with_short_orbits(const KummerCurve& curve, const Automorphism& sigma, int t) {
    RationalPointSet pts = enumerate_points(curve);
    OrbitPartition part = orbit_partition(sigma, pts);
    return build_code(curve, sigma, select_nontrivial_orbits(part), t);
}

std::vector<std::uint32_t> shift_operator(const std::vector<std::uint32_t>& c,
                                          const std::vector<int>& block_lengths) {
    int total = std::accumulate(block_lengths.begin(), block_lengths.end(), 0);
    if (static_cast<int>(c.size()) != total)
        throw std::invalid_argument("vector length does not match block lengths");
    std::vector<std::uint32_t> out;
    out.reserve(c.size());
    int off = 0;
    for (int len : block_lengths) {
        out.push_back(c[off + len - 1]);
        for (int i = 0; i + 1 < len; ++i) out.push_back(c[off + i]);
        off += len;
    }
    return out;
}

bool verify_shift_invariance(const QcCode& code) {
    Rref r = rref(code.G);
    for (int i = 0; i < code.G.rows(); ++i) {
        std::vector<std::uint32_t> shifted = shift_operator(code.G.row(i), code.block_lengths);
        if (!in_row_space(r, std::move(shifted))) return false;
    }
    return true;
}

Matrix dual(const Matrix& G) { return nullspace(G); }

std::optional<int> enumeration_distance(const Matrix& G, std::uint64_t budget) {
    const FieldCtx& F = *G.ctx();
    int k = G.rows(), n = G.cols();
    std::uint64_t Q = F.order();
    long double words = 1;
    for (int i = 0; i < k; ++i) words *= Q;
    long double cost = (words - 1) / (Q - 1) * k * n;
    if (cost > static_cast<long double>(budget)) return std::nullopt;

    int best = n;
    std::vector<std::uint32_t> cw(n), msg(k);
    // messages up to scalar: leading coefficient fixed to 1
    for (int lead = 0; lead < k; ++lead) {
        std::fill(msg.begin(), msg.end(), 0);
        msg[lead] = 1;
        while (true) {
            std::fill(cw.begin(), cw.end(), 0);
            for (int r = lead; r < k; ++r) {
                if (msg[r] == 0) continue;
                for (int c = 0; c < n; ++c) cw[c] = F.add(cw[c], F.mul(msg[r], G.at(r, c)));
            }
            int w = 0;
            for (std::uint32_t v : cw) w += (v != 0);
            if (w > 0) best = std::min(best, w);
            int i = k - 1;
            while (i > lead && msg[i] == Q - 1) msg[i--] = 0;
            if (i == lead) break;
            ++msg[i];
        }
    }
    return best;
}

namespace {

struct ColumnSearch {
    const Matrix& H;
    const FieldCtx& F;
    int n, rows;
    std::uint64_t budget;
    std::uint64_t work = 0;
    // echelon basis of the chosen columns
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<int> pivot;
    std::optional<int> found;

    explicit ColumnSearch(const Matrix& h, std::uint64_t b)
        : H(h), F(*h.ctx()), n(h.cols()), rows(h.rows()), budget(b) {}

    // reduce column j against the basis; empty result means "in span"
    std::optional<std::vector<std::uint32_t>> reduce(int j) {
        work += static_cast<std::uint64_t>(rows) * (basis.size() + 1);
        std::vector<std::uint32_t> v(rows);
        for (int r = 0; r < rows; ++r) v[r] = H.at(r, j);
        for (size_t i = 0; i < basis.size(); ++i) {
            std::uint32_t f = v[pivot[i]];
            if (f == 0) continue;
            for (int r = 0; r < rows; ++r) v[r] = F.sub(v[r], F.mul(f, basis[i][r]));
        }
        for (int r = 0; r < rows; ++r)
            if (v[r] != 0) {
                std::uint32_t inv = F.inv(v[r]);
                for (int x = 0; x < rows; ++x) v[x] = F.mul(v[x], inv);
                pivot.push_back(r);
                return v;
            }
        return std::nullopt;
    }

    // search for a dependent subset of size exactly w (first w-1 independent)
    bool dfs(int start, int depth, int w) {
        if (work > budget) return false;
        if (depth == w - 1) {
            for (int j = start; j < n; ++j) {
                auto red = reduce(j);
                if (!red) { found = w; return true; }
                pivot.pop_back();
                if (work > budget) return false;
            }
            return false;
        }
        for (int j = start; j <= n - (w - depth); ++j) {
            auto red = reduce(j);
            if (!red) {
                // dependency smaller than the current target; report it as-is
                found = depth + 1;
                return true;
            }
            basis.push_back(std::move(*red));
            if (dfs(j + 1, depth + 1, w)) return true;
            basis.pop_back();
            pivot.pop_back();
            if (work > budget) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<int> column_search_distance(const Matrix& H, int w_start, std::uint64_t budget) {
    int n = H.cols();
    int w_max = rank(H) + 1;  // a dependency always exists by then
    ColumnSearch cs(H, budget);
    for (int w = std::max(1, w_start); w <= std::min(w_max, n); ++w) {
        cs.basis.clear();
        cs.pivot.clear();
        if (cs.dfs(0, 0, w)) return cs.found;
        if (cs.work > budget) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<int> fiber_certificate_weight(const QcCode& code) {
    const FieldCtx& F = *code.curve.field();
    int m = code.curve.m();
    if ((F.order() - 1) % m != 0) return std::nullopt;  // fibers would be partial
    if (code.t % m != 0 || code.t == 0) return std::nullopt;
    int s = code.t / m;

    std::unordered_map<std::uint32_t, int> fiber_count;
    for (const AffinePoint& P : code.support) ++fiber_count[P.y.packed()];
    std::vector<std::uint32_t> vs;
    for (auto [y, cnt] : fiber_count)
        if (cnt == m && !poly_eval(code.curve.B(), F.from_index(y)).is_zero()) vs.push_back(y);
    if (static_cast<int>(vs.size()) < s) return std::nullopt;
    std::sort(vs.begin(), vs.end());
    vs.resize(s);

    // weight of ev(prod (y - v_j)); the product lies in L(t P_inf)
    int w = 0;
    for (const AffinePoint& P : code.support) {
        std::uint32_t val = 1;
        for (std::uint32_t v : vs) val = F.mul(val, F.sub(P.y.packed(), v));
        w += (val != 0);
    }
    return w;
}

DistanceResult minimum_distance(const QcCode& code, std::uint64_t budget) {
    DistanceResult res;
    res.lower = std::max(1, code.designed_distance());
    res.upper = code.n - code.k + 1;

    if (auto d = enumeration_distance(code.G, budget)) {
        res.lower = res.upper = *d;
        res.exact = true;
        res.strategy = "enumeration";
        return res;
    }
    if (auto w = fiber_certificate_weight(code)) {
        res.upper = std::min(res.upper, *w);
        if (*w == res.lower) {
            res.exact = true;
            res.strategy = "fiber";
            return res;
        }
    }
    Matrix H = dual(code.G);
    if (auto d = column_search_distance(H, res.lower, budget)) {
        res.lower = res.upper = *d;
        res.exact = true;
        res.strategy = "column-search";
        return res;
    }
    res.strategy = "bounds";
    return res;
}

DistanceResult dual_distance(const QcCode& code, std::uint64_t budget) {
    DistanceResult res;
    res.lower = 1;
    res.upper = code.k + 1;  // Singleton for the [n, n-k] dual
    Matrix H = dual(code.G);
    if (auto d = enumeration_distance(H, budget)) {
        res.lower = res.upper = *d;
        res.exact = true;
        res.strategy = "enumeration";
        return res;
    }
    if (auto d = column_search_distance(code.G, 1, budget)) {
        res.lower = res.upper = *d;
        res.exact = true;
        res.strategy = "column-search";
        return res;
    }
    res.strategy = "bounds";
    return res;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Mds: return "MDS";
        case Classification::Amds: return "AMDS";
        case Classification::Nmds: return "NMDS";
        case Classification::Other: return "other";
        case Classification::Unknown: return "unknown";
    }
    return "?";
}

Classification classify(int n, int k, int d, std::optional<int> dual_d) {
    int s = n - k + 1 - d;
    if (s < 0) throw std::invalid_argument("distance violates the Singleton bound");
    if (s == 0) return Classification::Mds;
    if (s == 1) {
        if (dual_d && n - (n - k) + 1 - *dual_d == 1) return Classification::Nmds;
        return Classification::Amds;
    }
    return Classification::Other;
}

CodeReport make_report(const QcCode& code, std::uint64_t budget) {
    CodeReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.co_index = code.block_lengths;
    rep.qc_verified = verify_shift_invariance(code);
    DistanceResult d = minimum_distance(code, budget);
    rep.d_lower = d.lower;
    rep.d_upper = d.upper;
    rep.d_exact = d.exact;
    rep.distance_strategy = d.strategy;
    if (d.exact) {
        int s = code.n - code.k + 1 - d.lower;
        rep.singleton_defect = s;
        if (s == 1) {
            DistanceResult dd = dual_distance(code, budget);
            if (dd.exact) rep.dual_d = dd.lower;
            rep.classification = classify(code.n, code.k, d.lower,
                                          dd.exact ? std::optional<int>(dd.lower) : std::nullopt);
        } else {
            rep.classification = classify(code.n, code.k, d.lower, std::nullopt);
        }
    } else {
        rep.classification = Classification::Unknown;
    }
    return rep;
}

void write_matrix_file(std::ostream& os, const QcCode& code) {
    os << code.n << " " << code.k << " " << code.curve.field()->order() << " blocks=";
    for (size_t i = 0; i < code.block_lengths.size(); ++i)
        os << (i ? "," : "") << code.block_lengths[i];
    os << "\n";
    for (int r = 0; r < code.G.rows(); ++r) {
        for (int c = 0; c < code.n; ++c) os << (c ? " " : "") << code.G.at(r, c);
        os << "\n";
    }
}

}  // namespace agqc
