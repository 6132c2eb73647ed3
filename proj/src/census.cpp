#include "agqc/census.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace agqc {

namespace {

// add `count` orbits of `length`; orbits as long as sigma itself count as long
void add_orbits(OrbitCensus& c, std::int64_t length, std::int64_t count) {
    if (count == 0) return;
    if (count < 0 || length <= 0) throw std::logic_error("negative census entry");
    if (static_cast<std::uint64_t>(length) == c.sigma_order) {
        c.long_count += count;
        return;
    }
    for (auto& [len, cnt] : c.short_orbits)
        if (len == length) {
            cnt += count;
            return;
        }
    c.short_orbits.emplace_back(length, count);
}

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
    if (b <= 0 || a % b != 0)
        throw std::domain_error(std::string("census count for ") + what + " is not an integer");
    return a / b;
}

std::int64_t affine_count(const KummerCurve& curve) {
    RationalPointSet pts = enumerate_points(curve);
    return static_cast<std::int64_t>(pts.affine.size());
}

}  // namespace

void check_balance(const OrbitCensus& c) {
    std::int64_t covered = c.long_count * static_cast<std::int64_t>(c.sigma_order);
    for (auto [len, cnt] : c.short_orbits) covered += len * cnt;
    if (covered != c.affine_total)
        throw std::logic_error("census totals do not balance the affine point count");
}

OrbitCensus census_diagonal_kummer(const KummerCurve& curve) {
    const FieldCtx& F = *curve.field();
    int m = curve.m();
    if ((F.order() - 1) % m != 0)
        throw std::domain_error("diagonal action needs m | Q-1");
    std::int64_t ell = 0;
    for (std::uint64_t v = 0; v < F.order(); ++v)
        if (poly_eval(curve.B(), F.from_index(static_cast<std::uint32_t>(v))).is_zero()) ++ell;

    OrbitCensus c;
    c.sigma_order = m;
    c.affine_total = affine_count(curve);
    add_orbits(c, 1, ell);
    c.long_count = exact_div(c.affine_total - ell, m, "long orbits");
    check_balance(c);
    return c;
}

OrbitCensus census_genus2_order8(const FieldRef& field) {
    const FieldCtx& F = *field;
    if (F.characteristic() == 2 || F.characteristic() == 5)
        throw std::domain_error("x^2 = y^5 - y needs characteristic away from 2 and 5");
    if ((F.order() - 1) % 8 != 0)
        throw std::domain_error("order-8 action needs Q = 1 mod 8");
    Poly B = {F.zero(), -F.one(), F.zero(), F.zero(), F.zero(), F.one()};  // y^5 - y
    KummerCurve curve = make_hyperelliptic(field, B);

    OrbitCensus c;
    c.sigma_order = 8;
    c.affine_total = affine_count(curve);
    add_orbits(c, 1, 1);  // (0, 0)
    add_orbits(c, 4, 1);  // the four other points with x = 0
    c.long_count = exact_div(c.affine_total - 5, 8, "long orbits");
    check_balance(c);
    return c;
}

OrbitCensus census_genus2_order10(const FieldRef& field) {
    const FieldCtx& F = *field;
    if (F.characteristic() == 2 || F.characteristic() == 5)
        throw std::domain_error("x^2 = y^5 + 1 needs characteristic away from 2 and 5");
    if ((F.order() - 1) % 10 != 0)
        throw std::domain_error("order-10 action needs Q = 1 mod 10");
    Poly B = {F.one(), F.zero(), F.zero(), F.zero(), F.zero(), F.one()};
    KummerCurve curve = make_hyperelliptic(field, B);

    OrbitCensus c;
    c.sigma_order = 10;
    c.affine_total = affine_count(curve);
    add_orbits(c, 2, 1);  // {(1,0), (-1,0)}
    add_orbits(c, 5, 1);  // the five points with x = 0
    c.long_count = exact_div(c.affine_total - 7, 10, "long orbits");
    check_balance(c);
    return c;
}

CensusWithParams census_maximal_hyperelliptic(std::uint64_t q, int g) {
    if (q % 2 == 0) throw std::domain_error("q must be odd");
    if ((q + 1) % (2 * g + 1) != 0)
        throw std::domain_error("maximality needs (2g+1) | (q+1)");
    std::int64_t Q = static_cast<std::int64_t>(q) * q;

    CensusWithParams out;
    OrbitCensus& c = out.census;
    c.sigma_order = 4 * g + 2;
    c.affine_total = Q + 2 * g * static_cast<std::int64_t>(q);  // count - P_inf
    add_orbits(c, 2, 1);
    add_orbits(c, 2 * g + 1, 1);
    c.long_count = (q - 1) / 2 + exact_div((q - 2) * (q + 1), 4 * g + 2, "long orbits");
    check_balance(c);

    out.qc.n = Q + 2 * g * (static_cast<std::int64_t>(q) - 1) - 3;
    out.qc.genus = g;
    out.qc.co_index = std::to_string(4 * g + 2);
    out.gqc.n = c.affine_total;
    out.gqc.genus = g;
    out.gqc.co_index = "(2, " + std::to_string(2 * g + 1) + ", " + std::to_string(4 * g + 2) +
                       " x " + std::to_string(c.long_count) + ")";
    return out;
}

OrbitCensus census_norm_trace(std::uint64_t q, int r, const Automorphism& sigma) {
    if (r < 3) throw std::domain_error("group-structure predictions need r >= 3");
    const FieldCtx& F = *sigma.curve().field();
    long p = F.characteristic();
    FieldElement b = sigma.alpha(), gamma = sigma.delta(), a = sigma.eps();
    if (!sigma.beta().is_zero() || !sigma.gamma().is_zero())
        throw std::invalid_argument("not a norm-trace stabilizer element");

    std::int64_t N = 1;  // q^{2r-1} affine points
    for (int i = 0; i < 2 * r - 1; ++i) N *= static_cast<std::int64_t>(q);
    std::int64_t omega = 1;  // |Omega| = q^{r-1}
    for (int i = 0; i < r - 1; ++i) omega *= static_cast<std::int64_t>(q);

    OrbitCensus c;
    c.sigma_order = sigma.order();
    c.affine_total = N;

    if (b == F.one()) {
        // translation subgroup: semiregular with orbits of length p
        if (a.is_zero()) throw std::invalid_argument("identity has no census");
        if (c.sigma_order != static_cast<std::uint64_t>(p))
            throw std::logic_error("translation of order != p");
        c.long_count = exact_div(N, p, "translation orbits");
        std::ostringstream note;
        note << "stated orbit count q^(2r)/p disagrees with the affine total q^(2r-1); "
             << "using " << c.long_count << " = q^(2r-1)/p orbits of length " << p;
        c.notes.push_back(note.str());
    } else if (a.is_zero()) {
        // diagonal subgroup: fixes (0,0), rotates the rest of Omega by gamma
        std::uint64_t og = F.element_order(gamma);
        add_orbits(c, 1, 1);
        add_orbits(c, static_cast<std::int64_t>(og), exact_div(omega - 1, og, "Omega orbits"));
        c.long_count += exact_div(N - omega, c.sigma_order, "long orbits");
    } else if (gamma != F.one()) {
        // fixes (0, a/(gamma-1)); Omega otherwise as in the diagonal case
        std::uint64_t og = F.element_order(gamma);
        add_orbits(c, 1, 1);
        add_orbits(c, static_cast<std::int64_t>(og), exact_div(omega - 1, og, "Omega orbits"));
        c.long_count += exact_div(N - omega, c.sigma_order, "long orbits");
    } else {
        // gamma = 1, a != 0: order p*ord(b); Omega splits into p-orbits
        add_orbits(c, p, exact_div(omega, p, "Omega orbits"));
        c.long_count += exact_div(N - omega, c.sigma_order, "long orbits");
    }
    check_balance(c);
    return c;
}

OrbitCensus census_hermitian(std::uint64_t q, const Automorphism& psi) {
    const FieldCtx& F = *psi.curve().field();
    long p = F.characteristic();
    FieldElement a = psi.alpha();
    std::int64_t cube = static_cast<std::int64_t>(q) * q * q;

    OrbitCensus c;
    c.sigma_order = psi.order();
    c.affine_total = cube;

    if (a == F.one()) {
        if (psi.is_identity()) throw std::invalid_argument("identity has no census");
        if (c.sigma_order != static_cast<std::uint64_t>(p))
            throw std::logic_error("unipotent element of order != p");
        c.long_count = exact_div(cube, p, "orbits");
    } else if (c.sigma_order % p == 0) {
        add_orbits(c, p, exact_div(q, p, "short orbits"));
        c.long_count += exact_div(cube - q, c.sigma_order, "long orbits");
    } else if ((q + 1) % c.sigma_order == 0) {
        add_orbits(c, 1, q);
        c.long_count += exact_div(cube - q, c.sigma_order, "long orbits");
    } else {
        std::uint64_t os = F.element_order(a.pow(q + 1));
        add_orbits(c, 1, 1);
        add_orbits(c, static_cast<std::int64_t>(os), exact_div(q - 1, os, "short orbits"));
        c.long_count += exact_div(cube - q, c.sigma_order, "long orbits");
    }
    check_balance(c);
    return c;
}

CensusWithParams census_hermitian_quotient(std::uint64_t q, int m) {
    if (m <= 1) throw std::domain_error("m > 1 required");
    std::int64_t p = 2;
    {
        std::int64_t t = q;
        for (p = 2; t % p != 0; ++p) {}
    }
    if (p == 3) throw std::domain_error("characteristic 3 excluded");
    if (q % m == 0) throw std::domain_error("gcd(q, m) = 1 required");
    if ((q + 1) % m != 0) throw std::domain_error("m | q+1 required");

    std::int64_t longpts = static_cast<std::int64_t>(m) * q * (q - 1);

    CensusWithParams out;
    OrbitCensus& c = out.census;
    c.sigma_order = static_cast<std::uint64_t>(p) * m;
    c.affine_total = longpts + static_cast<std::int64_t>(q);
    add_orbits(c, p, exact_div(q, p, "Omega orbits"));
    c.long_count += exact_div(longpts, c.sigma_order, "long orbits");
    check_balance(c);

    int g = static_cast<int>((q - 1) * (m - 1) / 2);
    out.qc.n = longpts;
    out.qc.genus = g;
    out.qc.co_index = std::to_string(p * m);
    out.gqc.n = c.affine_total;
    out.gqc.genus = g;
    out.gqc.co_index = "(" + std::to_string(p) + " x " + std::to_string(q / p) + ", " +
                       std::to_string(p * m) + " x " + std::to_string(c.long_count) + ")";
    return out;
}

CrosscheckReport crosscheck(const OrbitCensus& census, const OrbitPartition& partition) {
    CrosscheckReport rep;
    rep.notes = census.notes;
    auto fail = [&](const std::string& s) {
        rep.pass = false;
        rep.diffs.push_back(s);
    };

    if (census.sigma_order != partition.sigma_order)
        fail("sigma order: predicted " + std::to_string(census.sigma_order) + ", computed " +
             std::to_string(partition.sigma_order));

    std::map<std::int64_t, std::int64_t> predicted, computed;
    for (auto [len, cnt] : census.short_orbits) predicted[len] += cnt;
    if (census.long_count) predicted[static_cast<std::int64_t>(census.sigma_order)] += census.long_count;
    std::int64_t total = 0;
    for (const auto& o : partition.orbits) {
        computed[static_cast<std::int64_t>(o.size())] += 1;
        total += static_cast<std::int64_t>(o.size());
    }
    if (total != census.affine_total)
        fail("point total: predicted " + std::to_string(census.affine_total) + ", computed " +
             std::to_string(total));
    for (auto [len, cnt] : predicted) {
        auto it = computed.find(len);
        std::int64_t got = it == computed.end() ? 0 : it->second;
        if (got != cnt)
            fail("orbits of length " + std::to_string(len) + ": predicted " + std::to_string(cnt) +
                 ", computed " + std::to_string(got));
    }
    for (auto [len, cnt] : computed)
        if (!predicted.count(len))
            fail("orbits of length " + std::to_string(len) + ": predicted 0, computed " +
                 std::to_string(cnt));
    return rep;
}

}  // namespace agqc
