#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agqc/aut.hpp"

namespace agqc {

/// Orbit structure predicted by closed-form counting, independent of any
/// computed partition. Short entries are (length, count); fixed points have
/// length 1. Long orbits all have length sigma_order.
struct OrbitCensus {
    std::uint64_t sigma_order = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> short_orbits;
    std::int64_t long_count = 0;
    std::int64_t affine_total = 0;  // affine points the census accounts for
    std::vector<std::string> notes;
};

/// Throws logic_error unless short + long totals balance affine_total.
void check_balance(const OrbitCensus& c);

/// Predicted code parameters: k(t) = t + 1 - genus on 2*genus - 2 < t < n.
struct PredictedParams {
    std::int64_t n = 0;
    int genus = 0;
    std::string co_index;
    std::int64_t k_of(std::int64_t t) const { return t + 1 - genus; }
    std::int64_t designed_distance(std::int64_t t) const { return n - t; }
    bool t_valid(std::int64_t t) const { return 2 * genus - 2 < t && t < n; }
};

struct CensusWithParams {
    OrbitCensus census;
    PredictedParams qc;   // long orbits only
    PredictedParams gqc;  // all orbits of length >= 2
};

/// sigma = (eps*x, y) with eps of order m: fixed points are exactly the
/// (0, v) with B(v) = 0; everything else splits into m-orbits.
OrbitCensus census_diagonal_kummer(const KummerCurve& curve);

/// x^2 = y^5 - y with sigma of order 8: short orbits of sizes 1 and 4.
OrbitCensus census_genus2_order8(const FieldRef& field);

/// x^2 = y^5 + 1 with sigma of order 10: short orbits of sizes 2 and 5.
OrbitCensus census_genus2_order10(const FieldRef& field);

/// x^2 = y^{2g+1} + 1 over F_{q^2}, (2g+1) | q+1, sigma of order 4g+2.
CensusWithParams census_maximal_hyperelliptic(std::uint64_t q, int g);

/// sigma = (bx, gamma*y + a) on the norm-trace curve, r >= 3; the case is
/// selected from (b, a, gamma = b^{(q^r-1)/(q-1)}).
OrbitCensus census_norm_trace(std::uint64_t q, int r, const Automorphism& sigma);

/// psi_{a,b,c} on the Hermitian curve over F_{q^2}; four-way case split on
/// a = 1 / p | ord / ord | q+1 / otherwise.
OrbitCensus census_hermitian(std::uint64_t q, const Automorphism& psi);

/// eta = (zeta_m x, y + c), c^q + c = 0, on x^m = y^q + y over F_{q^2}.
CensusWithParams census_hermitian_quotient(std::uint64_t q, int m);

struct CrosscheckReport {
    bool pass = true;
    std::vector<std::string> diffs;  // human-readable predicted-vs-computed
    std::vector<std::string> notes;  // carried over from the census
};

/// Structured diff of a predicted census against a computed partition.
CrosscheckReport crosscheck(const OrbitCensus& census, const OrbitPartition& partition);

}  // namespace agqc
