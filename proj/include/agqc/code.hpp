#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "agqc/aut.hpp"
#include "agqc/linalg.hpp"
#include "agqc/rrspace.hpp"

namespace agqc {

/// Evaluation code with orbit-blocked column structure. Columns are ordered
/// orbit by orbit, each orbit internally [P, sigma P, sigma^2 P, ...].
struct QcCode {
    explicit QcCode(KummerCurve c) : curve(std::move(c)) {}

    KummerCurve curve;
    std::uint64_t sigma_order = 1;
    int n = 0;      // length
    int k = 0;      // rank of G (= t + 1 - g in the valid range)
    int t = 0;      // pole budget
    std::vector<int> block_lengths;
    Matrix G;       // k x n
    MonomialBasis basis;
    std::vector<AffinePoint> support;  // evaluation points in column order

    int genus() const { return curve.genus(); }
    int designed_distance() const { return n - t; }
};

QcCode build_code(const KummerCurve& curve, const Automorphism& sigma,
                  const std::vector<std::vector<AffinePoint>>& orbits, int t);

/// GQC construction using every non-trivial orbit (short blocks first).
QcCode build_gqc_with_short_orbits(const KummerCurve& curve, const Automorphism& sigma, int t);

/// Blockwise right rotation by one position.
std::vector<std::uint32_t> shift_operator(const std::vector<std::uint32_t>& c,
                                          const std::vector<int>& block_lengths);

/// Checks T(C) = C by reducing every shifted generator row against rref(G).
bool verify_shift_invariance(const QcCode& code);

/// Parity-check matrix: spans the null space of G, H G^T = 0.
Matrix dual(const Matrix& G);

struct DistanceResult {
    int lower = 1;
    int upper = 0;
    bool exact = false;
    std::string strategy;  // "enumeration" | "fiber" | "column-search" | "bounds"
};

inline constexpr std::uint64_t kDefaultDistanceBudget = 1ull << 24;

/// Exact minimum weight by scanning all nonzero codewords (up to scalar),
/// or nullopt when the scan exceeds the budget.
std::optional<int> enumeration_distance(const Matrix& G, std::uint64_t budget);

/// Least w >= w_start such that some w columns of H are linearly dependent;
/// nullopt when the subset scan exceeds the budget.
std::optional<int> column_search_distance(const Matrix& H, int w_start, std::uint64_t budget);

/// Weight of an explicit codeword evaluating a product of (y - v) factors
/// over t/m full y-fibers inside the support; equals n - t when applicable.
std::optional<int> fiber_certificate_weight(const QcCode& code);

DistanceResult minimum_distance(const QcCode& code, std::uint64_t budget = kDefaultDistanceBudget);
DistanceResult dual_distance(const QcCode& code, std::uint64_t budget = kDefaultDistanceBudget);

enum class Classification { Mds, Amds, Nmds, Other, Unknown };
std::string classification_name(Classification c);

/// Singleton-defect classification; both distances must be exact where used.
Classification classify(int n, int k, int d, std::optional<int> dual_d);

struct CodeReport {
    int n = 0, k = 0;
    int d_lower = 0, d_upper = 0;
    bool d_exact = false;
    std::optional<int> singleton_defect;
    Classification classification = Classification::Unknown;
    bool qc_verified = false;
    std::vector<int> co_index;
    std::string distance_strategy;
    std::optional<int> dual_d;
};

CodeReport make_report(const QcCode& code, std::uint64_t budget = kDefaultDistanceBudget);

/// Plain text export: "n k q blocks=m1,m2,..." then k rows of n packed
/// integers (coefficients packed little-endian base p).
void write_matrix_file(std::ostream& os, const QcCode& code);

}  // namespace agqc
