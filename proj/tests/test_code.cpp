#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "agqc/code.hpp"
#include "agqc/presets.hpp"

using namespace agqc;

namespace {
QcCode small_code(int t) {
    ReproPreset pre = make_preset("hyper-31");
    OrbitPartition part = orbit_partition(pre.sigma, enumerate_points(pre.curve));
    return build_code(pre.curve, pre.sigma, select_long_orbits(part), t);
}
}  // namespace

TEST_CASE("build produces the expected parameters and blocks") {
    QcCode code = small_code(5);
    CHECK(code.n == 20);
    CHECK(code.k == 4);
    CHECK(code.t == 5);
    CHECK(code.sigma_order == 10);
    CHECK(code.block_lengths == std::vector<int>{10, 10});
    CHECK(code.G.rows() == 4);
    CHECK(code.G.cols() == 20);
    CHECK(code.support.size() == 20);
    CHECK(code.designed_distance() == 15);
}

TEST_CASE("shift operator rotates each block independently") {
    std::vector<std::uint32_t> v{1, 2, 3, 4, 5, 6, 7};
    CHECK(shift_operator(v, {3, 4}) == std::vector<std::uint32_t>{3, 1, 2, 7, 4, 5, 6});
    CHECK(shift_operator(v, {7}) == std::vector<std::uint32_t>{7, 1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(shift_operator(v, {3, 3}), std::invalid_argument);  // lengths mismatch
}

TEST_CASE("shift invariance holds for orbit-blocked codes") {
    CHECK(verify_shift_invariance(small_code(5)));
    ReproPreset pre = make_preset("hyper-31");
    CHECK(verify_shift_invariance(build_gqc_with_short_orbits(pre.curve, pre.sigma, 4)));
}

TEST_CASE("dual spans the null space") {
    QcCode code = small_code(7);
    Matrix H = dual(code.G);
    CHECK(H.rows() == code.n - code.k);
    Matrix prod = mat_mul_transposed(code.G, H);
    for (int r = 0; r < prod.rows(); ++r)
        for (int c = 0; c < prod.cols(); ++c) CHECK(prod.at(r, c) == 0);
    CHECK(rank(H) == code.n - code.k);
}

TEST_CASE("distance strategies agree on a small code") {
    QcCode code = small_code(3);  // [20, 2] over F_31: 31^2 messages
    auto enu = enumeration_distance(code.G, kDefaultDistanceBudget);
    REQUIRE(enu.has_value());
    // the dependency search must reach depth 18, so it needs a bigger budget
    auto col = column_search_distance(dual(code.G), 1, 1ull << 34);
    REQUIRE(col.has_value());
    CHECK(*enu == *col);
    CHECK(*enu == 18);
}

TEST_CASE("fiber certificate gives an exact weight when m divides t") {
    QcCode code = small_code(4);  // m = 2 divides t = 4
    auto w = fiber_certificate_weight(code);
    REQUIRE(w.has_value());
    CHECK(*w == 16);  // n - t
    CHECK_FALSE(fiber_certificate_weight(small_code(5)).has_value());  // 2 does not divide 5
}

TEST_CASE("minimum distance dispatch and reports") {
    QcCode code = small_code(3);
    DistanceResult d = minimum_distance(code);
    CHECK(d.exact);
    CHECK(d.lower == 18);
    CHECK(d.upper == 18);
    CodeReport rep = make_report(code);
    CHECK(rep.n == 20);
    CHECK(rep.k == 2);
    CHECK(rep.qc_verified);
    CHECK(rep.singleton_defect == 1);
    CHECK(rep.classification == Classification::Nmds);
    CHECK(rep.co_index == std::vector<int>{10, 10});
}

TEST_CASE("classification by Singleton defect") {
    CHECK(classify(10, 5, 6, std::nullopt) == Classification::Mds);
    CHECK(classify(10, 5, 5, 4) == Classification::Amds);   // dual defect 2
    CHECK(classify(10, 5, 5, 5) == Classification::Nmds);   // dual defect 1
    CHECK(classify(10, 5, 3, std::nullopt) == Classification::Other);
    CHECK(classification_name(Classification::Nmds) == "NMDS");
}

TEST_CASE("construction rejects bad inputs") {
    ReproPreset pre = make_preset("hyper-31");
    OrbitPartition part = orbit_partition(pre.sigma, enumerate_points(pre.curve));
    auto longs = select_long_orbits(part);
    CHECK_THROWS_AS(build_code(pre.curve, pre.sigma, longs, 2), std::domain_error);   // t <= 2g-2
    CHECK_THROWS_AS(build_code(pre.curve, pre.sigma, longs, 20), std::domain_error);  // t >= n
    auto dup = longs;
    dup.push_back(longs[0]);  // overlapping support
    CHECK_THROWS_AS(build_code(pre.curve, pre.sigma, dup, 5), std::invalid_argument);
}

TEST_CASE("matrix export format") {
    QcCode code = small_code(3);
    std::ostringstream os;
    write_matrix_file(os, code);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "20 2 31 blocks=10,10");
    int rows = 0;
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}
