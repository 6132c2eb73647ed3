#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "agqc/aut.hpp"
#include "agqc/code.hpp"

namespace agqc {

/// Parsed job description for the CLI. Field elements in configs are either
/// packed indices (number) or little-endian coefficient arrays.
struct JobConfig {
    FieldRef field;
    std::optional<KummerCurve> curve;
    std::optional<Automorphism> sigma;
    std::string orbit_select = "nontrivial";  // nontrivial | long | lengths
    std::vector<int> orbit_lengths;
    std::optional<int> t;
    std::optional<std::pair<int, int>> t_range;
    std::uint64_t budget = kDefaultDistanceBudget;
    std::string format = "table";  // table | records
    std::string out;
};

FieldElement parse_element(const nlohmann::json& j, const FieldCtx& F);
FieldRef parse_field(const nlohmann::json& j);
KummerCurve parse_curve(const nlohmann::json& j, FieldRef field);
Automorphism parse_automorphism(const nlohmann::json& j, const KummerCurve& curve);

JobConfig parse_config(const nlohmann::json& j);
JobConfig load_config(const std::string& path);  // invalid_argument on any error

/// Orbit selection per config: nontrivial (default), long-only, or by length.
std::vector<std::vector<AffinePoint>> select_orbits(const JobConfig& cfg,
                                                    const OrbitPartition& part);

}  // namespace agqc
