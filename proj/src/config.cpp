#include "agqc/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

using nlohmann::json;

namespace agqc {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

long as_long(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

FieldElement parse_element(const json& j, const FieldCtx& F) {
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= F.order())
            bad("packed element index out of range");
        return F.from_index(static_cast<std::uint32_t>(v));
    }
    if (j.is_array()) {
        std::vector<int> coeffs;
        for (const auto& c : j) coeffs.push_back(static_cast<int>(as_long(c, "coefficient")));
        if (static_cast<int>(coeffs.size()) > F.degree()) bad("coefficient vector too long");
        return F.element(coeffs);
    }
    bad("element must be a packed index or a coefficient array");
}

FieldRef parse_field(const json& j) {
    if (!j.is_object()) bad("field spec must be an object");
    long p = as_long(require(j, "p"), "p");
    int h = j.contains("h") ? static_cast<int>(as_long(j["h"], "h")) : 1;
    int r = j.contains("r") ? static_cast<int>(as_long(j["r"], "r")) : 1;
    std::optional<std::vector<int>> modulus;
    if (j.contains("modulus")) {
        std::vector<int> m;
        for (const auto& c : j["modulus"]) m.push_back(static_cast<int>(as_long(c, "modulus coefficient")));
        modulus = std::move(m);
    }
    try {
        return FieldCtx::make(p, h, r, modulus);
    } catch (const std::exception& e) {
        bad(std::string("field: ") + e.what());
    }
}

KummerCurve parse_curve(const json& j, FieldRef field) {
    if (!j.is_object()) bad("curve spec must be an object");
    std::string family = require(j, "family").get<std::string>();
    auto poly_of = [&](const json& arr) {
        if (!field) bad("a field spec is required for this curve family");
        Poly B;
        for (const auto& c : arr) B.push_back(parse_element(c, *field));
        return B;
    };
    try {
        if (family == "generic")
            return make_curve(field, static_cast<int>(as_long(require(j, "m"), "m")),
                              poly_of(require(j, "B")));
        if (family == "hyperelliptic") return make_hyperelliptic(field, poly_of(require(j, "B")));
        if (family == "hermitian")
            return make_hermitian(static_cast<std::uint64_t>(as_long(require(j, "q"), "q")));
        if (family == "norm_trace")
            return make_norm_trace(static_cast<std::uint64_t>(as_long(require(j, "q"), "q")),
                                   static_cast<int>(as_long(require(j, "r"), "r")));
        if (family == "hermitian_quotient")
            return make_hermitian_quotient(
                static_cast<std::uint64_t>(as_long(require(j, "q"), "q")),
                static_cast<int>(as_long(require(j, "m"), "m")));
        if (family == "maximal_hyperelliptic")
            return make_maximal_hyperelliptic(
                static_cast<std::uint64_t>(as_long(require(j, "q"), "q")),
                static_cast<int>(as_long(require(j, "g"), "g")));
    } catch (const std::invalid_argument& e) {
        bad(std::string("curve: ") + e.what());
    }
    bad("unknown curve family '" + family + "'");
}

Automorphism parse_automorphism(const json& j, const KummerCurve& curve) {
    if (!j.is_object()) bad("automorphism spec must be an object");
    const FieldCtx& F = *curve.field();
    std::string preset = require(j, "preset").get<std::string>();
    auto elem = [&](const char* key) { return parse_element(require(j, key), F); };
    try {
        if (preset == "identity") return make_identity(curve);
        if (preset == "diagonal") return make_diagonal(curve, elem("eps"), elem("xi"));
        if (preset == "hermitian_psi")
            return make_hermitian_psi(curve, elem("a"), elem("b"), elem("c"));
        if (preset == "norm_trace_map") return make_norm_trace_map(curve, elem("b"), elem("a"));
        if (preset == "quotient_eta") return make_quotient_eta(curve, elem("zeta"));
        if (preset == "raw")
            return Automorphism(curve, elem("alpha"), elem("beta"), elem("gamma"), elem("delta"),
                                elem("eps"));
    } catch (const std::invalid_argument& e) {
        bad(std::string("automorphism: ") + e.what());
    }
    bad("unknown automorphism preset '" + preset + "'");
}

JobConfig parse_config(const json& j) {
    if (!j.is_object()) bad("top level must be an object");
    static const std::set<std::string> known = {"field", "curve",   "automorphism", "orbits",
                                               "t",     "t_range", "budget",       "format",
                                               "out"};
    for (const auto& [key, val] : j.items())
        if (!known.count(key)) bad("unknown key '" + key + "'");
    JobConfig cfg;
    if (j.contains("field")) cfg.field = parse_field(j["field"]);
    if (j.contains("curve")) {
        cfg.curve = parse_curve(j["curve"], cfg.field);
        cfg.field = cfg.curve->field();  // preset families carry their own field
    }
    if (j.contains("automorphism")) {
        if (!cfg.curve) bad("automorphism requires a curve");
        cfg.sigma = parse_automorphism(j["automorphism"], *cfg.curve);
    }
    if (j.contains("orbits")) {
        const json& o = j["orbits"];
        cfg.orbit_select = o.contains("select") ? o["select"].get<std::string>() : "nontrivial";
        if (cfg.orbit_select != "nontrivial" && cfg.orbit_select != "long" &&
            cfg.orbit_select != "lengths")
            bad("orbits.select must be nontrivial | long | lengths");
        if (o.contains("lengths"))
            for (const auto& l : o["lengths"])
                cfg.orbit_lengths.push_back(static_cast<int>(as_long(l, "orbit length")));
        if (cfg.orbit_select == "lengths" && cfg.orbit_lengths.empty())
            bad("orbits.select=lengths needs orbits.lengths");
    }
    if (j.contains("t")) cfg.t = static_cast<int>(as_long(j["t"], "t"));
    if (j.contains("t_range")) {
        const json& r = j["t_range"];
        if (!r.is_array() || r.size() != 2) bad("t_range must be [lo, hi]");
        cfg.t_range = {static_cast<int>(as_long(r[0], "t_range lo")),
                       static_cast<int>(as_long(r[1], "t_range hi"))};
    }
    if (j.contains("budget")) {
        long b = as_long(j["budget"], "budget");
        if (b <= 0) bad("budget must be positive");
        cfg.budget = static_cast<std::uint64_t>(b);
    }
    if (j.contains("format")) {
        cfg.format = j["format"].get<std::string>();
        if (cfg.format != "table" && cfg.format != "records")
            bad("format must be table | records");
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        bad(std::string("parse error in ") + path + ": " + e.what());
    }
    return parse_config(j);
}

std::vector<std::vector<AffinePoint>> select_orbits(const JobConfig& cfg,
                                                    const OrbitPartition& part) {
    if (cfg.orbit_select == "long") return select_long_orbits(part);
    if (cfg.orbit_select == "lengths") return select_orbits_by_length(part, cfg.orbit_lengths);
    return select_nontrivial_orbits(part);
}

}  // namespace agqc
