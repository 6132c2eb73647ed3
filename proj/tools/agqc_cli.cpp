#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "agqc/census.hpp"
#include "agqc/code.hpp"
#include "agqc/config.hpp"
#include "agqc/presets.hpp"

using nlohmann::json;
using namespace agqc;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string preset_id;
    std::optional<int> t;
    std::string t_range;
    std::optional<long> budget;
    std::string format;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_path, "job config file (JSON)");
    cmd->add_option("--preset", o.preset_id, "built-in instance id (see 'reproduce --list')");
    cmd->add_option("--t", o.t, "pole budget t");
    cmd->add_option("--t-range", o.t_range, "range of t values, A..B inclusive");
    cmd->add_option("--budget", o.budget, "distance search work budget");
    cmd->add_option("--format", o.format, "table | records")
        ->check(CLI::IsMember({"table", "records"}));
    cmd->add_option("--out", o.out, "output path for matrix files");
}

JobConfig resolve(const CommonOpts& o) {
    JobConfig cfg;
    if (!o.config_path.empty()) cfg = load_config(o.config_path);
    if (!o.preset_id.empty()) {
        ReproPreset pre = make_preset(o.preset_id);
        cfg.curve = pre.curve;
        cfg.sigma = pre.sigma;
        cfg.field = pre.curve.field();
    }
    if (o.t) cfg.t = o.t;
    if (!o.t_range.empty()) {
        auto dots = o.t_range.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("--t-range must look like A..B");
        cfg.t_range = {std::stoi(o.t_range.substr(0, dots)), std::stoi(o.t_range.substr(dots + 2))};
    }
    if (o.budget) {
        if (*o.budget <= 0) throw std::invalid_argument("--budget must be positive");
        cfg.budget = static_cast<std::uint64_t>(*o.budget);
    }
    if (!o.format.empty()) cfg.format = o.format;
    if (!o.out.empty()) cfg.out = o.out;
    return cfg;
}

const KummerCurve& need_curve(const JobConfig& cfg) {
    if (!cfg.curve) throw std::invalid_argument("a curve spec or preset is required");
    return *cfg.curve;
}

const Automorphism& need_sigma(const JobConfig& cfg) {
    if (!cfg.sigma) throw std::invalid_argument("an automorphism spec or preset is required");
    return *cfg.sigma;
}

int need_t(const JobConfig& cfg) {
    if (!cfg.t) throw std::invalid_argument("--t is required");
    return *cfg.t;
}

std::vector<int> t_values(const JobConfig& cfg) {
    if (cfg.t_range) {
        std::vector<int> ts;
        for (int t = cfg.t_range->first; t <= cfg.t_range->second; ++t) ts.push_back(t);
        if (ts.empty()) throw std::invalid_argument("empty --t-range");
        return ts;
    }
    return {need_t(cfg)};
}

json point_json(const AffinePoint& P) { return json::array({P.x.packed(), P.y.packed()}); }

int cmd_points(const JobConfig& cfg) {
    const KummerCurve& curve = need_curve(cfg);
    RationalPointSet pts = enumerate_points(curve);
    if (cfg.format == "records") {
        json j{{"curve", curve.describe()},
               {"count", pts.count()},
               {"has_infinity", pts.has_infinity},
               {"affine", json::array()}};
        for (const AffinePoint& P : pts.affine) j["affine"].push_back(point_json(P));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << curve.describe() << "\n";
        for (const AffinePoint& P : pts.affine)
            std::cout << "  (" << P.x.packed() << ", " << P.y.packed() << ")\n";
        std::cout << "affine points: " << pts.affine.size() << ", total with P_inf: " << pts.count()
                  << "\n";
    }
    return 0;
}

int cmd_orbits(const JobConfig& cfg) {
    const Automorphism& sigma = need_sigma(cfg);
    RationalPointSet pts = enumerate_points(sigma.curve());
    OrbitPartition part = orbit_partition(sigma, pts);
    if (cfg.format == "records") {
        json j{{"sigma", sigma.describe()}, {"order", part.sigma_order}, {"orbits", json::array()}};
        for (const auto& o : part.orbits) {
            json orbit{{"length", o.size()},
                       {"kind", o.size() < part.sigma_order ? "short" : "long"},
                       {"points", json::array()}};
            for (const AffinePoint& P : o) orbit["points"].push_back(point_json(P));
            j["orbits"].push_back(std::move(orbit));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << sigma.describe() << ", order " << part.sigma_order << "\n";
        for (const auto& o : part.orbits) {
            std::cout << "  [" << (o.size() < part.sigma_order ? "short" : "long ") << " len "
                      << o.size() << "]";
            for (const AffinePoint& P : o)
                std::cout << " (" << P.x.packed() << "," << P.y.packed() << ")";
            std::cout << "\n";
        }
        std::cout << part.orbits.size() << " orbits\n";
    }
    return 0;
}

int cmd_basis(const JobConfig& cfg) {
    const KummerCurve& curve = need_curve(cfg);
    for (int t : t_values(cfg)) {
        MonomialBasis basis = rr_basis(curve, t);
        std::cout << "t=" << t << " dim=" << basis.dim() << ":";
        for (auto [a, b] : basis.monomials) std::cout << " x^" << a << "y^" << b;
        std::cout << "\n";
    }
    return 0;
}

QcCode build_from(const JobConfig& cfg, int t) {
    const Automorphism& sigma = need_sigma(cfg);
    RationalPointSet pts = enumerate_points(sigma.curve());
    OrbitPartition part = orbit_partition(sigma, pts);
    return build_code(sigma.curve(), sigma, select_orbits(cfg, part), t);
}

json report_json(const QcCode& code, const CodeReport& rep) {
    json j{{"n", rep.n},
           {"k", rep.k},
           {"t", code.t},
           {"genus", code.genus()},
           {"blocks", rep.co_index},
           {"qc_verified", rep.qc_verified},
           {"d_lower", rep.d_lower},
           {"d_upper", rep.d_upper},
           {"d_exact", rep.d_exact},
           {"distance_strategy", rep.distance_strategy},
           {"classification", classification_name(rep.classification)}};
    if (rep.singleton_defect) j["singleton_defect"] = *rep.singleton_defect;
    if (rep.dual_d) j["dual_d"] = *rep.dual_d;
    return j;
}

void print_report(const JobConfig& cfg, const QcCode& code, const CodeReport& rep) {
    if (cfg.format == "records") {
        std::cout << report_json(code, rep).dump(2) << "\n";
        return;
    }
    std::cout << "[" << rep.n << ", " << rep.k << "] t=" << code.t << " blocks=(";
    for (size_t i = 0; i < rep.co_index.size(); ++i)
        std::cout << (i ? "," : "") << rep.co_index[i];
    std::cout << ") qc=" << (rep.qc_verified ? "yes" : "NO") << " d";
    if (rep.d_exact)
        std::cout << "=" << rep.d_lower;
    else
        std::cout << " in [" << rep.d_lower << ", " << rep.d_upper << "]";
    std::cout << " (" << rep.distance_strategy << ") "
              << classification_name(rep.classification) << "\n";
}

int cmd_build(const JobConfig& cfg) {
    for (int t : t_values(cfg)) {
        QcCode code = build_from(cfg, t);
        CodeReport rep = make_report(code, cfg.budget);
        print_report(cfg, code, rep);
        if (!cfg.out.empty()) {
            std::string path = cfg.out;
            if (cfg.t_range) path += ".t" + std::to_string(t);
            std::ofstream os(path);
            if (!os) throw std::invalid_argument("cannot write " + path);
            write_matrix_file(os, code);
        }
    }
    return 0;
}

int cmd_verify_qc(const JobConfig& cfg) {
    bool all = true;
    for (int t : t_values(cfg)) {
        QcCode code = build_from(cfg, t);
        bool ok = verify_shift_invariance(code);
        all = all && ok;
        std::cout << "t=" << t << " shift-invariant: " << (ok ? "yes" : "NO") << "\n";
    }
    return all ? 0 : 3;
}

int cmd_distance(const JobConfig& cfg) {
    for (int t : t_values(cfg)) {
        QcCode code = build_from(cfg, t);
        DistanceResult d = minimum_distance(code, cfg.budget);
        std::cout << "t=" << t << " [" << code.n << ", " << code.k << "] d";
        if (d.exact)
            std::cout << "=" << d.lower;
        else
            std::cout << " in [" << d.lower << ", " << d.upper << "]";
        std::cout << " (" << d.strategy << ")\n";
    }
    return 0;
}

OrbitCensus predict_census(const KummerCurve& curve, const Automorphism& sigma) {
    const FieldCtx& F = *curve.field();
    switch (curve.family()) {
        case CurveFamily::Hermitian:
            return census_hermitian(curve.preset_q(), sigma);
        case CurveFamily::NormTrace:
            return census_norm_trace(F.subfield_order(), F.ext_degree(), sigma);
        case CurveFamily::HermitianQuotient:
            return census_hermitian_quotient(curve.preset_q(), curve.m()).census;
        default:
            break;
    }
    if (sigma.beta().is_zero() && sigma.gamma().is_zero() && sigma.eps().is_zero()) {
        if (sigma.delta() == F.one()) return census_diagonal_kummer(curve);
        if (curve.m() == 2 && curve.d() % 2 == 1) {
            int g = curve.genus();
            // y^{2g+1} + 1 over a square field: the maximality census applies
            const Poly& B = curve.B();
            bool plus_one = B.front() == F.one();
            bool pure = plus_one;
            for (int i = 1; i < curve.d() && pure; ++i) pure = B[i].is_zero();
            auto q = static_cast<std::uint64_t>(std::llround(std::sqrt(double(F.order()))));
            if (pure && q * q == F.order() && q % 2 == 1 && (q + 1) % (2 * g + 1) == 0)
                return census_maximal_hyperelliptic(q, g).census;
            if (g == 2 && sigma.order() == 10 && plus_one) return census_genus2_order10(curve.field());
            if (g == 2 && sigma.order() == 8) return census_genus2_order8(curve.field());
        }
    }
    throw std::domain_error("no census prediction covers this curve/automorphism");
}

int cmd_census(const JobConfig& cfg) {
    const Automorphism& sigma = need_sigma(cfg);
    OrbitCensus census = predict_census(sigma.curve(), sigma);
    OrbitPartition part = orbit_partition(sigma, enumerate_points(sigma.curve()));
    CrosscheckReport rep = crosscheck(census, part);
    for (const std::string& n : rep.notes) std::cout << "note: " << n << "\n";
    for (const std::string& d : rep.diffs) std::cout << "diff: " << d << "\n";
    std::cout << "crosscheck: " << (rep.pass ? "pass" : "FAIL") << "\n";
    return rep.pass ? 0 : 3;
}

int cmd_reproduce(const std::string& id, bool list) {
    if (list) {
        for (const std::string& p : preset_ids()) std::cout << p << "\n";
        return 0;
    }
    if (id.empty()) throw std::invalid_argument("a preset id is required (or --list)");
    ReproResult res = run_reproduction(id);
    for (const std::string& line : res.lines) std::cout << line << "\n";
    std::cout << id << ": " << (res.pass ? "pass" : "FAIL") << "\n";
    return res.pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-cyclic code construction from curves x^m = B(y)"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string repro_id;
    bool repro_list = false;

    CLI::App* points = app.add_subcommand("points", "enumerate rational points");
    CLI::App* orbits = app.add_subcommand("orbits", "orbit partition under the automorphism");
    CLI::App* basis = app.add_subcommand("basis", "monomial basis of the evaluation space");
    CLI::App* build = app.add_subcommand("build", "build the code and report its parameters");
    CLI::App* verify = app.add_subcommand("verify-qc", "check blockwise shift invariance");
    CLI::App* distance = app.add_subcommand("distance", "minimum distance bounds or exact value");
    CLI::App* census = app.add_subcommand("census", "crosscheck predicted vs computed orbits");
    CLI::App* repro = app.add_subcommand("reproduce", "re-run a recorded instance end to end");
    for (CLI::App* c : {points, orbits, basis, build, verify, distance, census})
        add_common(c, opts);
    repro->add_option("id", repro_id, "preset id");
    repro->add_flag("--list", repro_list, "list preset ids");

    try {
        app.parse(argc, argv);
        if (points->parsed()) return cmd_points(resolve(opts));
        if (orbits->parsed()) return cmd_orbits(resolve(opts));
        if (basis->parsed()) return cmd_basis(resolve(opts));
        if (build->parsed()) return cmd_build(resolve(opts));
        if (verify->parsed()) return cmd_verify_qc(resolve(opts));
        if (distance->parsed()) return cmd_distance(resolve(opts));
        if (census->parsed()) return cmd_census(resolve(opts));
        if (repro->parsed()) return cmd_reproduce(repro_id, repro_list);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
