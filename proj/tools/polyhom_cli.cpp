// polyhom: batch front-end for the exact homological-algebra engine.
//
// Subcommands: koszul, filtration, theta, artin-rees, k0-report, suite,
// replay. Exit codes: 0 pass, 1 property failure, 2 parse error, 3 invalid
// module, 4 usage.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyhom/json_io.hpp"
#include "polyhom/suite.hpp"

using namespace polyhom;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitUsage = 4;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseFailure(e.what());
    }
}

/// Polynomial-grammar errors count as parse errors, constructor errors as
/// invalid modules.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        if (msg.rfind("polynomial parse error", 0) == 0 || msg.rfind("FieldSpec", 0) == 0) {
            std::cerr << "parse error: " << msg << "\n";
            return kExitParse;
        }
        std::cerr << "invalid module: " << msg << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

std::string now_string() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int cmd_koszul(const std::string& file, int i, int bound) {
    return guarded([&] {
        const Json j = load_json_file(file);
        const FieldSpec fs = field_of_json(j);
        return with_field(fs, [&](const auto& k) {
            const auto x = graded_presentation_from_json(k, j);
            if (i < 0 || i > x.nvars()) {
                std::cerr << "usage: homology index " << i << " out of range 0.." << x.nvars()
                          << "\n";
                return kExitUsage;
            }
            const auto h = koszul_homology(x, i);
            Json out;
            out["homology_index"] = i;
            out["presentation"] = to_json(k, h);
            Json dims = Json::array();
            for (int m = 0; m <= bound; ++m) dims.push_back(piece(h, m).dim);
            out["dims"] = dims;
            out["torsion_free"] = is_torsion_free(x);
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        });
    });
}

int cmd_filtration(const std::string& file) {
    return guarded([&] {
        const Json j = load_json_file(file);
        const FieldSpec fs = field_of_json(j);
        return with_field(fs, [&](const auto& k) {
            const auto x = graded_presentation_from_json(k, j);
            Json out;
            const auto deg = degree_of(x);
            out["degree"] = deg ? Json(*deg) : Json("-inf");
            out["canonical_epi_bound"] = canonical_epi_bound(x);
            out["kpoly"] = kp_to_string(kpoly(x));
            Json stages = Json::array();
            for (int p = 0; p <= deg.value_or(-1); ++p) {
                Json st;
                st["p"] = p;
                st["stage_kpoly"] = kp_to_string(kpoly(canonical_filtration(x, p).module));
                st["graded_piece_kpoly"] = kp_to_string(kpoly(filtration_graded_piece(x, p)));
                stages.push_back(st);
            }
            out["stages"] = stages;
            const bool additive = check_filtration_additivity(x);
            out["filtration_additivity"] = additive;
            std::cout << out.dump(2) << "\n";
            return additive ? kExitPass : kExitFailure;
        });
    });
}

int cmd_theta(const std::string& file) {
    return guarded([&] {
        const Json j = load_json_file(file);
        const FieldSpec fs = field_of_json(j);
        return with_field(fs, [&](const auto& k) {
            const auto x = graded_presentation_from_json(k, j);
            const auto m = theta(x);
            Json out;
            out["rank"] = rank_class(m);
            Json tors = Json::array();
            for (const auto& d : m.torsion()) tors.push_back(unipoly_to_string(k, d));
            out["torsion"] = tors;
            const auto cert = is_psi_nilpotent(x);
            out["nilpotent"] = cert.has_value();
            if (cert) out["nilpotency_index"] = cert->index;
            std::cout << out.dump(2) << "\n";
            return kExitPass;
        });
    });
}

int cmd_artin_rees(const std::string& file, int bound) {
    return guarded([&] {
        const Json j = load_json_file(file);
        const FieldSpec fs = field_of_json(j.at("x"));
        return with_field(fs, [&](const auto& k) {
            const auto x = endo_module_from_json(k, j.at("x"));
            using FF = std::decay_t<decltype(k)>;
            std::vector<EndoVec<FF>> gens;
            for (const auto& g : j.at("y")) {
                EndoVec<FF> v;
                for (const auto& s : g) v.push_back(parse_unipoly(k, s.get<std::string>()));
                gens.push_back(std::move(v));
            }
            SubmoduleRep<FF> y(x, std::move(gens));
            try {
                const auto n0 = artin_rees_index(x, y, static_cast<std::size_t>(bound));
                Json out;
                out["index"] = n0;
                out["bound"] = bound;
                std::cout << out.dump(2) << "\n";
                return kExitPass;
            } catch (const BoundExceeded& e) {
                std::cerr << e.what() << "\n";
                return kExitFailure;
            }
        });
    });
}

void write_reports(const SuiteReport& report, const std::string& out_prefix) {
    {
        std::ofstream js(out_prefix + ".json");
        js << report.to_json(now_string()).dump(2) << "\n";
    }
    {
        std::ofstream csv(out_prefix + ".csv");
        csv << report.to_csv();
    }
    Json failures = Json::array();
    for (const auto& r : report.records)
        if (!r.pass && !r.instance.is_null()) failures.push_back(r.to_json());
    if (!failures.empty()) {
        std::ofstream fj(out_prefix + "-failures.json");
        fj << failures.dump(2) << "\n";
    }
}

int cmd_k0_report(const std::string& file, const SuiteConfig& cfg, const std::string& out) {
    return guarded([&] {
        std::vector<CheckRecord> records;
        detail::Recorder rec(records);
        if (!file.empty()) {
            const Json j = load_json_file(file);
            const FieldSpec fs = field_of_json(j);
            with_field(fs, [&](const auto& k) {
                const auto x = graded_presentation_from_json(k, j);
                const Json payload{{"kind", "graded"}, {"data", to_json(k, x)}};
                rec.add("kpoly", "input-0", "-", kp_to_string(kpoly(x)), true, payload);
                rec.add_bool("filtration-additivity", "input-0", check_filtration_additivity(x),
                             payload);
                if (is_torsion_free(x))
                    rec.add_bool("tf-decomposition", "input-0", check_tf_decomposition(x),
                                 payload);
                if (x.nvars() == 2) {
                    rec.add_bool("localization-classes", "input-0",
                                 check_localization_classes(x), payload);
                    if (is_psi_nilpotent(x))
                        rec.add_bool("devissage-classes", "input-0", check_devissage_classes(x),
                                     payload);
                }
            });
        } else {
            with_field(cfg.field, [&](const auto& k) {
                detail::FieldPlan<std::decay_t<decltype(k)>> plan{
                    k, cfg.field.to_string(), cfg.instance_count, cfg.max_degree};
                detail::InstanceRegistry<std::decay_t<decltype(k)>> reg;
                SplitMix64 master(cfg.seed);
                const auto sub_seed = master.next();
                detail::run_c11(plan, cfg, sub_seed, rec, reg);
            });
        }
        SuiteReport report;
        report.config = cfg;
        report.records = std::move(records);
        if (!out.empty()) write_reports(report, out);
        std::cout << report.to_csv();
        return report.all_pass() ? kExitPass : kExitFailure;
    });
}

int cmd_suite(const SuiteConfig& cfg, const std::string& out) {
    return guarded([&] {
        const SuiteReport report = run_suite(cfg);
        write_reports(report, out.empty() ? "polyhom-report" : out);
        std::size_t failed = 0;
        for (const auto& r : report.records)
            if (!r.pass) ++failed;
        std::cout << report.records.size() << " checks, " << failed << " failures\n";
        return report.all_pass() ? kExitPass : kExitFailure;
    });
}

int cmd_replay(const std::string& file, const SuiteConfig& cfg) {
    return guarded([&] {
        const Json j = load_json_file(file);
        // accept a single record or an array of records
        const Json records = j.is_array() ? j : Json::array({j});
        bool all = true;
        for (const auto& r : records) {
            const bool pass = replay_record(r, cfg);
            std::cout << r.at("check").get<std::string>() << " "
                      << r.at("instance-id").get<std::string>() << ": "
                      << (pass ? "pass" : "fail") << "\n";
            all = all && pass;
        }
        return all ? kExitPass : kExitFailure;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyhom: exact homological algebra over graded polynomial rings"};
    app.require_subcommand(1);

    std::string file, out;
    int homology_index = 0;
    std::uint64_t seed = 1;
    int count = 50, bound = 16, piece_bound = 12;
    std::string field_str = "F32003";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "PRNG seed");
        sub->add_option("--count", count, "instances per suite");
        sub->add_option("--field", field_str, "coefficient field: Q or F<p>");
        sub->add_option("--bound", bound, "search bound (Artin-Rees)");
        sub->add_option("--out", out, "output path prefix for reports");
    };

    auto* koszul = app.add_subcommand("koszul", "Koszul homology of a graded presentation");
    koszul->add_option("file", file, "presentation JSON")->required();
    koszul->add_option("-i,--index", homology_index, "homology index");
    koszul->add_option("--piece-bound", piece_bound, "dimensions up to this degree");

    auto* filtration = app.add_subcommand("filtration", "canonical filtration report");
    filtration->add_option("file", file, "presentation JSON")->required();

    auto* theta_cmd = app.add_subcommand("theta", "dehomogenization of a two-variable module");
    theta_cmd->add_option("file", file, "presentation JSON")->required();

    auto* ar = app.add_subcommand("artin-rees", "Artin-Rees index of a pair (x, y)");
    ar->add_option("file", file, "pair JSON: {\"x\":module, \"y\":[generators]}")->required();
    ar->add_option("--bound", bound, "search bound");

    auto* k0 = app.add_subcommand("k0-report", "Grothendieck-class checks");
    k0->add_option("file", file, "optional presentation JSON");
    add_common(k0);

    auto* suite = app.add_subcommand("suite", "run the full property suite");
    add_common(suite);

    auto* replay = app.add_subcommand("replay", "re-run serialized failing instances");
    replay->add_option("file", file, "record JSON written by suite")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    SuiteConfig cfg;
    try {
        cfg.seed = seed;
        cfg.instance_count = count;
        cfg.artin_rees_bound = bound;
        cfg.field = FieldSpec::parse(field_str);
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    }

    if (koszul->parsed()) return cmd_koszul(file, homology_index, piece_bound);
    if (filtration->parsed()) return cmd_filtration(file);
    if (theta_cmd->parsed()) return cmd_theta(file);
    if (ar->parsed()) return cmd_artin_rees(file, bound);
    if (k0->parsed()) return cmd_k0_report(file, cfg, out);
    if (suite->parsed()) return cmd_suite(cfg, out);
    if (replay->parsed()) return cmd_replay(file, cfg);
    return kExitUsage;
}
