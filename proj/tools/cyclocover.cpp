// cyclocover: homology of cyclic covers from chain complexes over F[t, 1/t].

#include "cyclocover/builtins.hpp"
#include "cyclocover/cover.hpp"
#include "cyclocover/errors.hpp"
#include "cyclocover/homology.hpp"
#include "cyclocover/json_io.hpp"
#include "cyclocover/mv_propagator.hpp"
#include "cyclocover/random_objects.hpp"
#include "cyclocover/vanishing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cyclocover;
using io::json;

namespace {

constexpr std::size_t kMaxCoverDegree = 4096;

enum Exit { kOk = 0, kVerification = 1, kUsage = 2 };

struct RunConfig {
    std::string command;
    std::string input;
    std::string field = "q";
    bool field_given = false;
    std::size_t degree = 1;
    bool degree_given = false;
    std::string d_range = "1..12";
    std::size_t d_max = 30;
    std::uint64_t seed = 1;
    std::string json_path;
    bool oracle_only = false;
    bool formula_only = false;
    unsigned r = 1;
    std::int64_t n = 4;
    std::string axioms_path;
    std::size_t count = 20;
};

std::vector<std::size_t> parse_d_range(const std::string& text) {
    auto parse_one = [&](const std::string& s) -> std::size_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("--d expects n or a..b, got '" + text + "'");
        }
        const unsigned long long v = std::stoull(s);
        if (v == 0) throw InputError("--d values must be positive");
        if (v > kMaxCoverDegree) throw InputError("--d values are bounded by " + std::to_string(kMaxCoverDegree));
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_one(text)};
    const std::size_t a = parse_one(text.substr(0, dots));
    const std::size_t b = parse_one(text.substr(dots + 2));
    if (a > b) throw InputError("--d range " + text + " is empty");
    std::vector<std::size_t> ds;
    for (std::size_t d = a; d <= b; ++d) ds.push_back(d);
    return ds;
}

std::optional<Field> field_override(const RunConfig& cfg) {
    if (!cfg.field_given) return std::nullopt;
    return Field::parse(cfg.field);
}

ChainComplexOverR load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InputError("--input is required");
    return io::load_complex(cfg.input, field_override(cfg));
}

void emit(const RunConfig& cfg, const json& doc) {
    if (cfg.json_path.empty()) return;
    if (cfg.json_path == "-") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(cfg.json_path);
    if (!out) throw InputError("cannot write " + cfg.json_path);
    out << doc.dump(2) << "\n";
}

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    return s.str();
}

std::string describe(const ModuleDecomposition& d) {
    std::ostringstream s;
    s << "free rank " << d.free_rank << ", divisors [";
    for (std::size_t i = 0; i < d.divisors.size(); ++i) s << (i ? ", " : "") << d.divisors[i].to_string();
    s << "]";
    return s.str();
}

int cmd_homology(const RunConfig& cfg) {
    const auto c = load(cfg);
    json doc{{"field", c.field().to_string()}, {"degrees", json::array()}};
    std::vector<std::size_t> degrees;
    if (cfg.degree_given) {
        degrees.push_back(cfg.degree);
    } else {
        for (std::size_t k = 0; k <= c.top_degree(); ++k) degrees.push_back(k);
    }
    for (std::size_t k : degrees) {
        const auto dec = homology_module(c, k);
        std::cout << "H_" << k << ": " << describe(dec) << "\n";
        json entry = io::to_json(dec);
        entry["degree"] = k;
        doc["degrees"].push_back(entry);
    }
    emit(cfg, doc);
    return kOk;
}

int cmd_cover(const RunConfig& cfg) {
    if (cfg.oracle_only && cfg.formula_only) throw InputError("--oracle-only and --formula-only exclude each other");
    const auto ds = parse_d_range(cfg.d_range);
    const auto c = load(cfg);
    const Routes routes = cfg.oracle_only ? Routes::oracle_only : cfg.formula_only ? Routes::formula_only : Routes::both;
    const auto reports = cover_reports(c, ds, routes);
    json doc = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << "d=" << r.d;
        if (r.betti_formula) std::cout << "  formula: " << join(*r.betti_formula);
        if (r.betti_oracle) std::cout << "  oracle: " << join(*r.betti_oracle);
        if (!r.consistent()) {
            std::cout << "  MISMATCH";
            ok = false;
        }
        std::cout << "\n";
        doc.push_back(io::to_json(r));
    }
    emit(cfg, doc);
    return ok ? kOk : kVerification;
}

int cmd_certificate(const RunConfig& cfg) {
    const auto c = load(cfg);
    const auto cert = vanishing_certificate(c, cfg.degree, cfg.d_max);
    std::cout << "degree " << cert.k << ": base betti " << cert.base_betti << ", modulus " << cert.modulus.modulus
              << "\n";
    std::cout << "verified " << cert.verified.size() << " coprime covers up to d=" << cfg.d_max << "\n";
    for (const auto& w : cert.witnesses) {
        std::cout << "  d=" << w.d << " b=" << w.cover_betti << (w.equivalent ? "" : "  (vanishing not transferred)")
                  << "\n";
    }
    emit(cfg, io::to_json(cert));
    return kOk;
}

int cmd_ppower(const RunConfig& cfg) {
    const auto c = load(cfg);
    const std::uint64_t p = c.field().characteristic();
    if (p == 0) throw InputError("ppower needs a complex over F_p (use --field fp:<p>)");
    std::vector<std::size_t> degrees;
    if (cfg.degree_given) {
        degrees.push_back(cfg.degree);
    } else {
        for (std::size_t k = 0; k <= c.top_degree(); ++k) degrees.push_back(k);
    }
    json doc = json::array();
    bool ok = true;
    for (std::size_t k : degrees) {
        const auto rep = p_power_equivalence(c, p, cfg.r, k);
        std::cout << "k=" << k << " p^r=" << rep.cover_degree << " base " << rep.base_dim << " cover " << rep.cover_dim
                  << (rep.equivalent ? "" : "  MISMATCH") << "\n";
        ok = ok && rep.equivalent;
        doc.push_back(io::to_json(rep));
    }
    emit(cfg, doc);
    return ok ? kOk : kVerification;
}

int cmd_mv_derive(const RunConfig& cfg) {
    const auto ds = parse_d_range(cfg.d_range);
    std::vector<mv::Axiom> axioms = mv::singer_axioms(cfg.n);
    if (!cfg.axioms_path.empty()) {
        std::ifstream in(cfg.axioms_path);
        if (!in) throw InputError("cannot read axioms file " + cfg.axioms_path);
        std::stringstream buf;
        buf << in.rdbuf();
        axioms = io::axioms_from_json(io::parse_document(buf.str()));
    }
    json doc = json::array();
    for (std::size_t d : ds) {
        const auto trace = mv::derive_singer(cfg.n, d, axioms);
        const std::string replay = trace.engine.replay();
        if (!replay.empty()) {
            std::cerr << "replay failed: " << replay << "\n";
            return kVerification;
        }
        std::cout << "n=" << cfg.n << " d=" << d << ": " << trace.target << " vanishes at k in {"
                  << [&] {
                         std::ostringstream s;
                         for (std::size_t i = 0; i < trace.vanishing_degrees.size(); ++i) {
                             s << (i ? "," : "") << trace.vanishing_degrees[i];
                         }
                         return s.str();
                     }()
                  << "}\n";
        json entry = io::to_json(trace);
        entry["d"] = d;
        doc.push_back(entry);
    }
    if (ds.size() == 1) std::cout << ds.size() << " trace(s), " << doc[0]["facts"].size() << " facts\n";
    emit(cfg, doc);
    return kOk;
}

int cmd_oracle_check(const RunConfig& cfg) {
    const auto ds = parse_d_range(cfg.d_range);
    const auto c = load(cfg);
    std::size_t mismatches = 0;
    for (const auto& r : cover_reports(c, ds, Routes::both)) {
        if (!r.consistent()) {
            ++mismatches;
            std::cout << "d=" << r.d << " formula " << join(*r.betti_formula) << " oracle " << join(*r.betti_oracle)
                      << "\n";
        }
    }
    std::cout << (mismatches == 0 ? "ok" : "FAILED") << ": " << ds.size() - mismatches << "/" << ds.size()
              << " covers agree\n";
    return mismatches == 0 ? kOk : kVerification;
}

int cmd_selftest(const RunConfig& cfg) {
    const auto ds = parse_d_range(cfg.d_range);
    const Field field = Field::parse(cfg.field);
    std::cout << "selftest seed=" << cfg.seed << " count=" << cfg.count << " field=" << field.to_string() << "\n";
    Rng rng(cfg.seed);
    std::size_t failures = 0;
    auto check = [&](const std::string& label, const ChainComplexOverR& c) {
        for (const auto& r : cover_reports(c, ds, Routes::both)) {
            if (!r.consistent()) {
                ++failures;
                std::cout << label << " d=" << r.d << " MISMATCH\n";
            }
        }
    };
    for (const auto& name : builtin_names()) check(name, builtin_complex(name, field));
    for (std::size_t i = 0; i < cfg.count; ++i) check("random#" + std::to_string(i), random_complex(field, rng));
    std::cout << (failures == 0 ? "ok" : "FAILED") << "\n";
    return failures == 0 ? kOk : kVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology of cyclic covers via modules over F[t, 1/t]"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto input_opts = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "builtin name or JSON file (complex or presentation)");
        sub->add_option("--field", cfg.field, "q or fp:<p>")->each([&](const std::string&) { cfg.field_given = true; });
        sub->add_option("--json", cfg.json_path, "write the JSON report here ('-' for stdout)");
    };
    auto degree_opt = [&](CLI::App* sub) {
        sub->add_option("--degree", cfg.degree, "homological degree k")->each([&](const std::string&) {
            cfg.degree_given = true;
        });
    };

    auto* homology = app.add_subcommand("homology", "module decomposition of H_k(C; F[t, 1/t])");
    input_opts(homology);
    degree_opt(homology);

    auto* cover = app.add_subcommand("cover", "Betti numbers of the cyclic covers X_d");
    input_opts(cover);
    cover->add_option("--d", cfg.d_range, "n or a..b")->capture_default_str();
    auto* oracle_flag = cover->add_flag("--oracle-only", cfg.oracle_only);
    cover->add_flag("--formula-only", cfg.formula_only)->excludes(oracle_flag);

    auto* certificate = app.add_subcommand("certificate", "exceptional modulus with oracle-checked covers");
    input_opts(certificate);
    degree_opt(certificate);
    certificate->add_option("--dmax", cfg.d_max, "largest cover degree to check")->capture_default_str();

    auto* ppower = app.add_subcommand("ppower", "compare H_k(X_1) and H_k(X_{p^r}) over F_p");
    input_opts(ppower);
    degree_opt(ppower);
    ppower->add_option("--r", cfg.r, "exponent r")->capture_default_str();

    auto* mv_derive = app.add_subcommand("mv-derive", "Mayer-Vietoris vanishing derivation for branched covers");
    mv_derive->add_option("--n", cfg.n, "manifold dimension")->capture_default_str();
    mv_derive->add_option("--d", cfg.d_range, "cover degree n or a..b")->default_str("1");
    mv_derive->add_option("--axioms", cfg.axioms_path, "JSON axioms (default: Singer-type axioms)");
    mv_derive->add_option("--json", cfg.json_path, "write the traces here ('-' for stdout)");

    auto* oracle_check = app.add_subcommand("oracle-check", "exit 1 unless both routes agree for every d");
    input_opts(oracle_check);
    oracle_check->add_option("--d", cfg.d_range, "n or a..b")->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "both routes on the builtins and a seeded random corpus");
    selftest->add_option("--field", cfg.field, "q or fp:<p>")->capture_default_str();
    selftest->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    selftest->add_option("--count", cfg.count, "number of random complexes")->capture_default_str();
    selftest->add_option("--d", cfg.d_range, "n or a..b")->capture_default_str();

    // mv-derive defaults to a single cover.
    mv_derive->preparse_callback([&](std::size_t) { cfg.d_range = "1"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*homology) return cmd_homology(cfg);
        if (*cover) return cmd_cover(cfg);
        if (*certificate) return cmd_certificate(cfg);
        if (*ppower) return cmd_ppower(cfg);
        if (*mv_derive) return cmd_mv_derive(cfg);
        if (*oracle_check) return cmd_oracle_check(cfg);
        if (*selftest) return cmd_selftest(cfg);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
