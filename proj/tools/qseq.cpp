// qseq: construct, analyze, verify and scan cyclotomic low-correlation sequences.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseq/qseq.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qseq;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

json profile_json(const Profile& prof) {
    json arr = json::array();
    for (const auto& [v, c] : prof) arr.push_back({{"re", v.re}, {"im", v.im}, {"count", c}});
    return arr;
}

struct Analysis {
    PeriodicSeq seq;
    BalanceReport balance;
    Profile profile;
    std::int64_t rmax_sq = 0;
    std::size_t lincomp = 0;
    std::string minpoly;
};

Analysis analyze_seq(const PeriodicSeq& s) {
    return {s, balance_counts(s), autocorrelation_profile(s), rmax_squared(s), linear_complexity(s),
            minimal_polynomial_text(s)};
}

const char* field_name(const PeriodicSeq& s) { return s.alphabet() == Alphabet::binary ? "F2" : "F4"; }

json analysis_json(const Analysis& a) {
    return {{"sequence", a.seq.to_string()},
            {"alphabet", to_string(a.seq.alphabet())},
            {"period", a.seq.period()},
            {"balance", {{"counts", a.balance.counts}, {"class", to_string(a.balance.classification)}}},
            {"autocorrelation", profile_json(a.profile)},
            {"rmax_sq", a.rmax_sq},
            {"linear_complexity", {{"field", field_name(a.seq)}, {"L", a.lincomp}, {"minpoly", a.minpoly}}}};
}

void print_analysis(const Analysis& a) {
    std::cout << "sequence  " << a.seq.to_string() << '\n';
    std::cout << "alphabet  " << to_string(a.seq.alphabet()) << ", period " << a.seq.period() << '\n';
    std::cout << "counts    " << counts_string(a.balance.counts) << " (" << to_string(a.balance.classification)
              << ")\n";
    std::cout << "profile   " << to_string(a.profile) << '\n';
    std::cout << "rmax^2    " << a.rmax_sq << '\n';
    std::cout << "L(" << field_name(a.seq) << ")     " << a.lincomp << '\n';
    std::cout << "minpoly   " << a.minpoly << '\n';
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json report_json(const VerificationReport& r, const VerifyOptions& opt) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"check", c.check},
                          {"claim", c.claim},
                          {"params", c.params},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
    return {{"schema", "qseq.verify/1"},
            {"suite", r.suite},
            {"version", version},
            {"timestamp", utc_timestamp()},
            {"options", {{"max_p", opt.max_p}, {"deep", opt.deep}}},
            {"summary", {{"total", r.checks.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
            {"checks", checks}};
}

Alphabet pick_alphabet(const std::string& name, const std::string& text) {
    if (name == "binary") return Alphabet::binary;
    if (name == "quaternary") return Alphabet::quaternary;
    return text.find_first_of("23") == std::string::npos ? Alphabet::binary : Alphabet::quaternary;
}

struct ScanRow {
    std::string family;
    std::uint64_t p;
    std::size_t period;
    std::uint64_t generator;
    std::string indices;
    std::int64_t rmax_sq;
    std::string balance;
    std::size_t lincomp_f4;
};

ScanRow scan_row(const std::string& family, std::uint64_t p, std::uint64_t g, const std::string& ijl,
                 const PeriodicSeq& s) {
    // lincomp_f4 is the F4 complexity; binary sequences embed into F4 without change of L
    return {family, p, s.period(), g, ijl, rmax_squared(s), to_string(balance_counts(s).classification),
            minimal_polynomial_f4(s).L};
}

std::vector<ScanRow> run_scan(const std::string& family, std::uint64_t lo, std::uint64_t hi,
                              std::optional<std::uint64_t> generator, std::optional<Triple> ijl) {
    std::vector<ScanRow> rows;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p) {
        if (!is_prime(p)) continue;
        const auto g = generator && is_primitive_root(*generator, p) ? *generator : find_primitive_root(p);
        if (family == "order8") {
            if (!order8_admissible(static_cast<std::int64_t>(p)).admissible) continue;
            rows.push_back(scan_row(family, p, g, "", build_order8(p, g)));
        } else if (family == "tang-lindner") {
            if (p % 4 != 1) continue;
            const auto t = ijl.value_or(Triple{1, 2, 3});
            rows.push_back(scan_row(family, p, g, t.to_string(), build_tang_lindner(p, g, t)));
        } else if (family == "dhm" || family == "shen") {
            if (p % 8 != 5) continue;
            std::optional<DhmParameters> params;
            try {
                params = dhm_parameters(p, g);
            } catch (const AdmissibilityError&) {
                continue;
            }
            for (const auto& t : params->triples) {
                if (ijl && !(t == *ijl)) continue;
                const auto s = family == "dhm" ? build_dhm(p, g, t) : build_shen(p, g, t);
                rows.push_back(scan_row(family, p, g, t.to_string(), s));
            }
        } else {
            throw ParameterError("unknown scan family '" + family + "'");
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "family,p,period,generator,indices,rmax_sq,balance,lincomp_f4\n";
    for (const auto& r : rows)
        os << r.family << ',' << r.p << ',' << r.period << ',' << r.generator << ',' << r.indices << ','
           << r.rmax_sq << ',' << r.balance << ',' << r.lincomp_f4 << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclotomic quaternary and binary sequence toolkit"};
    app.require_subcommand(1);

    bool json_out = false;

    auto* gen = app.add_subcommand("gen", "Build a sequence from a construction spec");
    std::string spec_text;
    gen->add_option("spec", spec_text, "construction spec, e.g. order8:p=17:g=3")->required();
    gen->add_flag("--json", json_out, "emit JSON");
    std::optional<std::uint64_t> gen_generator;
    gen->add_option("--generator", gen_generator, "primitive root (overrides g= in the spec)");
    gen->footer(std::string("spec grammar:\n") + spec_grammar);

    auto* analyze = app.add_subcommand("analyze", "Analyze a sequence given as a digit string");
    std::string seq_text, alphabet_name = "auto";
    analyze->add_option("sequence", seq_text, "symbols, e.g. 2031002312")->required();
    analyze->add_option("-a,--alphabet", alphabet_name, "binary, quaternary or auto")
        ->check(CLI::IsMember({"auto", "binary", "quaternary"}));
    analyze->add_flag("--json", json_out, "emit JSON");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    VerifyOptions vopt;
    std::string report_path;
    std::optional<std::uint64_t> verify_generator;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-p", vopt.max_p, "largest prime to check")->capture_default_str();
    verify->add_flag("--deep", vopt.deep, "include p=641 and p=2417");
    verify->add_option("--generator", verify_generator, "restrict to one primitive root where valid");
    verify->add_option("-o,--output", report_path, "write the JSON report to this path");
    verify->add_flag("--json", json_out, "print the JSON report to stdout");

    auto* scan = app.add_subcommand("scan", "Tabulate a family over a prime range");
    std::string family;
    std::uint64_t min_p = 1, max_p = 100;
    std::string csv_path, ijl_text;
    std::optional<std::uint64_t> scan_generator;
    scan->add_option("family", family, "order8, tang-lindner, dhm or shen")
        ->required()
        ->check(CLI::IsMember({"order8", "tang-lindner", "dhm", "shen"}));
    scan->add_option("--min-p", min_p, "smallest p")->capture_default_str();
    scan->add_option("--max-p", max_p, "largest p")->capture_default_str();
    scan->add_option("--generator", scan_generator, "primitive root where valid (default: smallest)");
    scan->add_option("--ijl", ijl_text, "restrict to one index triple");
    scan->add_option("--csv", csv_path, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen) {
            ConstructionSpec spec;
            try {
                spec = parse_spec(spec_text);
            } catch (const ParameterError& e) {
                std::cerr << "error: " << e.what() << "\nspec grammar:\n" << spec_grammar << '\n';
                return exit_usage;
            }
            if (gen_generator) spec.generator = gen_generator;
            const auto s = build(spec);
            const auto a = analyze_seq(s);
            if (json_out) {
                json j{{"schema", "qseq.gen/1"}, {"spec", to_string(resolve(spec))}};
                j.update(analysis_json(a));
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "spec      " << to_string(resolve(spec)) << '\n';
                print_analysis(a);
            }
            return exit_ok;
        }
        if (*analyze) {
            const auto s = PeriodicSeq::parse(seq_text, pick_alphabet(alphabet_name, seq_text));
            const auto a = analyze_seq(s);
            if (json_out) {
                json j{{"schema", "qseq.analysis/1"}};
                j.update(analysis_json(a));
                std::cout << j.dump(2) << '\n';
            } else {
                print_analysis(a);
            }
            return exit_ok;
        }
        if (*verify) {
            vopt.generator = verify_generator;
            const auto rep = run_suite(suite, vopt);
            const auto j = report_json(rep, vopt);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) {
                    std::cerr << "error: cannot write " << report_path << '\n';
                    return exit_usage;
                }
                out << j.dump(2) << '\n';
            }
            if (json_out) {
                std::cout << j.dump(2) << '\n';
            } else {
                for (const auto& c : rep.checks) {
                    if (c.pass) continue;
                    std::cout << "FAIL " << c.check << " [" << c.params << "] " << c.claim << "\n     expected "
                              << c.expected << "\n     actual   " << c.actual << '\n';
                }
                std::cout << rep.suite << ": " << rep.passed() << "/" << rep.checks.size() << " checks passed\n";
            }
            return rep.ok() ? exit_ok : exit_check_failed;
        }
        if (*scan) {
            std::optional<Triple> ijl;
            if (!ijl_text.empty()) ijl = parse_spec("tl:p=5:ijl=" + ijl_text).indices;
            const auto rows = run_scan(family, min_p, max_p, scan_generator, ijl);
            if (csv_path.empty()) {
                write_csv(std::cout, rows);
            } else {
                std::ofstream out(csv_path);
                if (!out) {
                    std::cerr << "error: cannot write " << csv_path << '\n';
                    return exit_usage;
                }
                write_csv(out, rows);
            }
            return exit_ok;
        }
    } catch (const std::invalid_argument& e) {  // parameter and validation errors
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {  // inadmissible parameters
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
