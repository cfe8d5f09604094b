#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "correlation.hpp"
#include "cyclotomy.hpp"
#include "lincomp.hpp"

namespace qseq {

inline constexpr const char* version = "0.1.0";

struct CheckRecord {
    std::string check;
    std::string claim;
    std::string params;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return c.pass; }));
    }
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
    std::uint64_t max_p = 100;
    bool deep = false;                     // adds p = 641 and 2417 where relevant
    std::optional<std::uint64_t> generator;  // restrict to one root where the suite iterates roots
    std::uint64_t seed = 20240601;
};

inline std::string to_string(const Profile& prof) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [v, c] : prof) {
        if (!first) os << ", ";
        first = false;
        os << v << ':' << c;
    }
    os << '}';
    return os.str();
}

inline std::string counts_string(const std::vector<std::size_t>& counts) {
    std::string out = "[";
    for (std::size_t k = 0; k < counts.size(); ++k) out += (k ? "," : "") + std::to_string(counts[k]);
    return out + "]";
}

/// Stated distribution for the order-8 family.
inline Profile order8_stated_profile(std::int64_t p) {
    return {{{p, 0}, 1}, {{-1, 0}, static_cast<std::size_t>((p - 1) / 8)},
            {{-3, 0}, static_cast<std::size_t>((p - 1) / 2)}, {{3, 0}, static_cast<std::size_t>(3 * (p - 1) / 8)}};
}

/// Stated distributions for the order-4 pairs, by parity of f = (p-1)/4.
inline Profile tang_lindner_stated_profile(std::int64_t p) {
    const auto q = static_cast<std::size_t>((p - 1) / 4);
    if (q % 2 == 0) return {{{p, 0}, 1}, {{-1, 0}, 2 * q}, {{1, 0}, q}, {{-3, 0}, q}};
    return {{{p, 0}, 1}, {{-1, 2}, q}, {{1, 2}, q}, {{-1, 0}, 2 * q}};
}

/// N_0 = (p+3)/4 and N_1 = N_2 = N_3 = (p-1)/4.
inline std::vector<std::size_t> stated_quaternary_counts(std::uint64_t p) {
    return {(p + 3) / 4, (p - 1) / 4, (p - 1) / 4, (p - 1) / 4};
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t hi, std::function<bool(std::uint64_t)> keep) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= hi; p += 2)
        if (is_prime(p) && keep(p)) out.push_back(p);
    return out;
}

namespace detail {

inline std::vector<std::uint64_t> roots_for(std::uint64_t p, const VerifyOptions& opt, bool all) {
    if (opt.generator && is_primitive_root(*opt.generator, p)) return {*opt.generator};
    if (!all) return {find_primitive_root(p)};
    return all_primitive_roots(p);
}

inline std::string pg(std::uint64_t p, std::uint64_t g) {
    return "p=" + std::to_string(p) + " g=" + std::to_string(g);
}

inline std::vector<std::uint64_t> order8_primes(const VerifyOptions& opt) {
    const auto hi = opt.deep ? std::max<std::uint64_t>(opt.max_p, 2417) : opt.max_p;
    return primes_up_to(hi, [](std::uint64_t p) { return order8_admissible(static_cast<std::int64_t>(p)).admissible; });
}

}  // namespace detail

inline VerificationReport verify_order8(const VerifyOptions& opt) {
    VerificationReport rep{"order8", {}};
    if (opt.max_p >= 17) {
        const auto u = build_order8(17, 3);
        rep.checks.push_back({"example_string", "order-8 example sequence at p=17", "p=17 g=3",
                              "02012331001332102", u.to_string(), u.to_string() == "02012331001332102"});
    }
    for (auto p : detail::order8_primes(opt)) {
        for (auto g : detail::roots_for(p, opt, p <= 97)) {
            const auto u = build_order8(p, g);
            const auto prof = autocorrelation_profile(u);
            const auto want = order8_stated_profile(static_cast<std::int64_t>(p));
            rep.checks.push_back({"profile", "order-8 autocorrelation distribution", detail::pg(p, g),
                                  to_string(want), to_string(prof), prof == want});
            const auto counts = balance_counts(u).counts;
            const auto want_counts = stated_quaternary_counts(p);
            rep.checks.push_back({"balance", "order-8 symbol counts", detail::pg(p, g), counts_string(want_counts),
                                  counts_string(counts), counts == want_counts});
            const bool real = std::all_of(prof.begin(), prof.end(), [](auto& kv) { return kv.first.is_real(); });
            rep.checks.push_back({"real_values", "order-8 out-of-phase values are real", detail::pg(p, g), "true",
                                  real ? "true" : "false", real});
        }
    }
    return rep;
}

inline VerificationReport verify_tang_lindner(const VerifyOptions& opt) {
    VerificationReport rep{"tang-lindner", {}};
    for (auto p : primes_up_to(opt.max_p, [](std::uint64_t p) { return p % 4 == 1; })) {
        for (auto g : detail::roots_for(p, opt, true)) {
            for (const auto& t : tang_lindner_listed_triples(p)) {
                const auto u = build_tang_lindner(p, g, t);
                const auto params = detail::pg(p, g) + " ijl=" + t.to_string();
                const auto prof = autocorrelation_profile(u);
                const auto want = tang_lindner_stated_profile(static_cast<std::int64_t>(p));
                rep.checks.push_back({"profile", "order-4 pair autocorrelation distribution", params, to_string(want),
                                      to_string(prof), prof == want});
                const auto counts = balance_counts(u).counts;
                const auto want_counts = stated_quaternary_counts(p);
                rep.checks.push_back({"balance", "order-4 pair symbol counts", params, counts_string(want_counts),
                                      counts_string(counts), counts == want_counts});
            }
        }
    }
    return rep;
}

inline VerificationReport verify_chung(const VerifyOptions& opt) {
    VerificationReport rep{"chung", {}};
    std::mt19937_64 rng(opt.seed);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t n = 4; n <= 64; n += 2) {
        for (auto variant : {PairingVariant::shift_only, PairingVariant::shift_complement}) {
            std::size_t bad = 0;
            const std::size_t trials = 50;
            for (std::size_t k = 0; k < trials; ++k) {
                std::vector<PeriodicSeq::Symbol> v(n);
                for (auto& b : v) b = bit(rng);
                const PeriodicSeq s0(Alphabet::binary, v);
                if (autocorrelation_values(chung_quaternary(s0, variant)) != autocorrelation_values(s0)) ++bad;
            }
            rep.checks.push_back({"correlation_preserved", "pairing preserves autocorrelation pointwise",
                                  "N=" + std::to_string(n) + " variant=" + to_string(variant) + " trials=" +
                                      std::to_string(trials),
                                  "0 mismatches", std::to_string(bad) + " mismatches", bad == 0});
        }
    }
    // balance prediction on DHM inputs
    for (auto p : primes_up_to(opt.max_p, [](std::uint64_t p) { return p % 8 == 5; })) {
        std::optional<DhmParameters> params;
        try {
            params = dhm_parameters(p, opt.generator && is_primitive_root(*opt.generator, p) ? opt.generator
                                                                                            : std::nullopt);
        } catch (const AdmissibilityError&) {
            continue;
        }
        for (const auto& t : params->triples) {
            const auto s0 = build_dhm(p, params->generator, t);
            if (!pairing_balance_applicable(s0)) continue;
            const auto want = predict_pairing_balance(s0);
            if (!want) continue;
            for (auto variant : {PairingVariant::shift_only, PairingVariant::shift_complement}) {
                const auto got = balance_counts(chung_quaternary(s0, variant)).classification;
                rep.checks.push_back({"balance_prediction", "balance class after pairing",
                                      detail::pg(p, params->generator) + " ijl=" + t.to_string() +
                                          " variant=" + to_string(variant),
                                      to_string(*want), to_string(got), got == *want});
            }
        }
    }
    return rep;
}

inline VerificationReport verify_shen(const VerifyOptions& opt) {
    VerificationReport rep{"shen-equiv", {}};
    for (auto p : primes_up_to(opt.max_p, [](std::uint64_t p) { return p % 8 == 5; })) {
        for (auto g : detail::roots_for(p, opt, true)) {
            ShenEquivalenceReport r;
            try {
                r = verify_shen_equivalence(p, g);
            } catch (const AdmissibilityError&) {
                break;
            }
            for (const auto& c : r.triples) {
                const auto params = detail::pg(p, g) + " ijl=" + c.triple.to_string();
                auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
                rep.checks.push_back({"sets", "intersection sets equal paired DHM level sets", params, "true",
                                      flag(c.sets_equal), c.sets_equal});
                rep.checks.push_back({"sequence", "Shen sequence equals paired DHM sequence", params, "true",
                                      flag(c.sequence_equal), c.sequence_equal});
                rep.checks.push_back({"shape", "H_k built from one class on each half", params, "true",
                                      flag(c.shape_ok), c.shape_ok});
                rep.checks.push_back({"balanced", "Shen sequence balanced", params, "true", flag(c.balanced),
                                      c.balanced});
                rep.checks.push_back({"optimal", "out-of-phase values in {-2, 2}", params, "true", flag(c.optimal),
                                      c.optimal});
            }
        }
    }
    return rep;
}

inline VerificationReport verify_lincomp(const VerifyOptions& opt) {
    VerificationReport rep{"lincomp", {}};
    for (auto p : primes_up_to(opt.max_p, [](std::uint64_t p) { return p % 4 == 1; })) {
        const auto g = detail::roots_for(p, opt, false).front();
        const auto want = predicted_tang_lindner_complexity(p);
        for (const auto& t : tang_lindner_listed_triples(p)) {
            const auto got = linear_complexity(build_tang_lindner(p, g, t));
            rep.checks.push_back({"tl_complexity", "F4 linear complexity of order-4 pairs",
                                  detail::pg(p, g) + " ijl=" + t.to_string(), std::to_string(want),
                                  std::to_string(got), got == want});
        }
    }
    for (auto p : detail::order8_primes(opt)) {
        if (p > 641 && !opt.deep) continue;
        const auto g = detail::roots_for(p, opt, false).front();
        const auto got = linear_complexity(build_order8(p, g));
        rep.checks.push_back({"order8_complexity", "F4 linear complexity of order-8 sequences", detail::pg(p, g),
                              std::to_string((p - 1) / 2), std::to_string(got), got == (p - 1) / 2});
    }
    std::mt19937_64 rng(opt.seed);
    std::size_t bad2 = 0, bad4 = 0;
    const std::size_t trials = 100;
    for (std::size_t k = 0; k < trials; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 128)(rng);
        std::vector<GF2> a(n);
        std::vector<GF4> b(n);
        for (auto& x : a) x = GF2(static_cast<unsigned>(rng()));
        for (auto& x : b) x = GF4(static_cast<unsigned>(rng()));
        if (berlekamp_massey(a).minpoly != minimal_polynomial(a).minpoly) ++bad2;
        if (berlekamp_massey(b).minpoly != minimal_polynomial(b).minpoly) ++bad4;
    }
    rep.checks.push_back({"bm_vs_gcd", "Berlekamp-Massey agrees with the gcd minimal polynomial",
                          "field=F2 trials=" + std::to_string(trials), "0 mismatches",
                          std::to_string(bad2) + " mismatches", bad2 == 0});
    rep.checks.push_back({"bm_vs_gcd", "Berlekamp-Massey agrees with the gcd minimal polynomial",
                          "field=F4 trials=" + std::to_string(trials), "0 mismatches",
                          std::to_string(bad4) + " mismatches", bad4 == 0});
    return rep;
}

inline VerificationReport verify_cyclonumbers(const VerifyOptions& opt) {
    VerificationReport rep{"cyclonumbers", {}};
    for (unsigned e : {2u, 4u, 8u}) {
        for (auto p : primes_up_to(opt.max_p, [e](std::uint64_t p) { return (p - 1) % e == 0; })) {
            const CyclotomicSystem sys(p, e, opt.generator && is_primitive_root(*opt.generator, p)
                                                 ? opt.generator
                                                 : std::nullopt);
            const auto t = cyclotomic_table(sys);
            const bool ok = satisfies_cyclotomic_identities(t, sys);
            rep.checks.push_back({"identities", "row sums and symmetries of cyclotomic numbers",
                                  "e=" + std::to_string(e) + " " + detail::pg(p, sys.generator()), "true",
                                  ok ? "true" : "false", ok});
            if (e != 4) continue;
            std::string actual = "match";
            bool match = true;
            try {
                (void)order4_formula_table(sys);
            } catch (const ConventionError& err) {
                actual = err.what();
                match = false;
            }
            rep.checks.push_back({"order4_formula", "closed-form order-4 cyclotomic numbers",
                                  detail::pg(p, sys.generator()), "match", actual, match});
        }
    }
    return rep;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"order8", "tang-lindner", "chung", "shen-equiv",
                                                "lincomp", "cyclonumbers", "all"};
    return names;
}

inline VerificationReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "order8") return verify_order8(opt);
    if (name == "tang-lindner") return verify_tang_lindner(opt);
    if (name == "chung") return verify_chung(opt);
    if (name == "shen-equiv") return verify_shen(opt);
    if (name == "lincomp") return verify_lincomp(opt);
    if (name == "cyclonumbers") return verify_cyclonumbers(opt);
    if (name == "all") {
        VerificationReport all{"all", {}};
        for (const auto& n : suite_names()) {
            if (n == "all") continue;
            auto r = run_suite(n, opt);
            for (auto& c : r.checks) {
                c.check = n + "/" + c.check;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace qseq
