#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qseq;

namespace {

Profile measured_order8_profile(std::int64_t p) {
    const auto q = static_cast<std::size_t>((p - 1) / 4);
    return {{{p, 0}, 1}, {{-1, 0}, q}, {{-3, 0}, 2 * q}, {{3, 0}, q}};
}

bool all_out_of_phase_in(const PeriodicSeq& s, std::initializer_list<std::int64_t> values) {
    for (std::size_t tau = 1; tau < s.period(); ++tau) {
        const auto r = autocorrelation(s, tau);
        if (r.im != 0 || std::find(values.begin(), values.end(), r.re) == values.end()) return false;
    }
    return true;
}

}  // namespace

TEST(Order8, ExampleString) {
    const auto u = build_order8(17, 3);
    EXPECT_EQ(u.to_string(), "02012331001332102");
    EXPECT_EQ(balance_counts(u).counts, (std::vector<std::size_t>{5, 4, 4, 4}));
}

TEST(Order8, MeasuredProfile) {
    EXPECT_EQ(autocorrelation_profile(build_order8(17, 3)), measured_order8_profile(17));
    for (auto g : all_primitive_roots(97)) {
        const auto u = build_order8(97, g);
        EXPECT_EQ(autocorrelation_profile(u), measured_order8_profile(97)) << g;
        EXPECT_EQ(balance_counts(u).counts, (std::vector<std::size_t>{25, 24, 24, 24}));
    }
}

TEST(Order8, Inadmissible) {
    EXPECT_THROW(build_order8(13), AdmissibilityError);
    EXPECT_THROW(build_order8(113), AdmissibilityError);  // 1 mod 16 but not x^2+16
    EXPECT_THROW(build_order8(15), AdmissibilityError);
}

TEST(TangLindner, OddFMeasuredProfile) {
    const auto u = build_tang_lindner(13, 2, {1, 2, 3});
    const Profile want{{{13, 0}, 1}, {{-1, 2}, 3}, {{-1, -2}, 3}, {{-1, 0}, 6}};
    EXPECT_EQ(autocorrelation_profile(u), want);
    EXPECT_EQ(balance_counts(u).counts, (std::vector<std::size_t>{4, 3, 3, 3}));
}

TEST(TangLindner, EvenFProfile) {
    const Profile want{{{17, 0}, 1}, {{-1, 0}, 8}, {{1, 0}, 4}, {{-3, 0}, 4}};
    EXPECT_EQ(autocorrelation_profile(build_tang_lindner(17, 3, {1, 2, 3})), want);
}

TEST(TangLindner, ZeroPlacementKeepsProfile) {
    for (std::uint64_t p : {13u, 17u, 29u, 41u}) {
        const auto a = build_tang_lindner(p, {}, {1, 2, 3});
        const auto b = build_tang_lindner(p, {}, {1, 2, 3}, ZeroPlacement::in_c1);
        EXPECT_EQ(a[0], 0);
        EXPECT_EQ(b[0], 1);
        EXPECT_EQ(autocorrelation_profile(a), autocorrelation_profile(b));
    }
}

TEST(TangLindner, Errors) {
    EXPECT_THROW(build_tang_lindner(13, {}, {1, 1, 3}), ParameterError);
    EXPECT_THROW(build_tang_lindner(11, {}, {1, 2, 3}), AdmissibilityError);
}

// Which triples reach the two-level distributions. Triples with i - l = 2 (mod 4) do for
// every root. Past p = 5 any other triple only does so when |b| = 2, with steps
// (j-i, l-j) in {(2,1),(3,2)} for b = 2 and in {(1,2),(2,3)} for b = -2.
TEST(TangLindner, VerifiedTriples) {
    for (std::uint64_t p = 5; p <= 100; p += 4) {
        if (!is_prime(p)) continue;
        const auto q = static_cast<std::size_t>((p - 1) / 4);
        const auto pp = static_cast<std::int64_t>(p);
        const Profile even{{{pp, 0}, 1}, {{-1, 0}, 2 * q}, {{1, 0}, q}, {{-3, 0}, q}};
        const Profile odd{{{pp, 0}, 1}, {{-1, 2}, q}, {{-1, -2}, q}, {{-1, 0}, 2 * q}};
        for (auto g : all_primitive_roots(p)) {
            const auto b = order4_formula_table(CyclotomicSystem(p, 4, g)).b;
            for (unsigned i = 0; i < 4; ++i)
                for (unsigned j = 0; j < 4; ++j)
                    for (unsigned l = 0; l < 4; ++l) {
                        const Triple t{i, j, l};
                        if (!t.distinct()) continue;
                        const auto prof = autocorrelation_profile(build_tang_lindner(p, g, t));
                        const bool hit = prof == (q % 2 ? odd : even);
                        if (tang_lindner_distribution_verified(t)) {
                            EXPECT_TRUE(hit) << p << " g=" << g << " " << t.to_string();
                        } else if (p > 5) {
                            const auto d1 = (t.j + 4 - t.i) % 4, d2 = (t.l + 4 - t.j) % 4;
                            const bool plus = (d1 == 2 && d2 == 1) || (d1 == 3 && d2 == 2);
                            const bool minus = (d1 == 1 && d2 == 2) || (d1 == 2 && d2 == 3);
                            EXPECT_EQ(hit, (b == 2 && plus) || (b == -2 && minus))
                                << p << " g=" << g << " " << t.to_string();
                        }
                    }
        }
    }
}

TEST(Chung, ExampleString) {
    const auto s0 = PeriodicSeq::parse("1010001101", Alphabet::binary);
    EXPECT_EQ(chung_quaternary(s0, PairingVariant::shift_complement).to_string(), "2031002312");
}

TEST(Chung, Trivial) {
    const auto u = chung_quaternary(PeriodicSeq::parse("00", Alphabet::binary), PairingVariant::shift_only);
    EXPECT_EQ(u.to_string(), "00");
    EXPECT_EQ(autocorrelation_profile(u), (Profile{{{2, 0}, 2}}));
    EXPECT_THROW(chung_quaternary(PeriodicSeq::parse("010", Alphabet::binary), PairingVariant::shift_only),
                 ParameterError);
}

TEST(Chung, PreservesAutocorrelation) {
    for (std::size_t n = 4; n <= 64; n += 2) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto s0 = testutil::random_seq(Alphabet::binary, n);
            for (auto v : {PairingVariant::shift_only, PairingVariant::shift_complement})
                ASSERT_EQ(autocorrelation_values(chung_quaternary(s0, v)), autocorrelation_values(s0));
        }
    }
}

TEST(PairingBalance, Predictions) {
    // balanced s0
    EXPECT_EQ(predict_pairing_balance(PeriodicSeq::parse("1010001101", Alphabet::binary)), BalanceClass::balanced);
    EXPECT_EQ(predict_pairing_balance(PeriodicSeq::parse("111000111000", Alphabet::binary)),
              BalanceClass::almost_balanced);
    // almost balanced s0
    EXPECT_EQ(predict_pairing_balance(PeriodicSeq::parse("11110000111100", Alphabet::binary)),
              BalanceClass::almost_balanced);
    EXPECT_EQ(predict_pairing_balance(PeriodicSeq::parse("11111000", Alphabet::binary)), std::nullopt);
    EXPECT_THROW(predict_pairing_balance(PeriodicSeq::parse("111111", Alphabet::binary)), AdmissibilityError);
}

// Exhaustive over small periods: wherever the prediction applies it matches both pairings.
TEST(PairingBalance, ExhaustiveOptimalInputs) {
    std::size_t applicable = 0;
    for (std::size_t n = 4; n <= 16; n += 2) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t t = 0; t < n; ++t) v[t] = (bits >> t) & 1u;
            const PeriodicSeq s0(Alphabet::binary, v);
            if (!pairing_balance_applicable(s0)) continue;
            const auto want = predict_pairing_balance(s0);
            if (!want) continue;
            ++applicable;
            for (auto var : {PairingVariant::shift_only, PairingVariant::shift_complement})
                ASSERT_EQ(balance_counts(chung_quaternary(s0, var)).classification, *want) << s0.to_string();
        }
    }
    EXPECT_GT(applicable, 100u);
}

TEST(Dhm, ExampleString) {
    const auto s = build_dhm(5, 2, {0, 1, 2});
    EXPECT_EQ(s.to_string(), "1010001101");
    EXPECT_EQ(support(s).size(), 5u);
    EXPECT_EQ(balance_counts(s).classification, BalanceClass::balanced);
}

TEST(Dhm, Parameters) {
    const auto d5 = dhm_parameters(5, 2);
    EXPECT_TRUE(d5.a_list);
    EXPECT_TRUE(d5.b_list);
    EXPECT_EQ(d5.triples.size(), 8u);
    const auto d13 = dhm_parameters(13, 2);
    EXPECT_EQ(d13.a, -3);
    EXPECT_EQ(d13.b, -1);
    EXPECT_FALSE(d13.a_list);
    EXPECT_THROW(dhm_parameters(13, 2).triples.at(4), std::out_of_range);
    EXPECT_THROW(dhm_parameters(17), AdmissibilityError);
    EXPECT_THROW(dhm_parameters(61), AdmissibilityError);  // 61 = 25 + 36
    EXPECT_THROW(build_dhm(13, 2, {0, 1, 2}), ParameterError);
}

// (0,1,2) sits in the literal b=1 list but is not optimal at p=13 under any root.
TEST(Dhm, LiteralListTripleNotOptimal) {
    for (auto g : all_primitive_roots(13)) {
        const auto s = build_dhm(13, g, {0, 1, 2}, false);
        EXPECT_EQ(out_of_phase_profile(s), (Profile{{{-6, 0}, 6}, {{-2, 0}, 13}, {{6, 0}, 6}}));
    }
}

TEST(Dhm, ActiveListsOptimal) {
    for (std::uint64_t p = 5; p <= 200; p += 8) {
        if (!is_prime(p)) continue;
        for (auto g : all_primitive_roots(p)) {
            DhmParameters d;
            try {
                d = dhm_parameters(p, g);
            } catch (const AdmissibilityError&) {
                break;
            }
            for (const auto& t : d.triples) {
                const auto s = build_dhm(p, g, t);
                EXPECT_TRUE(all_out_of_phase_in(s, {-2, 2})) << p << " g=" << g << " " << t.to_string();
                EXPECT_EQ(support(s).size(), p);
            }
        }
    }
}

TEST(Shen, ExampleString) {
    EXPECT_EQ(build_shen(5, 2, {0, 1, 2}).to_string(), "2031002312");
}

TEST(Shen, SpecialPoints) {
    const CyclotomicSystem sys(13, 4, 2);
    for (const auto& t : dhm_parameters(13, 2).triples) {
        const auto h = shen_sets(sys, t);
        EXPECT_TRUE(std::binary_search(h[2].begin(), h[2].end(), 0u));
        EXPECT_TRUE(std::binary_search(h[0].begin(), h[0].end(), 13u));
    }
}

TEST(Shen, Equivalence) {
    for (std::uint64_t p : {5u, 13u, 29u}) {
        for (auto g : all_primitive_roots(p)) {
            const auto r = verify_shen_equivalence(p, g);
            EXPECT_TRUE(r.pass()) << p << " g=" << g;
            EXPECT_EQ(r.triples.size(), p == 5 ? 8u : 4u);
        }
    }
}
