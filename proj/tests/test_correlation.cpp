#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace qseq;

TEST(Gaussian, Text) {
    EXPECT_EQ(to_string(GaussianInt{3, 0}), "3");
    EXPECT_EQ(to_string(GaussianInt{-1, 2}), "-1+2i");
    EXPECT_EQ(to_string(GaussianInt{1, -2}), "1-2i");
    EXPECT_EQ(to_string(GaussianInt{0, -1}), "-i");
    EXPECT_EQ((GaussianInt{1, 2} * GaussianInt{1, -2}), (GaussianInt{5, 0}));
}

TEST(Correlation, ZeroSequence) {
    auto z = PeriodicSeq::zeros(Alphabet::quaternary, 9);
    for (std::size_t tau = 0; tau < 9; ++tau) EXPECT_EQ(autocorrelation(z, tau), (GaussianInt{9, 0}));
    EXPECT_EQ(autocorrelation_profile(PeriodicSeq::zeros(Alphabet::binary, 4)), (Profile{{{4, 0}, 4}}));
}

TEST(Correlation, InPhase) {
    auto u = PeriodicSeq::parse("02012331001332102", Alphabet::quaternary);
    EXPECT_EQ(autocorrelation(u, 0), (GaussianInt{17, 0}));
}

TEST(Correlation, ShenExampleIsOptimal) {
    auto u = PeriodicSeq::parse("2031002312", Alphabet::quaternary);
    for (std::size_t tau = 1; tau < 10; ++tau) {
        auto r = autocorrelation(u, tau);
        EXPECT_EQ(r.im, 0);
        EXPECT_TRUE(r.re == 2 || r.re == -2) << tau;
    }
    EXPECT_EQ(rmax_squared(u), 4);
}

TEST(Correlation, MismatchRejected) {
    auto a = PeriodicSeq::zeros(Alphabet::binary, 4);
    EXPECT_THROW(correlation(a, PeriodicSeq::zeros(Alphabet::binary, 5), 0), ParameterError);
    EXPECT_THROW(correlation(a, PeriodicSeq::zeros(Alphabet::quaternary, 4), 0), ParameterError);
}

TEST(Correlation, MatchesNaiveOracle) {
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = trial % 2 ? Alphabet::binary : Alphabet::quaternary;
        const std::size_t n = 1 + testutil::rng()() % 60;
        auto s1 = testutil::random_seq(a, n), s2 = testutil::random_seq(a, n);
        for (std::size_t tau = 0; tau < n; ++tau)
            ASSERT_EQ(correlation(s1, s2, tau), testutil::naive_correlation(s1, s2, tau));
    }
}

TEST(CorrelationProperties, ConjugateSymmetry) {
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + testutil::rng()() % 80;
        auto s = testutil::random_seq(Alphabet::quaternary, n);
        for (std::size_t tau = 1; tau < n; ++tau) ASSERT_EQ(autocorrelation(s, n - tau), autocorrelation(s, tau).conj());
    }
}

TEST(CorrelationProperties, PowerIdentity) {
    static const std::int64_t re4[4] = {1, 0, -1, 0}, im4[4] = {0, 1, 0, -1};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + testutil::rng()() % 100;
        auto s = testutil::random_seq(Alphabet::quaternary, n);
        GaussianInt sum{0, 0}, total{0, 0};
        for (auto v : s.symbols()) sum += GaussianInt{re4[v], im4[v]};
        for (auto r : autocorrelation_values(s)) total += r;
        ASSERT_EQ(total, (GaussianInt{sum.norm(), 0}));
    }
}

TEST(CorrelationProperties, ShiftInvariance) {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + testutil::rng()() % 70;
        auto s = testutil::random_seq(Alphabet::quaternary, n);
        const auto prof = autocorrelation_profile(s);
        for (std::size_t d = 0; d < n; ++d) ASSERT_EQ(autocorrelation_profile(shift(s, d)), prof);
    }
}

TEST(KroneSarwate, MatchesGrayCombination) {
    for (std::size_t n = 4; n <= 64; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            auto s1 = testutil::random_seq(Alphabet::binary, n), s2 = testutil::random_seq(Alphabet::binary, n);
            auto u = gray_combine(s1, s2);
            for (std::size_t tau = 0; tau < n; ++tau)
                ASSERT_EQ(krone_sarwate_check(s1, s2, tau), autocorrelation(u, tau)) << n << " " << tau;
        }
    }
}

TEST(KroneSarwate, HalfShiftCancelsImaginaryTerm) {
    for (std::size_t n = 4; n <= 40; n += 2) {
        auto s1 = testutil::random_seq(Alphabet::binary, n);
        auto s2 = shift(s1, n / 2);
        for (std::size_t tau = 0; tau < n; ++tau) {
            EXPECT_EQ(krone_sarwate_check(s1, s2, tau), autocorrelation(s1, tau));
        }
    }
    auto s = testutil::random_seq(Alphabet::binary, 11);
    EXPECT_EQ(krone_sarwate_check(s, s, 0), (GaussianInt{11, 0}));
}

TEST(Optimality, ValueSets) {
    EXPECT_EQ(optimal_binary_values(12), (std::vector<std::int64_t>{0, -4}));
    EXPECT_EQ(optimal_binary_values(7), (std::vector<std::int64_t>{-1}));
    // m-sequence of period 7 has ideal autocorrelation
    EXPECT_TRUE(has_optimal_autocorrelation(PeriodicSeq::parse("1110100", Alphabet::binary)));
    EXPECT_TRUE(has_optimal_autocorrelation(PeriodicSeq::parse("1010001101", Alphabet::binary)));
    EXPECT_FALSE(has_optimal_autocorrelation(PeriodicSeq::parse("1111000000", Alphabet::binary)));
}
