#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstddef>
#include <map>
#include <vector>

#include "errors.hpp"
#include "gaussian.hpp"
#include "sequence.hpp"

namespace qseq {

/// Value distribution of R(tau) over tau = 0..N-1.
using Profile = std::map<GaussianInt, std::size_t>;

/// Periodic correlation sum_t w^(s1(t) - s2(t + tau)), w = -1 (binary) or i (quaternary).
inline GaussianInt correlation(const PeriodicSeq& s1, const PeriodicSeq& s2, std::size_t tau) {
    if (s1.alphabet() != s2.alphabet()) throw ParameterError("correlation: alphabet mismatch");
    if (s1.period() != s2.period()) throw ParameterError("correlation: period mismatch");
    const auto n = s1.period();
    const unsigned m = s1.modulus();
    const unsigned mask = m - 1;  // m is a power of two
    std::array<std::int64_t, 4> hits{};
    tau %= n;
    for (std::size_t t = 0, u = tau; t < n; ++t) {
        ++hits[(s1[t] + m - s2[u]) & mask];
        if (++u == n) u = 0;
    }
    if (m == 2) return {hits[0] - hits[1], 0};
    return {hits[0] - hits[2], hits[1] - hits[3]};
}

inline GaussianInt autocorrelation(const PeriodicSeq& s, std::size_t tau) { return correlation(s, s, tau); }

/// R_s(tau) for every tau in [0, N).
inline std::vector<GaussianInt> autocorrelation_values(const PeriodicSeq& s) {
    std::vector<GaussianInt> out(s.period());
    for (std::size_t tau = 0; tau < out.size(); ++tau) out[tau] = autocorrelation(s, tau);
    return out;
}

inline Profile autocorrelation_profile(const PeriodicSeq& s) {
    Profile out;
    for (std::size_t tau = 0; tau < s.period(); ++tau) ++out[autocorrelation(s, tau)];
    return out;
}

/// Out-of-phase values only (tau != 0).
inline Profile out_of_phase_profile(const PeriodicSeq& s) {
    Profile out;
    for (std::size_t tau = 1; tau < s.period(); ++tau) ++out[autocorrelation(s, tau)];
    return out;
}

/// max_{0<tau<N} |R(tau)|^2; 0 for period 1.
inline std::int64_t rmax_squared(const PeriodicSeq& s) {
    std::int64_t best = 0;
    for (std::size_t tau = 1; tau < s.period(); ++tau) best = std::max(best, autocorrelation(s, tau).norm());
    return best;
}

/// Optimal out-of-phase value sets for binary sequences, keyed by N mod 4.
inline std::vector<std::int64_t> optimal_binary_values(std::size_t n) {
    switch (n % 4) {
    case 0: return {0, -4};
    case 1: return {1, -3};
    case 2: return {-2, 2};
    default: return {-1};
    }
}

inline bool is_optimal_binary_value(std::size_t n, const GaussianInt& r) {
    if (!r.is_real()) return false;
    for (auto v : optimal_binary_values(n))
        if (r.re == v) return true;
    return false;
}

/// Every out-of-phase autocorrelation value lies in the optimal set for N mod 4.
inline bool has_optimal_autocorrelation(const PeriodicSeq& s) {
    if (s.alphabet() != Alphabet::binary) throw ParameterError("optimal autocorrelation is a binary notion");
    for (std::size_t tau = 1; tau < s.period(); ++tau)
        if (!is_optimal_binary_value(s.period(), autocorrelation(s, tau))) return false;
    return true;
}

/// Autocorrelation of gray_combine(s1, s2) from the binary correlations of the pair:
/// R_u = (R_s1 + R_s2)/2 + (i/2)(R_s1,s2 - R_s2,s1).
/// Computed doubled; both halves must be even.
inline GaussianInt krone_sarwate_check(const PeriodicSeq& s1, const PeriodicSeq& s2, std::size_t tau) {
    if (s1.alphabet() != Alphabet::binary || s2.alphabet() != Alphabet::binary)
        throw ParameterError("krone_sarwate_check needs binary sequences");
    if (s1.period() != s2.period()) throw ParameterError("krone_sarwate_check: period mismatch");
    const auto twice_re = autocorrelation(s1, tau).re + autocorrelation(s2, tau).re;
    const auto twice_im = correlation(s1, s2, tau).re - correlation(s2, s1, tau).re;
    if (twice_re % 2 != 0 || twice_im % 2 != 0)
        throw InternalError("krone_sarwate_check: half-integer result");
    return {twice_re / 2, twice_im / 2};
}

}  // namespace qseq
