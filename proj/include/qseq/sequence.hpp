#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qseq {

enum class Alphabet : std::uint8_t { binary = 2, quaternary = 4 };

constexpr unsigned modulus(Alphabet a) { return static_cast<unsigned>(a); }

inline std::string to_string(Alphabet a) { return a == Alphabet::binary ? "binary" : "quaternary"; }

/// One period of a sequence over Z_2 or Z_4, read cyclically.
class PeriodicSeq {
public:
    using Symbol = std::uint8_t;

    PeriodicSeq(Alphabet alphabet, std::vector<Symbol> symbols)
        : alphabet_(alphabet), symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw ParameterError("sequence period must be at least 1");
        for (auto s : symbols_)
            if (s >= qseq::modulus(alphabet_))
                throw ValidationError("symbol " + std::to_string(s) + " outside Z_" +
                                      std::to_string(qseq::modulus(alphabet_)));
    }

    /// All-zero sequence of the given period.
    static PeriodicSeq zeros(Alphabet alphabet, std::size_t period) {
        return PeriodicSeq(alphabet, std::vector<Symbol>(period, 0));
    }

    /// Parses the "0123" text form: one symbol per character, index 0 first.
    static PeriodicSeq parse(std::string_view text, Alphabet alphabet) {
        std::vector<Symbol> out;
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || static_cast<unsigned>(c - '0') >= qseq::modulus(alphabet))
                throw ValidationError(std::string("invalid ") + qseq::to_string(alphabet) + " symbol '" + c + "'");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
        if (out.empty()) throw ValidationError("empty sequence");
        return PeriodicSeq(alphabet, std::move(out));
    }

    std::string to_string() const {
        std::string out(symbols_.size(), '0');
        std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                       [](Symbol s) { return static_cast<char>('0' + s); });
        return out;
    }

    Alphabet alphabet() const { return alphabet_; }
    unsigned modulus() const { return qseq::modulus(alphabet_); }
    std::size_t period() const { return symbols_.size(); }
    std::span<const Symbol> symbols() const { return symbols_; }

    Symbol operator[](std::size_t t) const { return symbols_[t]; }
    /// Cyclic access: index taken modulo the period.
    Symbol at(std::size_t t) const { return symbols_[t % symbols_.size()]; }

    friend bool operator==(const PeriodicSeq&, const PeriodicSeq&) = default;

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

// Gray map: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).

inline std::pair<std::uint8_t, std::uint8_t> gray(std::uint8_t symbol) {
    switch (symbol) {
    case 0: return {0, 0};
    case 1: return {0, 1};
    case 2: return {1, 1};
    case 3: return {1, 0};
    }
    throw ValidationError("gray: symbol outside Z_4");
}

inline std::uint8_t gray_inverse(std::uint8_t b1, std::uint8_t b2) {
    if (b1 > 1 || b2 > 1) throw ValidationError("gray_inverse: bits must be 0 or 1");
    return static_cast<std::uint8_t>(b1 ? (b2 ? 2 : 3) : (b2 ? 1 : 0));
}

/// u(t) = gray_inverse(s1(t), s2(t)).
inline PeriodicSeq gray_combine(const PeriodicSeq& s1, const PeriodicSeq& s2) {
    if (s1.alphabet() != Alphabet::binary || s2.alphabet() != Alphabet::binary)
        throw ParameterError("gray_combine needs two binary sequences");
    if (s1.period() != s2.period()) throw ParameterError("gray_combine: period mismatch");
    std::vector<PeriodicSeq::Symbol> out(s1.period());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = gray_inverse(s1[t], s2[t]);
    return PeriodicSeq(Alphabet::quaternary, std::move(out));
}

/// Splits a quaternary sequence into its Gray component pair.
inline std::pair<PeriodicSeq, PeriodicSeq> gray_split(const PeriodicSeq& u) {
    if (u.alphabet() != Alphabet::quaternary) throw ParameterError("gray_split needs a quaternary sequence");
    std::vector<PeriodicSeq::Symbol> a(u.period()), b(u.period());
    for (std::size_t t = 0; t < u.period(); ++t) std::tie(a[t], b[t]) = gray(u[t]);
    return {PeriodicSeq(Alphabet::binary, std::move(a)), PeriodicSeq(Alphabet::binary, std::move(b))};
}

/// Left cyclic shift: result(t) = s(t + tau mod N).
inline PeriodicSeq shift(const PeriodicSeq& s, std::size_t tau) {
    const auto n = s.period();
    std::vector<PeriodicSeq::Symbol> out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = s[(t + tau) % n];
    return PeriodicSeq(s.alphabet(), std::move(out));
}

inline PeriodicSeq complement(const PeriodicSeq& s) {
    if (s.alphabet() != Alphabet::binary) throw ParameterError("complement is only defined for binary sequences");
    std::vector<PeriodicSeq::Symbol> out(s.symbols().begin(), s.symbols().end());
    for (auto& b : out) b ^= 1u;
    return PeriodicSeq(Alphabet::binary, std::move(out));
}

/// Binary sequence of period n whose support is exactly `support` (entries taken mod n).
inline PeriodicSeq characteristic(std::span<const std::size_t> support, std::size_t n) {
    std::vector<PeriodicSeq::Symbol> out(n, 0);
    for (auto t : support) out[t % n] = 1;
    return PeriodicSeq(Alphabet::binary, std::move(out));
}

inline std::vector<std::size_t> support(const PeriodicSeq& s) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < s.period(); ++t)
        if (s[t] != 0) out.push_back(t);
    return out;
}

// ---- balance ---------------------------------------------------------------

enum class BalanceClass { balanced, almost_balanced, unbalanced };

inline std::string to_string(BalanceClass c) {
    switch (c) {
    case BalanceClass::balanced: return "balanced";
    case BalanceClass::almost_balanced: return "almost_balanced";
    case BalanceClass::unbalanced: return "unbalanced";
    }
    return "?";
}

struct BalanceReport {
    std::vector<std::size_t> counts;  // counts[k] = #{t : s(t) = k}
    BalanceClass classification = BalanceClass::unbalanced;

    std::size_t spread() const {
        auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        return *hi - *lo;
    }
};

inline BalanceClass classify_spread(std::size_t spread) {
    if (spread <= 1) return BalanceClass::balanced;
    if (spread <= 2) return BalanceClass::almost_balanced;
    return BalanceClass::unbalanced;
}

inline BalanceReport balance_counts(const PeriodicSeq& s) {
    BalanceReport r;
    r.counts.assign(s.modulus(), 0);
    for (auto v : s.symbols()) ++r.counts[v];
    r.classification = classify_spread(r.spread());
    return r;
}

// ---- CRT interleaving Z_2 x Z_p -> Z_{2p} -------------------------------------

/// The unique t in Z_{2p} with t = u (mod 2) and t = v (mod p); p odd.
inline std::size_t crt_interleave(unsigned u, std::size_t v, std::size_t p) {
    if (p % 2 == 0) throw ParameterError("crt_interleave: p must be odd");
    v %= p;
    return (v % 2 == (u & 1u)) ? v : v + p;
}

inline std::pair<unsigned, std::size_t> crt_split(std::size_t t, std::size_t p) {
    return {static_cast<unsigned>(t % 2), t % p};
}

/// Image of a set of (u, v) pairs under the CRT map, sorted.
inline std::vector<std::size_t> crt_interleave(std::span<const std::pair<unsigned, std::size_t>> pairs,
                                               std::size_t p) {
    std::vector<std::size_t> out;
    out.reserve(pairs.size());
    for (auto [u, v] : pairs) out.push_back(crt_interleave(u, v, p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qseq
