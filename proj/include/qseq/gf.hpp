#pragma once

#include <cstdint>
#include <ostream>

#include "errors.hpp"

namespace qseq {

/// Element of F_2.
struct GF2 {
    std::uint8_t v = 0;

    constexpr GF2() = default;
    constexpr explicit GF2(unsigned bit) : v(static_cast<std::uint8_t>(bit & 1u)) {}

    static constexpr GF2 zero() { return GF2(0); }
    static constexpr GF2 one() { return GF2(1); }
    static constexpr const char* name() { return "F2"; }

    constexpr bool is_zero() const { return v == 0; }
    constexpr GF2 inverse() const {
        if (v == 0) throw InternalError("GF2: inverse of zero");
        return *this;
    }
    constexpr char symbol() const { return v ? '1' : '0'; }

    friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend constexpr GF2 operator-(GF2 a, GF2 b) { return a + b; }
    friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
    friend constexpr bool operator==(GF2, GF2) = default;
};

/// Element of F_4 = F_2[mu]/(mu^2 + mu + 1). Bit 1 holds the mu coefficient:
/// 0 -> 0, 1 -> 1, 2 -> mu, 3 -> mu + 1.
struct GF4 {
    std::uint8_t v = 0;

    constexpr GF4() = default;
    constexpr explicit GF4(unsigned bits) : v(static_cast<std::uint8_t>(bits & 3u)) {}

    static constexpr GF4 zero() { return GF4(0); }
    static constexpr GF4 one() { return GF4(1); }
    static constexpr GF4 mu() { return GF4(2); }
    static constexpr GF4 mu_plus_one() { return GF4(3); }
    static constexpr const char* name() { return "F4"; }

    constexpr bool is_zero() const { return v == 0; }
    constexpr GF4 inverse() const {
        // 1 -> 1, mu -> mu + 1, mu + 1 -> mu
        constexpr std::uint8_t inv[4] = {0, 1, 3, 2};
        if (v == 0) throw InternalError("GF4: inverse of zero");
        return GF4(inv[v]);
    }
    /// Text symbol: 0, 1, m (mu), M (mu + 1).
    constexpr char symbol() const {
        constexpr char s[4] = {'0', '1', 'm', 'M'};
        return s[v];
    }

    friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(a.v ^ b.v); }
    friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
    friend constexpr GF4 operator*(GF4 a, GF4 b) {
        constexpr std::uint8_t table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return GF4(table[a.v][b.v]);
    }
    GF4& operator+=(GF4 o) { v ^= o.v; return *this; }
    friend constexpr bool operator==(GF4, GF4) = default;
};

inline std::ostream& operator<<(std::ostream& os, GF2 a) { return os << a.symbol(); }
inline std::ostream& operator<<(std::ostream& os, GF4 a) { return os << a.symbol(); }

/// Embedding F_2 -> F_4.
constexpr GF4 lift(GF2 a) { return GF4(a.v); }

}  // namespace qseq
