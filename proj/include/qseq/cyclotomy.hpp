#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qseq {

// ---- prime-field helpers ------------------------------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1u) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1u;
    }
    return result;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Floor-style residue in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

/// Distinct prime factors of n.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline void require_odd_prime(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw ValidationError(std::to_string(p) + " is not an odd prime");
    if (p >= (std::uint64_t{1} << 31)) throw ParameterError("prime must be below 2^31");
}

inline bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
    g %= p;
    if (g == 0) return false;
    for (auto q : prime_factors(p - 1))
        if (pow_mod(g, (p - 1) / q, p) == 1) return false;
    return true;
}

/// Smallest positive primitive root of an odd prime p.
inline std::uint64_t find_primitive_root(std::uint64_t p) {
    require_odd_prime(p);
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) return g;
    return 1;  // unreachable for odd primes; kept for p = 2 style callers
}

inline std::vector<std::uint64_t> all_primitive_roots(std::uint64_t p) {
    require_odd_prime(p);
    std::vector<std::uint64_t> out;
    for (std::uint64_t g = 2; g < p; ++g)
        if (is_primitive_root(g, p)) out.push_back(g);
    return out;
}

// ---- cyclotomic classes ---------------------------------------------------------

/// Partition of Z_p^* into the e cosets D_i = g^i <g^e>.
class CyclotomicSystem {
public:
    /// Builds the order-e classes for prime p. Uses the smallest primitive root unless one is given.
    CyclotomicSystem(std::uint64_t p, unsigned e, std::optional<std::uint64_t> generator = std::nullopt)
        : p_(p), e_(e) {
        require_odd_prime(p);
        if (e == 0 || (p - 1) % e != 0)
            throw ParameterError("order " + std::to_string(e) + " does not divide p-1=" + std::to_string(p - 1));
        if (generator) {
            if (!is_primitive_root(*generator, p))
                throw ValidationError(std::to_string(*generator) + " is not a primitive root mod " +
                                      std::to_string(p));
            generator_ = *generator % p;
        } else {
            generator_ = find_primitive_root(p);
        }
        f_ = static_cast<unsigned>((p - 1) / e);
        index_.assign(p, -1);
        classes_.assign(e, {});
        std::uint64_t x = 1;
        for (std::uint64_t j = 0; j + 1 < p; ++j) {
            const auto cls = static_cast<int>(j % e);
            index_[x] = cls;
            classes_[cls].push_back(x);
            x = mul_mod(x, generator_, p);
        }
        for (auto& c : classes_) std::sort(c.begin(), c.end());
    }

    std::uint64_t p() const { return p_; }
    unsigned order() const { return e_; }
    unsigned cofactor() const { return f_; }
    std::uint64_t generator() const { return generator_; }

    const std::vector<std::uint64_t>& cls(unsigned i) const { return classes_.at(i); }
    const std::vector<std::vector<std::uint64_t>>& classes() const { return classes_; }

    /// Class index of t (taken mod p); nullopt for t = 0.
    std::optional<unsigned> class_of(std::uint64_t t) const {
        const auto i = index_[t % p_];
        if (i < 0) return std::nullopt;
        return static_cast<unsigned>(i);
    }

    /// Lookup table t -> class index, -1 at t = 0.
    const std::vector<int>& index_map() const { return index_; }

private:
    std::uint64_t p_;
    unsigned e_;
    unsigned f_ = 0;
    std::uint64_t generator_ = 0;
    std::vector<std::vector<std::uint64_t>> classes_;
    std::vector<int> index_;
};

// ---- cyclotomic numbers ---------------------------------------------------------

/// e x e table of cyclotomic numbers (i,j) = #{x in D_i : x+1 in D_j}.
struct CycNumTable {
    unsigned order = 0;
    std::vector<std::vector<std::int64_t>> entries;

    std::int64_t operator()(unsigned i, unsigned j) const { return entries[i][j]; }
    friend bool operator==(const CycNumTable&, const CycNumTable&) = default;
};

inline std::int64_t cyclotomic_number(const CyclotomicSystem& sys, unsigned i, unsigned j) {
    if (i >= sys.order() || j >= sys.order()) throw ParameterError("cyclotomic_number: index out of range");
    std::int64_t count = 0;
    for (auto x : sys.cls(i)) {
        const auto next = sys.class_of(x + 1);
        if (next && *next == j) ++count;
    }
    return count;
}

inline CycNumTable cyclotomic_table(const CyclotomicSystem& sys) {
    const auto e = sys.order();
    CycNumTable t{e, std::vector<std::vector<std::int64_t>>(e, std::vector<std::int64_t>(e, 0))};
    const auto& idx = sys.index_map();
    for (std::uint64_t x = 1; x + 1 < sys.p(); ++x) ++t.entries[idx[x]][idx[x + 1]];
    return t;
}

/// Row sums equal f - [p-1 in D_i] and (h,k) = (-h, k-h); plus the f-parity symmetry.
inline bool satisfies_cyclotomic_identities(const CycNumTable& t, const CyclotomicSystem& sys) {
    const auto e = sys.order();
    const auto f = sys.cofactor();
    const auto minus_one = *sys.class_of(sys.p() - 1);
    for (unsigned i = 0; i < e; ++i) {
        std::int64_t row = 0;
        for (unsigned j = 0; j < e; ++j) row += t(i, j);
        if (row != static_cast<std::int64_t>(f) - (i == minus_one ? 1 : 0)) return false;
    }
    for (unsigned h = 0; h < e; ++h) {
        for (unsigned k = 0; k < e; ++k) {
            if (t(h, k) != t((e - h) % e, (k + e - h) % e)) return false;
            if (f % 2 == 0) {
                if (t(h, k) != t(k, h)) return false;
            } else if (e % 2 == 0) {
                if (t(h, k) != t((k + e / 2) % e, (h + e / 2) % e)) return false;
            }
        }
    }
    return true;
}

// ---- quadratic partitions -------------------------------------------------------

enum class QuadraticForm {
    A4B,  // p = a^2 + 4 b^2
    A2B,  // p = a^2 + 2 b^2
    X16,  // p = x^2 + 16
    X4Y,  // p = x^2 + 4 y^2
};

inline std::string to_string(QuadraticForm f) {
    switch (f) {
    case QuadraticForm::A4B: return "a^2+4b^2";
    case QuadraticForm::A2B: return "a^2+2b^2";
    case QuadraticForm::X16: return "x^2+16";
    case QuadraticForm::X4Y: return "x^2+4y^2";
    }
    return "?";
}

/// p = first^2 + k * second^2 with first = 1 (mod 4). `second` is stored non-negative;
/// its sign is generator dependent and resolved by the caller.
struct QuadraticPartition {
    std::int64_t p = 0;
    QuadraticForm form = QuadraticForm::A4B;
    std::int64_t first = 0;
    std::int64_t second = 0;

    std::int64_t weight() const {
        switch (form) {
        case QuadraticForm::A4B:
        case QuadraticForm::X4Y: return 4;
        case QuadraticForm::A2B: return 2;
        case QuadraticForm::X16: return 16;
        }
        return 0;
    }
    bool holds() const {
        const auto s2 = form == QuadraticForm::X16 ? std::int64_t{1} : second * second;
        return first * first + weight() * s2 == p;
    }
};

inline QuadraticPartition solve_partition(std::int64_t p, QuadraticForm form) {
    if (p < 2) throw ParameterError("solve_partition: p must be positive");
    const auto root = isqrt(p);
    for (std::int64_t first = -root; first <= root; ++first) {
        if (mod_floor(first, 4) != 1) continue;
        const auto rest = p - first * first;
        if (rest <= 0) continue;
        if (form == QuadraticForm::X16) {
            if (rest == 16) return {p, form, first, 4};
            continue;
        }
        const std::int64_t k = (form == QuadraticForm::A2B) ? 2 : 4;
        if (rest % k) continue;
        const auto sq = rest / k;
        const auto s = isqrt(sq);
        if (s * s == sq && s > 0) return {p, form, first, s};
    }
    throw NotRepresentable(std::to_string(p) + " has no representation " + to_string(form) +
                           " with first component = 1 (mod 4)");
}

inline std::optional<QuadraticPartition> try_partition(std::int64_t p, QuadraticForm form) {
    try {
        return solve_partition(p, form);
    } catch (const NotRepresentable&) {
        return std::nullopt;
    }
}

/// Admissibility for the order-8 quaternary construction: p = x^2+16 = a^2+2b^2 = 1 (mod 16),
/// x = a = 1 (mod 4), x - a = 4.
struct Order8Admissibility {
    bool admissible = false;
    std::string reason;
    std::int64_t x = 0;
    std::int64_t a = 0;
};

inline Order8Admissibility order8_admissible(std::int64_t p) {
    Order8Admissibility r;
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
        r.reason = std::to_string(p) + " is not an odd prime";
        return r;
    }
    if (p % 16 != 1) {
        r.reason = std::to_string(p) + " is not 1 mod 16";
        return r;
    }
    const auto x16 = try_partition(p, QuadraticForm::X16);
    if (!x16) {
        r.reason = std::to_string(p) + " is not of the form x^2+16";
        return r;
    }
    const auto a2b = try_partition(p, QuadraticForm::A2B);
    if (!a2b) {
        r.reason = std::to_string(p) + " is not of the form a^2+2b^2";
        return r;
    }
    r.x = x16->first;
    r.a = a2b->first;
    if (r.x - r.a != 4) {
        r.reason = "x - a = " + std::to_string(r.x - r.a) + " (need 4)";
        return r;
    }
    r.admissible = true;
    return r;
}

// ---- closed-form order-4 table ---------------------------------------------------

/// Five distinct order-4 cyclotomic values and their layout, for p = a^2 + 4b^2, a = 1 (mod 4).
struct Order4Formula {
    std::int64_t a = 0;
    std::int64_t b = 0;  // signed: the sign that matches brute force for the system's generator
    std::int64_t A = 0, B = 0, C = 0, D = 0, E = 0;
    CycNumTable table;
};

namespace detail {

inline std::optional<std::int64_t> div16(std::int64_t num) {
    if (mod_floor(num, 16) != 0) return std::nullopt;
    return num / 16;
}

inline std::optional<Order4Formula> order4_layout(std::int64_t p, std::int64_t a, std::int64_t b) {
    const bool f_odd = ((p - 1) / 4) % 2 == 1;
    std::array<std::optional<std::int64_t>, 5> v;
    if (f_odd) {
        v = {div16(p - 7 + 2 * a), div16(p + 1 + 2 * a - 8 * b), div16(p + 1 - 6 * a),
             div16(p + 1 + 2 * a + 8 * b), div16(p - 3 - 2 * a)};
    } else {
        v = {div16(p - 11 - 6 * a), div16(p - 3 + 2 * a + 8 * b), div16(p - 3 + 2 * a),
             div16(p - 3 + 2 * a - 8 * b), div16(p + 1 - 2 * a)};
    }
    for (const auto& x : v)
        if (!x) return std::nullopt;
    Order4Formula out{a, b, *v[0], *v[1], *v[2], *v[3], *v[4], {}};
    auto& t = out.table;
    t.order = 4;
    t.entries.assign(4, std::vector<std::int64_t>(4, out.E));
    auto set = [&](std::initializer_list<std::pair<int, int>> cells, std::int64_t value) {
        for (auto [i, j] : cells) t.entries[i][j] = value;
    };
    if (f_odd) {
        set({{0, 0}, {2, 2}, {2, 0}}, out.A);
        set({{0, 1}, {1, 3}, {3, 2}}, out.B);
        set({{1, 2}, {0, 3}, {3, 1}}, out.D);
        set({{0, 2}}, out.C);
    } else {
        set({{0, 0}}, out.A);
        set({{0, 1}, {1, 0}, {3, 3}}, out.B);
        set({{0, 2}, {2, 0}, {2, 2}}, out.C);
        set({{0, 3}, {3, 0}, {1, 1}}, out.D);
    }
    return out;
}

}  // namespace detail

/// Closed-form order-4 cyclotomic numbers with b's sign fixed by agreement with brute force.
inline Order4Formula order4_formula_table(const CyclotomicSystem& sys) {
    if (sys.order() != 4) throw ParameterError("order4_formula_table needs an order-4 system");
    const auto p = static_cast<std::int64_t>(sys.p());
    const auto part = solve_partition(p, QuadraticForm::A4B);
    const auto brute = cyclotomic_table(sys);
    for (std::int64_t sign : {1, -1}) {
        auto cand = detail::order4_layout(p, part.first, sign * part.second);
        if (cand && cand->table == brute) return *cand;
    }
    throw ConventionError("no sign of b reproduces the brute-force order-4 table at p=" + std::to_string(p));
}

/// Signed b of p = a^2 + 4b^2 for this generator (p = 1 mod 4).
inline std::int64_t signed_b(const CyclotomicSystem& order4) { return order4_formula_table(order4).b; }

// ---- order-8 closed forms (cross-check data) -------------------------------------

/// Closed-form order-8 cyclotomic table for p = 1 (mod 16) in the case 2 is not a quartic
/// residue (y = 2 mod 4). x,y from p = x^2+4y^2 and a,b from p = a^2+2b^2, signs as supplied.
/// Returns nullopt when a value is not an integer.
inline std::optional<CycNumTable> order8_formula_table(std::int64_t p, std::int64_t x, std::int64_t y,
                                                       std::int64_t a, std::int64_t b) {
    // Each cell names one of the 15 representative pairs below.
    enum Rep { r00, r01, r02, r03, r04, r05, r06, r07, r12, r13, r14, r15, r16, r24, r25 };
    static constexpr Rep layout[8][8] = {
        {r00, r01, r02, r03, r04, r05, r06, r07}, {r01, r07, r12, r13, r14, r15, r16, r12},
        {r02, r12, r06, r16, r24, r25, r24, r13}, {r03, r13, r16, r05, r15, r25, r25, r14},
        {r04, r14, r24, r15, r04, r14, r24, r15}, {r05, r15, r25, r25, r14, r03, r13, r16},
        {r06, r16, r24, r25, r24, r13, r02, r12}, {r07, r12, r13, r14, r15, r16, r12, r01},
    };
    const std::int64_t times64[15] = {
        p - 23 + 6 * x,          p - 7 + 2 * x + 4 * a,           p - 7 - 2 * x - 8 * a - 16 * y,
        p - 7 + 2 * x + 4 * a,   p - 7 - 10 * x,                  p - 7 + 2 * x + 4 * a,
        p - 7 - 2 * x - 8 * a + 16 * y, p - 7 + 2 * x + 4 * a,    p + 1 - 6 * x + 4 * a,
        p + 1 + 2 * x - 4 * a - 16 * b, p + 1 + 2 * x - 4 * a + 16 * y, p + 1 + 2 * x - 4 * a - 16 * y,
        p + 1 + 2 * x - 4 * a + 16 * b, p + 1 + 6 * x + 8 * a,   p + 1 - 6 * x + 4 * a,
    };
    CycNumTable t{8, std::vector<std::vector<std::int64_t>>(8, std::vector<std::int64_t>(8, 0))};
    for (int h = 0; h < 8; ++h) {
        for (int k = 0; k < 8; ++k) {
            const auto v = times64[layout[h][k]];
            if (mod_floor(v, 64) != 0) return std::nullopt;
            t.entries[h][k] = v / 64;
        }
    }
    return t;
}

}  // namespace qseq
