#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "correlation.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "sequence.hpp"

namespace qseq {

/// Ordered index triple (i, j, l) of order-4 cyclotomic classes.
struct Triple {
    unsigned i = 0, j = 0, l = 0;

    bool distinct() const { return i != j && j != l && i != l; }
    std::string to_string() const { return std::to_string(i) + std::to_string(j) + std::to_string(l); }
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline bool contains(const std::vector<Triple>& list, const Triple& t) {
    return std::find(list.begin(), list.end(), t) != list.end();
}

namespace detail {

inline void require_triple(const Triple& t) {
    if (t.i > 3 || t.j > 3 || t.l > 3) throw ParameterError("class indices must lie in 0..3");
    if (!t.distinct()) throw ParameterError("indices (" + t.to_string() + ") must be distinct");
}

}  // namespace detail

// ---- order-8 quaternary sequences --------------------------------------------------

/// Symbol assigned to each order-8 class: C0 = D2 u D6, C1 = D1 u D3, C2 = D0 u D4, C3 = D5 u D7.
inline constexpr std::array<std::uint8_t, 8> order8_class_symbol = {2, 1, 0, 1, 2, 3, 0, 3};

/// Quaternary sequence of period p with u(t) = k on C_k and u(0) = 0.
inline PeriodicSeq build_order8(std::uint64_t p, std::optional<std::uint64_t> generator = std::nullopt) {
    const auto adm = order8_admissible(static_cast<std::int64_t>(p));
    if (!adm.admissible) throw AdmissibilityError(adm.reason);
    const CyclotomicSystem sys(p, 8, generator);
    const auto& idx = sys.index_map();
    std::vector<PeriodicSeq::Symbol> u(p, 0);
    for (std::uint64_t t = 1; t < p; ++t) u[t] = order8_class_symbol[idx[t]];
    return PeriodicSeq(Alphabet::quaternary, std::move(u));
}

// ---- Tang-Lindner order-4 pairs -----------------------------------------------------

/// Where the point t = 0 goes. `zero_symbol` leaves it out of both supports (u(0) = 0);
/// `in_c1` puts it in the second support, giving u(0) = 1.
enum class ZeroPlacement { zero_symbol, in_c1 };

/// u = gray_inverse(s_C0, s_C1) with C0 = D_i u D_j and C1 = D_j u D_l (order 4).
inline PeriodicSeq build_tang_lindner(std::uint64_t p, std::optional<std::uint64_t> generator, Triple t,
                                      ZeroPlacement zero = ZeroPlacement::zero_symbol) {
    require_odd_prime(p);
    if (p % 4 != 1) throw AdmissibilityError(std::to_string(p) + " is not 1 mod 4");
    detail::require_triple(t);
    const CyclotomicSystem sys(p, 4, generator);
    const auto& idx = sys.index_map();
    std::vector<PeriodicSeq::Symbol> u(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) {
        const auto c = static_cast<unsigned>(idx[x]);
        const unsigned b0 = (c == t.i || c == t.j) ? 1 : 0;
        const unsigned b1 = (c == t.j || c == t.l) ? 1 : 0;
        u[x] = gray_inverse(b0, b1);
    }
    if (zero == ZeroPlacement::in_c1) u[0] = gray_inverse(0, 1);
    return PeriodicSeq(Alphabet::quaternary, std::move(u));
}

/// Triples whose distribution is asserted by the construction: (1,2,3) and, when f is even, (1,3,0).
inline std::vector<Triple> tang_lindner_listed_triples(std::uint64_t p) {
    if (((p - 1) / 4) % 2 == 0) return {{1, 2, 3}, {1, 3, 0}};
    return {{1, 2, 3}};
}

/// Triples observed to give the two-level distributions for every generator: i - l = 2 (mod 4).
inline bool tang_lindner_distribution_verified(Triple t) { return t.distinct() && (t.i + 4 - t.l) % 4 == 2; }

// ---- modified Chung pairing -----------------------------------------------------------

enum class PairingVariant { shift_only, shift_complement };

inline std::string to_string(PairingVariant v) { return v == PairingVariant::shift_only ? "so" : "sc"; }

/// u = gray_inverse(s0, s1), s1 = L^{N/2}(s0) or L^{N/2}(complement of s0).
inline PeriodicSeq chung_quaternary(const PeriodicSeq& s0, PairingVariant variant) {
    if (s0.alphabet() != Alphabet::binary) throw ParameterError("pairing needs a binary sequence");
    if (s0.period() % 2) throw ParameterError("pairing needs an even period");
    auto s1 = shift(s0, s0.period() / 2);
    if (variant == PairingVariant::shift_complement) s1 = complement(s1);
    return gray_combine(s0, s1);
}

/// Balance class of the paired sequence predicted from that of s0 and N mod 8.
/// nullopt when no prediction is made (almost balanced s0 with N = 0 mod 8).
inline std::optional<BalanceClass> predict_pairing_balance(const PeriodicSeq& s0) {
    if (s0.alphabet() != Alphabet::binary) throw ParameterError("pairing needs a binary sequence");
    if (s0.period() % 2) throw ParameterError("pairing needs an even period");
    const auto cls = balance_counts(s0).classification;
    const auto r = s0.period() % 8;
    switch (cls) {
    case BalanceClass::balanced:
        return r == 4 ? BalanceClass::almost_balanced : BalanceClass::balanced;
    case BalanceClass::almost_balanced:
        if (r == 0) return std::nullopt;
        return BalanceClass::almost_balanced;
    case BalanceClass::unbalanced: break;
    }
    throw AdmissibilityError("s0 is neither balanced nor almost balanced");
}

/// The prediction is only claimed for (almost) balanced s0 with optimal autocorrelation.
inline bool pairing_balance_applicable(const PeriodicSeq& s0) {
    if (s0.period() % 2) return false;
    if (balance_counts(s0).classification == BalanceClass::unbalanced) return false;
    return has_optimal_autocorrelation(s0);
}

// ---- DHM binary sequences of period 2p --------------------------------------------------

/// Partition data and active triple lists for a prime p = 5 (mod 8).
struct DhmParameters {
    std::uint64_t p = 0;
    std::uint64_t generator = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;  // signed, generator dependent
    bool a_list = false;  // a = 1
    bool b_list = false;  // |b| = 1
    std::vector<Triple> triples;
};

/// Triple lists that yield optimal autocorrelation. For |b| = 1 the list is mirrored
/// (1 <-> 3) when b = -1 for the chosen generator.
inline DhmParameters dhm_parameters(std::uint64_t p, std::optional<std::uint64_t> generator = std::nullopt) {
    require_odd_prime(p);
    if (p % 8 != 5) throw AdmissibilityError(std::to_string(p) + " is not 5 mod 8");
    const CyclotomicSystem sys(p, 4, generator);
    const auto f4 = order4_formula_table(sys);
    DhmParameters d;
    d.p = p;
    d.generator = sys.generator();
    d.a = f4.a;
    d.b = f4.b;
    d.a_list = d.a == 1;
    d.b_list = d.b == 1 || d.b == -1;
    if (!d.a_list && !d.b_list)
        throw AdmissibilityError(std::to_string(p) + " = " + std::to_string(d.a) + "^2 + 4*" +
                                 std::to_string(d.b) + "^2 has neither a = 1 nor |b| = 1");
    if (d.a_list) d.triples.insert(d.triples.end(), {{0, 1, 2}, {0, 3, 2}, {1, 0, 3}, {1, 2, 3}});
    if (d.b == 1) d.triples.insert(d.triples.end(), {{0, 1, 3}, {0, 2, 3}, {1, 2, 0}, {1, 3, 0}});
    if (d.b == -1) d.triples.insert(d.triples.end(), {{0, 3, 1}, {0, 2, 1}, {3, 2, 0}, {3, 1, 0}});
    return d;
}

/// The lists exactly as written alongside the construction (a = 1 and b = 1 labels), unoriented.
inline std::vector<Triple> dhm_literal_triples(std::int64_t a, std::int64_t b) {
    std::vector<Triple> out;
    if (a == 1) out.insert(out.end(), {{0, 1, 3}, {0, 2, 3}, {1, 2, 0}, {1, 3, 0}});
    if (b == 1 || b == -1) out.insert(out.end(), {{0, 1, 2}, {0, 3, 2}, {1, 0, 3}, {1, 2, 3}});
    return out;
}

/// psi(D) for D = {0}x(D_i u D_j) u {1}x(D_j u D_l) u {(0,0)}, sorted.
inline std::vector<std::size_t> dhm_support(const CyclotomicSystem& sys, Triple t) {
    detail::require_triple(t);
    const auto p = sys.p();
    std::vector<std::pair<unsigned, std::size_t>> pairs{{0, 0}};
    for (unsigned c : {t.i, t.j})
        for (auto v : sys.cls(c)) pairs.emplace_back(0, v);
    for (unsigned c : {t.j, t.l})
        for (auto v : sys.cls(c)) pairs.emplace_back(1, v);
    return crt_interleave(pairs, p);
}

/// Binary DHM sequence of period 2p. With `check_list`, the triple must be in the active list.
inline PeriodicSeq build_dhm(std::uint64_t p, std::optional<std::uint64_t> generator, Triple t,
                             bool check_list = true) {
    const auto params = dhm_parameters(p, generator);
    detail::require_triple(t);
    if (check_list && !contains(params.triples, t))
        throw ParameterError("triple (" + t.to_string() + ") is not in the active list for p=" +
                             std::to_string(p) + ", g=" + std::to_string(params.generator));
    const CyclotomicSystem sys(p, 4, params.generator);
    const auto s = dhm_support(sys, t);
    return characteristic(s, 2 * p);
}

// ---- Shen quaternary sequences ---------------------------------------------------------

namespace detail {

using IndexSet = std::vector<std::size_t>;

inline IndexSet intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline IndexSet complement_in(const IndexSet& a, std::size_t n) {
    IndexSet out;
    for (std::size_t t = 0, k = 0; t < n; ++t) {
        if (k < a.size() && a[k] == t) {
            ++k;
            continue;
        }
        out.push_back(t);
    }
    return out;
}

/// {t - p mod 2p : t in a}, sorted.
inline IndexSet translate(const IndexSet& a, std::size_t p) {
    IndexSet out;
    for (auto t : a) out.push_back((t + p) % (2 * p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// H_0..H_3 from the DHM set S = psi(D):
/// H0 = S'n(S-p), H1 = S'n(S'-p), H2 = Sn(S'-p), H3 = Sn(S-p), S' the complement.
inline std::array<std::vector<std::size_t>, 4> shen_sets(const CyclotomicSystem& sys, Triple t) {
    const auto p = sys.p();
    const auto s = dhm_support(sys, t);
    const auto sc = detail::complement_in(s, 2 * p);
    const auto s_p = detail::translate(s, p);
    const auto sc_p = detail::translate(sc, p);
    return {detail::intersect(sc, s_p), detail::intersect(sc, sc_p), detail::intersect(s, sc_p),
            detail::intersect(s, s_p)};
}

inline PeriodicSeq build_shen(std::uint64_t p, std::optional<std::uint64_t> generator, Triple t,
                              bool check_list = true) {
    const auto params = dhm_parameters(p, generator);
    detail::require_triple(t);
    if (check_list && !contains(params.triples, t))
        throw ParameterError("triple (" + t.to_string() + ") is not in the active list for p=" +
                             std::to_string(p) + ", g=" + std::to_string(params.generator));
    const CyclotomicSystem sys(p, 4, params.generator);
    const auto h = shen_sets(sys, t);
    std::vector<int> u(2 * p, -1);
    for (unsigned k = 0; k < 4; ++k) {
        for (auto x : h[k]) {
            if (u[x] != -1) throw InternalError("Shen sets overlap at " + std::to_string(x));
            u[x] = static_cast<int>(k);
        }
    }
    std::vector<PeriodicSeq::Symbol> sym(2 * p);
    for (std::size_t x = 0; x < u.size(); ++x) {
        if (u[x] < 0) throw InternalError("Shen sets miss " + std::to_string(x));
        sym[x] = static_cast<PeriodicSeq::Symbol>(u[x]);
    }
    return PeriodicSeq(Alphabet::quaternary, std::move(sym));
}

/// Outcome for one triple of the Shen / paired-DHM comparison.
struct ShenTripleCheck {
    Triple triple;
    bool sets_equal = false;      // each H_k equals the symbol-k positions of the paired DHM sequence
    bool sequence_equal = false;  // build_shen == chung_quaternary(build_dhm, shift_complement)
    bool shape_ok = false;        // H_k minus its special point (p in H_0, 0 in H_2) is psi({0}xD_a u {1}xD_b)
    bool balanced = false;
    bool optimal = false;  // every out-of-phase value in {-2, 2}
    std::array<std::pair<int, int>, 4> class_pairs{};  // (a_k, b_k), -1 when not of that shape

    bool pass() const { return sets_equal && sequence_equal && shape_ok && balanced && optimal; }
};

struct ShenEquivalenceReport {
    std::uint64_t p = 0;
    std::uint64_t generator = 0;
    std::vector<ShenTripleCheck> triples;

    bool pass() const {
        return std::all_of(triples.begin(), triples.end(), [](const auto& c) { return c.pass(); });
    }
};

namespace detail {

/// Finds (a, b) with h = psi({0}xD_a) u psi({1}xD_b); (-1, -1) if none.
inline std::pair<int, int> shen_class_pair(const CyclotomicSystem& sys, std::vector<std::size_t> h,
                                           std::optional<std::size_t> special) {
    const auto p = sys.p();
    if (special) {
        auto it = std::find(h.begin(), h.end(), *special);
        if (it == h.end()) return {-1, -1};
        h.erase(it);
    }
    // every element of h must sit over a nonzero residue mod p
    std::optional<unsigned> a, b;
    for (auto t : h) {
        const auto [u, v] = crt_split(t, p);
        const auto c = sys.class_of(v);
        if (!c) return {-1, -1};
        auto& slot = u == 0 ? a : b;
        if (slot && *slot != *c) return {-1, -1};
        slot = *c;
    }
    if (!a || !b) return {-1, -1};
    if (h.size() != 2 * sys.cofactor()) return {-1, -1};
    return {static_cast<int>(*a), static_cast<int>(*b)};
}

}  // namespace detail

/// Compares the intersection construction against pairing DHM sequences for every active triple.
inline ShenEquivalenceReport verify_shen_equivalence(std::uint64_t p,
                                                     std::optional<std::uint64_t> generator = std::nullopt) {
    const auto params = dhm_parameters(p, generator);
    const CyclotomicSystem sys(p, 4, params.generator);
    ShenEquivalenceReport rep{p, params.generator, {}};
    for (const auto& t : params.triples) {
        ShenTripleCheck c;
        c.triple = t;
        const auto h = shen_sets(sys, t);
        const auto paired = chung_quaternary(build_dhm(p, params.generator, t), PairingVariant::shift_complement);
        c.sets_equal = true;
        for (unsigned k = 0; k < 4; ++k) {
            std::vector<std::size_t> level;
            for (std::size_t x = 0; x < paired.period(); ++x)
                if (paired[x] == k) level.push_back(x);
            if (level != h[k]) c.sets_equal = false;
        }
        const auto shen = build_shen(p, params.generator, t);
        c.sequence_equal = shen == paired;

        std::array<bool, 4> seen_a{}, seen_b{};
        c.shape_ok = true;
        for (unsigned k = 0; k < 4; ++k) {
            std::optional<std::size_t> special;
            if (k == 0) special = p;
            if (k == 2) special = 0;
            c.class_pairs[k] = detail::shen_class_pair(sys, h[k], special);
            const auto [a, b] = c.class_pairs[k];
            if (a < 0 || seen_a[a] || seen_b[b]) {
                c.shape_ok = false;
                continue;
            }
            seen_a[a] = seen_b[b] = true;
        }
        c.balanced = balance_counts(shen).classification == BalanceClass::balanced;
        c.optimal = true;
        for (std::size_t tau = 1; tau < shen.period(); ++tau) {
            const auto r = autocorrelation(shen, tau);
            if (!(r == GaussianInt{2, 0} || r == GaussianInt{-2, 0})) c.optimal = false;
        }
        rep.triples.push_back(c);
    }
    return rep;
}

}  // namespace qseq
