#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace qseq {

/// Dense polynomial over a small field; coeffs[k] is the coefficient of x^k.
/// Always trimmed: the zero polynomial has no coefficients.
template <class F>
class Poly {
public:
    using field_type = F;

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(F a) { return Poly(std::vector<F>{a}); }
    static Poly one() { return constant(F::one()); }
    /// x^n
    static Poly monomial(std::size_t n, F a = F::one()) {
        std::vector<F> c(n + 1, F::zero());
        c[n] = a;
        return Poly(std::move(c));
    }
    /// x^n - 1 (= x^n + 1 in characteristic 2)
    static Poly x_pow_minus_one(std::size_t n) {
        std::vector<F> c(n + 1, F::zero());
        c[0] = F::one();
        c[n] = c[n] + F::one();
        return Poly(std::move(c));
    }
    /// x + 1
    static Poly x_plus_one() { return Poly(std::vector<F>{F::one(), F::one()}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F::zero(); }
    F leading() const { return c_.empty() ? F::zero() : c_.back(); }
    const std::vector<F>& coeffs() const { return c_; }

    Poly monic() const {
        if (is_zero()) return *this;
        const auto inv = leading().inverse();
        std::vector<F> c(c_);
        for (auto& a : c) a = a * inv;
        return Poly(std::move(c));
    }

    F eval(F x) const {
        F acc = F::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }  // characteristic 2

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// "1+x^2+Mx^5"; "0" for the zero polynomial.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += '+';
            const bool unit = c_[k] == F::one();
            if (k == 0) {
                out += c_[k].symbol();
                continue;
            }
            if (!unit) out += c_[k].symbol();
            out += 'x';
            if (k > 1) out += '^' + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
    return os << p.to_string();
}

/// Quotient and remainder of a / b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>{}, a};
    std::vector<F> rem(a.coeffs());
    const auto db = static_cast<std::size_t>(b.degree());
    const auto inv = b.leading().inverse();
    std::vector<F> quot(rem.size() - db, F::zero());
    const auto& bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const F q = rem[k] * inv;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - q * bc[j];
    }
    rem.resize(db);
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

/// a / b where b is known to divide a; throws otherwise.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("exact_div: nonzero remainder");
    return q;
}

template <class F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
    return (a % d).is_zero();
}

/// Monic greatest common divisor (zero only if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Coefficient-wise embedding F_2[x] -> F_4[x].
inline Poly<GF4> lift(const Poly<GF2>& p) {
    std::vector<GF4> c;
    c.reserve(p.coeffs().size());
    for (auto a : p.coeffs()) c.push_back(lift(a));
    return Poly<GF4>(std::move(c));
}

}  // namespace qseq
