#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace qseq {

/// Exact Gaussian integer re + im*i. Correlation values of binary sequences have im == 0.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t real, std::int64_t imag = 0) : re(real), im(imag) {}

    constexpr GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend constexpr GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend constexpr GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend constexpr GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend constexpr GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    constexpr GaussianInt conj() const { return {re, -im}; }
    /// Squared magnitude |z|^2, exact.
    constexpr std::int64_t norm() const { return re * re + im * im; }
    constexpr bool is_real() const { return im == 0; }

    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
    friend constexpr auto operator<=>(const GaussianInt&, const GaussianInt&) = default;

    /// "3", "-1+2i", "1-2i", "2i", "-i".
    std::string to_string() const {
        if (im == 0) return std::to_string(re);
        std::string imag;
        if (im == 1) imag = "i";
        else if (im == -1) imag = "-i";
        else imag = std::to_string(im) + "i";
        if (re == 0) return imag;
        return std::to_string(re) + (im > 0 ? "+" : "") + imag;
    }
};

inline std::string to_string(const GaussianInt& z) { return z.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.to_string(); }

}  // namespace qseq
