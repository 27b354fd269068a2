#pragma once

// Exact scalar types shared by every module: arbitrary-precision integers,
// rationals, and Gaussian rationals (elements of Q(i)).

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace toricq {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p", "-p" or "p/q" (q != 0). Throws InvalidInput otherwise.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise.
std::string format_rational(const Rational& q);

int sign(const Rational& q);

/// Integer power with a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

/// An element re + im*i of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
    GaussianRational(long long re) : re_(re) {}            // NOLINT(implicit)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    /// Throws InvalidInput on division by zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic on (re, im); only used to key ordered containers.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ < b.re_) return std::strong_ordering::less;
        if (b.re_ < a.re_) return std::strong_ordering::greater;
        if (a.im_ < b.im_) return std::strong_ordering::less;
        if (b.im_ < a.im_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Integer power; negative exponents invert (InvalidInput on zero base).
GaussianRational pow(const GaussianRational& base, long long exponent);

std::string format_gaussian(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace toricq
