#include "toricq/arith.hpp"

#include "toricq/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace toricq {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw InvalidInput("malformed integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        b *= b;
        exponent >>= 1u;
    }
    return result;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm();
    if (n == 0) throw InvalidInput("division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_ == 0 && o.im_ == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.im_ == 0) {
        if (o.re_ == 0) throw InvalidInput("division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational pow(const GaussianRational& base, long long exponent) {
    GaussianRational b = exponent < 0 ? base.inverse() : base;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    GaussianRational result(1);
    while (e) {
        if (e & 1ull) result *= b;
        b *= b;
        e >>= 1ull;
    }
    return result;
}

std::string format_gaussian(const GaussianRational& z) {
    if (z.is_real()) return format_rational(z.re());
    std::ostringstream os;
    if (z.re() != 0) {
        os << format_rational(z.re()) << (z.im() > 0 ? "+" : "-");
        Rational a = abs(z.im());
        if (a != 1) os << format_rational(a);
    } else if (z.im() == -1) {
        os << "-";
    } else if (z.im() != 1) {
        os << format_rational(z.im());
    }
    os << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << format_gaussian(z); }

}  // namespace toricq
