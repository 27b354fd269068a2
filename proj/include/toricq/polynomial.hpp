#pragma once

// Dense univariate polynomials over an exact field (Q or Q(i)).

#include "toricq/arith.hpp"
#include "toricq/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace toricq {

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(F v) { return Polynomial(std::vector<F>{std::move(v)}); }
    static Polynomial monomial(F v, std::size_t degree) {
        std::vector<F> c(degree + 1);
        c[degree] = std::move(v);
        return Polynomial(std::move(c));
    }
    /// (z - root)
    static Polynomial linear(const F& root) { return Polynomial(std::vector<F>{-root, F(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F{}; }
    const F& leading() const { return c_.back(); }

    template <class X>
    X operator()(const X& x) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += X(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long long>(k));
        return Polynomial(std::move(d));
    }

    Polynomial derivative(unsigned order) const {
        Polynomial p = *this;
        for (unsigned i = 0; i < order; ++i) p = p.derivative();
        return p;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        F inv = F(1) / leading();
        std::vector<F> c = c_;
        for (auto& v : c) v *= inv;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F{}) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(Polynomial a, const F& s) {
        for (auto& v : a.c_) v *= s;
        a.trim();
        return a;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Applies `fn` to every coefficient.
    template <class G, class Fn>
    Polynomial<G> map(Fn fn) const {
        std::vector<G> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(fn(v));
        return Polynomial<G>(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F{}) c_.pop_back();
    }

    std::vector<F> c_;  // ascending powers, no trailing zeros
};

/// Euclidean division a = q b + r with deg r < deg b. Throws InvalidInput when b = 0.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    std::vector<F> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial<F>(), a};
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const F inv = F(1) / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const F& top = rem[static_cast<std::size_t>(k)];
        if (top == F{}) continue;
        F q = top * inv;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(k - db)] = std::move(q);
    }
    return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        auto r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Exact quotient; throws InvalidInput if b does not divide a.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidInput("polynomial division is not exact");
    return q;
}

/// p / gcd(p, p'), monic.
template <class F>
Polynomial<F> squarefree_part(const Polynomial<F>& p) {
    if (p.is_constant()) return p.monic();
    return exact_div(p.monic(), gcd(p, p.derivative()));
}

template <class F>
Polynomial<F> pow(const Polynomial<F>& p, unsigned k) {
    Polynomial<F> out = Polynomial<F>::constant(F(1));
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

/// Resultant of a and b over the field (both nonzero).
template <class F>
F resultant(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero() || b.is_zero()) return F{};
    F scale(1);
    for (;;) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) {
            F out = scale;
            for (int i = 0; i < da; ++i) out *= b.leading();
            return out;
        }
        if (da < db) {
            if ((da * db) % 2) scale = -scale;
            std::swap(a, b);
            continue;
        }
        auto r = divmod(a, b).second;
        if (r.is_zero()) return F{};
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if ((da * db) % 2) scale = -scale;
        for (int i = 0; i < da - r.degree(); ++i) scale *= b.leading();
        a = std::move(b);
        b = std::move(r);
    }
}

using RationalPolynomial = Polynomial<Rational>;
using GaussianPolynomial = Polynomial<GaussianRational>;

}  // namespace toricq
