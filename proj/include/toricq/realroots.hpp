#pragma once

// Sturm-sequence real root counting and isolation over Q, plus exact rational
// root extraction built on top of it.

#include "toricq/polynomial.hpp"

#include <vector>

namespace toricq {

/// Either an exact root (lo == hi) or an open interval (lo, hi) holding exactly one root.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

class SturmSequence {
public:
    /// p must be nonzero; the sequence is built on its square-free part.
    explicit SturmSequence(const RationalPolynomial& p);

    const RationalPolynomial& base() const { return chain_.front(); }

    int variations_at(const Rational& x) const;
    int variations_at_pos_infinity() const;
    int variations_at_neg_infinity() const;

    /// Distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    int count_all() const;

private:
    std::vector<RationalPolynomial> chain_;
};

/// Strict bound: every complex root has |z| < bound.
Rational cauchy_bound(const RationalPolynomial& p);

/// Isolating intervals for the distinct real roots of p (p != 0), in increasing order.
std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p);

/// Shrinks an isolating interval of p until hi - lo < width (exact roots are returned as is).
RootInterval refine(const SturmSequence& s, RootInterval iv, const Rational& width);

/// All distinct rational roots of p (p != 0), increasing.
std::vector<Rational> rational_roots(const RationalPolynomial& p);

}  // namespace toricq
