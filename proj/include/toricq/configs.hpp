#pragma once

// Root configurations (divisors) of monic polynomials, membership at the divisor
// level, the stabilization maps and strip scanning.

#include "toricq/complex.hpp"
#include "toricq/polysys.hpp"

#include <map>
#include <vector>

namespace toricq {

/// Point -> positive multiplicity.
using Divisor = std::map<GaussianRational, int>;

int divisor_degree(const Divisor& xi);
Divisor conj(const Divisor& xi);

struct DivisorSystem {
    std::vector<Divisor> divisors;
    int n = 1;
    Field field = Field::Complex;

    std::vector<int> degrees() const;
    /// Multiplicities >= 1, n >= 1, and conjugation-closed divisors for real systems.
    void validate() const;
    DivisorSystem conj() const;
    friend bool operator==(const DivisorSystem&, const DivisorSystem&) = default;
};

/// prod (z - a)^m.
MonicPolynomial divisor_to_poly(const Divisor& xi);

/// Exact root extraction over Q(i). Throws NotSplittable if some root is not in Q(i).
Divisor poly_to_divisor(const MonicPolynomial& f);

PolySystem to_poly_system(const DivisorSystem& sys);

bool divisor_membership(const DivisorSystem& sys, const SimplicialComplex& k);

/// Squash R onto (-inf, N): identity up to N - 2, then N - 2 + 2t/(1 + t).
Rational squash(const Rational& x, int big_n);
GaussianRational phi_D(const GaussianRational& w, int big_n);

/// Push every point through phi_D and add a_i copies of N(D) + i (i counted from 1).
/// Throws InvalidInput unless a is non-negative, nonzero and of length r.
DivisorSystem stabilize(const DivisorSystem& sys, const std::vector<int>& a);

/// Points with |Re w - x| < eps and |Im w| < 1. Throws InvalidInput unless eps > 0.
DivisorSystem scan_at(const DivisorSystem& sys, const Rational& x, const Rational& eps);

}  // namespace toricq
