#pragma once

// Dense exact linear algebra over Q and Z.

#include "toricq/arith.hpp"

#include <optional>
#include <vector>

namespace toricq {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column. `cols` is needed when m has no rows.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t cols);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

/// Nonzero diagonal entries of the Smith normal form (positive, each dividing the next).
std::vector<Integer> invariant_factors(IntegerMatrix m);

template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& m, std::size_t cols) {
    std::vector<std::vector<T>> t(cols, std::vector<T>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

/// Sparse integer matrix reduced by unit-pivot elimination; whatever remains is
/// handed to the dense Smith form. Used for simplicial boundary matrices.
class SparseIntegerMatrix {
public:
    SparseIntegerMatrix(std::size_t rows, std::size_t cols);

    void add(std::size_t row, std::size_t col, const Integer& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Invariant factors of the whole matrix (destroys contents).
    std::vector<Integer> reduce();

private:
    std::size_t rows_;
    std::size_t cols_;
    // row -> (col -> value); kept sorted for deterministic pivot order
    std::vector<std::vector<std::pair<std::size_t, Integer>>> entries_;
};

}  // namespace toricq
