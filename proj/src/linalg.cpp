#include "toricq/linalg.hpp"

#include "toricq/errors.hpp"

#include <algorithm>
#include <set>

namespace toricq {

std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    if (m.size() != rhs.size()) throw ShapeError("solve: row count does not match right-hand side");
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    RationalMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    auto pivots = rref(aug);
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt;
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

namespace {

bool locate_min(const IntegerMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.size(); ++i) {
        for (std::size_t j = t; j < a[i].size(); ++j) {
            if (a[i][j] == 0) continue;
            Integer v = abs(a[i][j]);
            if (!found || v < best) {
                best = v;
                pr = i;
                pc = j;
                found = true;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

void swap_cols(IntegerMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
}

}  // namespace

std::vector<Integer> invariant_factors(IntegerMatrix a) {
    std::vector<Integer> diag;
    if (a.empty() || a[0].empty()) return diag;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pr = t, pc = t;
        if (!locate_min(a, t, pr, pc)) break;
        std::swap(a[t], a[pr]);
        swap_cols(a, t, pc);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
            // a smaller remainder appeared in row/column t: move it to the pivot
            std::size_t br = t, bc = t;
            Integer best = abs(a[t][t]);
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0 && abs(a[i][t]) < best) { best = abs(a[i][t]); br = i; bc = t; }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0 && abs(a[t][j]) < best) { best = abs(a[t][j]); br = t; bc = j; }
            std::swap(a[t], a[br]);
            swap_cols(a, t, bc);
        }
        diag.push_back(abs(a[t][t]));
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    return diag;
}

SparseIntegerMatrix::SparseIntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows) {}

void SparseIntegerMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
    if (row >= rows_ || col >= cols_) throw ShapeError("sparse matrix index out of range");
    auto& r = entries_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) {
        it->second += value;
        if (it->second == 0) r.erase(it);
    } else if (value != 0) {
        r.insert(it, {col, value});
    }
}

std::vector<Integer> SparseIntegerMatrix::reduce() {
    std::vector<std::set<std::size_t>> col_rows(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [c, v] : entries_[i]) col_rows[c].insert(i);

    std::vector<Integer> factors;
    std::vector<bool> alive(rows_, true);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t p = 0; p < rows_; ++p) {
            if (!alive[p]) continue;
            auto& prow = entries_[p];
            auto unit = std::find_if(prow.begin(), prow.end(),
                                     [](const auto& e) { return e.second == 1 || e.second == -1; });
            if (unit == prow.end()) continue;
            const std::size_t q = unit->first;
            const Integer u = unit->second;
            std::vector<std::size_t> targets;
            for (auto i : col_rows[q])
                if (i != p) targets.push_back(i);
            for (auto i : targets) {
                auto& row = entries_[i];
                auto hit = std::lower_bound(row.begin(), row.end(), q,
                                            [](const auto& e, std::size_t c) { return e.first < c; });
                Integer f = hit->second * u;
                // row_i -= f * row_p, merged in column order
                std::vector<std::pair<std::size_t, Integer>> merged;
                merged.reserve(row.size() + prow.size());
                std::size_t a = 0, b = 0;
                while (a < row.size() || b < prow.size()) {
                    if (b == prow.size() || (a < row.size() && row[a].first < prow[b].first)) {
                        merged.push_back(std::move(row[a++]));
                    } else if (a == row.size() || prow[b].first < row[a].first) {
                        Integer v = -f * prow[b].second;
                        col_rows[prow[b].first].insert(i);
                        merged.emplace_back(prow[b].first, std::move(v));
                        ++b;
                    } else {
                        Integer v = row[a].second - f * prow[b].second;
                        if (v != 0) {
                            merged.emplace_back(row[a].first, std::move(v));
                        } else {
                            col_rows[row[a].first].erase(i);
                        }
                        ++a;
                        ++b;
                    }
                }
                row = std::move(merged);
            }
            for (const auto& [c, v] : prow) col_rows[c].erase(p);
            prow.clear();
            alive[p] = false;
            factors.emplace_back(1);
            progress = true;
        }
    }

    std::vector<std::size_t> live_rows;
    std::vector<std::size_t> col_index(cols_, cols_);
    std::size_t live_cols = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!alive[i] || entries_[i].empty()) continue;
        live_rows.push_back(i);
        for (const auto& [c, v] : entries_[i])
            if (col_index[c] == cols_) col_index[c] = live_cols++;
    }
    if (!live_rows.empty()) {
        IntegerMatrix dense(live_rows.size(), std::vector<Integer>(live_cols, Integer(0)));
        for (std::size_t k = 0; k < live_rows.size(); ++k)
            for (const auto& [c, v] : entries_[live_rows[k]]) dense[k][col_index[c]] = v;
        for (auto& f : invariant_factors(std::move(dense))) factors.push_back(std::move(f));
    }
    for (auto& row : entries_) row.clear();
    return factors;
}

}  // namespace toricq
