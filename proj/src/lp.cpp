#include "toricq/lp.hpp"

#include "toricq/errors.hpp"

namespace toricq::lp {

namespace {

class Tableau {
public:
    Tableau(const Problem& p) : m_(p.a.size()), n_(p.num_vars), width_(p.num_vars + p.a.size() + 1) {
        t_.assign(m_ + 1, std::vector<Rational>(width_, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (p.a[i].size() != n_) throw ShapeError("lp: constraint row has wrong width");
            const bool flip = p.b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -p.a[i][j] : p.a[i][j];
            t_[i][n_ + i] = 1;
            t_[i][rhs()] = flip ? -p.b[i] : p.b[i];
            basis_[i] = n_ + i;
        }
        // phase one cost: sum of artificials, expressed in reduced form
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) t_[m_][j] -= t_[i][j];
            t_[m_][rhs()] -= t_[i][rhs()];
        }
    }

    std::size_t rhs() const { return width_ - 1; }

    /// Bland's rule over columns [0, limit). Returns false when unbounded.
    bool optimize(std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (t_[m_][j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;
            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][rhs()] / t_[i][enter];
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / t_[r][c];
        for (auto& v : t_[r]) v *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j < width_; ++j)
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    Rational phase_one_value() const { return -t_[m_][rhs()]; }

    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (t_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
            // otherwise the row is redundant and its artificial stays at zero
        }
    }

    void install_cost(const std::vector<Rational>& c) {
        std::fill(t_[m_].begin(), t_[m_].end(), Rational(0));
        for (std::size_t j = 0; j < n_; ++j) t_[m_][j] = c[j];
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            const Rational cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < width_; ++j) t_[m_][j] -= cb * t_[i][j];
        }
    }

    std::vector<Rational> point() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][rhs()];
        return x;
    }

private:
    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    RationalMatrix t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

Result solve(const Problem& problem) {
    if (problem.b.size() != problem.a.size()) throw ShapeError("lp: b does not match A");
    if (!problem.c.empty() && problem.c.size() != problem.num_vars) throw ShapeError("lp: c has wrong length");
    Result result;
    Tableau tab(problem);
    tab.optimize(problem.num_vars);
    if (tab.phase_one_value() != 0) {
        result.status = Status::Infeasible;
        return result;
    }
    tab.expel_artificials();
    if (!problem.c.empty()) {
        tab.install_cost(problem.c);
        if (!tab.optimize(problem.num_vars)) {
            result.status = Status::Unbounded;
            return result;
        }
    }
    result.status = Status::Optimal;
    result.x = tab.point();
    for (std::size_t j = 0; j < problem.c.size(); ++j) result.objective += problem.c[j] * result.x[j];
    return result;
}

std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& a, const std::vector<Rational>& b,
                                                    std::size_t num_vars) {
    Result r = solve(Problem{a, b, {}, num_vars});
    if (r.status != Status::Optimal) return std::nullopt;
    return r.x;
}

}  // namespace toricq::lp
