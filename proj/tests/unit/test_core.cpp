#include <doctest.h>

#include "../support/brute.hpp"

#include "toricq/arith.hpp"
#include "toricq/errors.hpp"
#include "toricq/linalg.hpp"
#include "toricq/lp.hpp"

#include <numeric>
#include <random>

using namespace toricq;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("gaussian rationals") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((GaussianRational(1) + i).conj() == GaussianRational(1) - i);
    CHECK(GaussianRational(Rational(3), Rational(4)).norm() == 25);
    CHECK((GaussianRational(2) / (GaussianRational(1) + i)) == GaussianRational(1) - i);
    CHECK(pow(GaussianRational(2), -3) == GaussianRational(Rational(1, 8)));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), InvalidInput);
    CHECK(format_gaussian(GaussianRational(Rational(1, 2), Rational(3))) == "1/2+3i");
    CHECK(format_gaussian(-i) == "-i");
    CHECK(format_gaussian(GaussianRational(0)) == "0");
}

TEST_CASE("rref, rank, kernel and solve") {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m, 3);
    REQUIRE(ker.size() == 1);
    for (const auto& row : m) {
        Rational s = 0;
        for (int j = 0; j < 3; ++j) s += row[j] * ker[0][j];
        CHECK(s == 0);
    }
    auto x = solve(m, {6, 12, 2});
    REQUIRE(x);
    CHECK(!solve(m, {1, 0, 0}));
    CHECK(kernel_basis({}, 2).size() == 2);
}

namespace {

Integer int_det(const std::vector<std::vector<Integer>>& a) {
    std::vector<std::vector<long long>> b;
    for (const auto& row : a) {
        std::vector<long long> r;
        for (const auto& v : row) r.push_back(v.convert_to<long long>());
        b.push_back(r);
    }
    return Integer(brute::det(b));
}

// invariant factors from gcds of k x k minors
std::vector<Integer> determinantal(const IntegerMatrix& m) {
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    std::vector<Integer> d{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        for (brute::Mask rs = 0; rs < (brute::Mask{1} << rows); ++rs) {
            if (std::popcount(rs) != k) continue;
            for (brute::Mask cs = 0; cs < (brute::Mask{1} << cols); ++cs) {
                if (std::popcount(cs) != k) continue;
                std::vector<std::vector<Integer>> a;
                for (int i : brute::set_of(rs)) {
                    std::vector<Integer> row;
                    for (int j : brute::set_of(cs)) row.push_back(m[i][j]);
                    a.push_back(row);
                }
                g = gcd(g, abs(int_det(a)));
            }
        }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

}  // namespace

TEST_CASE("Smith invariant factors match determinantal divisors") {
    CHECK(invariant_factors({{2, 0}, {0, 1}}) == std::vector<Integer>{1, 2});
    CHECK(invariant_factors({{1, 0}, {1, 2}}) == std::vector<Integer>{1, 2});
    CHECK(invariant_factors({{0, 0}, {0, 0}}).empty());
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-6, 6), dim(1, 4);
    for (int t = 0; t < 300; ++t) {
        IntegerMatrix m(dim(rng), std::vector<Integer>(dim(rng)));
        for (auto& row : m)
            for (auto& v : row) v = e(rng);
        CHECK(invariant_factors(m) == determinantal(m));
    }
}

TEST_CASE("sparse reduction agrees with the dense form") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> e(-1, 1), dim(1, 6);
    for (int t = 0; t < 200; ++t) {
        const int rows = dim(rng), cols = dim(rng);
        IntegerMatrix m(rows, std::vector<Integer>(cols));
        SparseIntegerMatrix s(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                m[i][j] = e(rng);
                if (m[i][j] != 0) s.add(i, j, m[i][j]);
            }
        CHECK(s.reduce() == invariant_factors(m));
    }
}

namespace {

// Fourier-Motzkin: is {x >= 0, A x = b} nonempty?  Rows are (coeffs, rhs) meaning coeffs.x <= rhs.
bool fm_feasible(const RationalMatrix& a, const std::vector<Rational>& b, std::size_t nv) {
    std::vector<std::pair<std::vector<Rational>, Rational>> rows;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rows.push_back({a[i], b[i]});
        std::vector<Rational> neg;
        for (const auto& v : a[i]) neg.push_back(-v);
        rows.push_back({neg, -b[i]});
    }
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<Rational> c(nv, 0);
        c[j] = -1;
        rows.push_back({c, 0});
    }
    for (std::size_t j = 0; j < nv; ++j) {
        std::vector<std::pair<std::vector<Rational>, Rational>> pos, neg, rest;
        for (auto& r : rows) {
            if (r.first[j] > 0) pos.push_back(r);
            else if (r.first[j] < 0) neg.push_back(r);
            else rest.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                const Rational sp = p.first[j], sq = -q.first[j];
                std::vector<Rational> c(nv);
                for (std::size_t k = 0; k < nv; ++k) c[k] = p.first[k] * sq + q.first[k] * sp;
                rest.push_back({c, p.second * sq + q.second * sp});
            }
        rows = std::move(rest);
    }
    for (const auto& r : rows)
        if (r.second < 0) return false;
    return true;
}

}  // namespace

TEST_CASE("simplex feasibility agrees with Fourier-Motzkin") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> e(-3, 3), rows(1, 3), vars(1, 4);
    int feasible = 0;
    for (int t = 0; t < 300; ++t) {
        const int m = rows(rng), nv = vars(rng);
        RationalMatrix a(m, std::vector<Rational>(nv));
        std::vector<Rational> b(m);
        for (auto& row : a)
            for (auto& v : row) v = e(rng);
        for (auto& v : b) v = e(rng);
        auto x = lp::feasible_point(a, b, nv);
        CHECK(x.has_value() == fm_feasible(a, b, nv));
        if (x) {
            ++feasible;
            for (int i = 0; i < m; ++i) {
                Rational s = 0;
                for (int j = 0; j < nv; ++j) s += a[i][j] * (*x)[j];
                CHECK(s == b[i]);
            }
            for (const auto& v : *x) CHECK(v >= 0);
        }
    }
    CHECK(feasible > 20);
}

TEST_CASE("simplex optimum and unboundedness") {
    // minimize -x0 - x1 with x0 + 2 x1 + s = 4, 3 x0 + x1 + t = 6
    lp::Problem p{{{1, 2, 1, 0}, {3, 1, 0, 1}}, {4, 6}, {-1, -1, 0, 0}, 4};
    auto r = lp::solve(p);
    REQUIRE(r.status == lp::Status::Optimal);
    CHECK(r.objective == Rational(-14, 5));
    lp::Problem u{{{1, -1}}, {0}, {-1, 0}, 2};
    CHECK(lp::solve(u).status == lp::Status::Unbounded);
    lp::Problem inf{{{1, 1}}, {-1}, {}, 2};
    CHECK(lp::solve(inf).status == lp::Status::Infeasible);
}
