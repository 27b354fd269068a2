#include <doctest.h>

#include "../support/planted.hpp"

#include "toricq/corpus.hpp"
#include "toricq/cox.hpp"
#include "toricq/errors.hpp"
#include "toricq/linalg.hpp"

#include <random>

using namespace toricq;

namespace {

GaussianRational q(long long a, long long b = 1) { return GaussianRational(Rational(a, b)); }

const SimplicialComplex pair_complex(2, {{0, 1}});

std::vector<GaussianRational> zeros(std::size_t n) { return std::vector<GaussianRational>(n); }

}  // namespace

TEST_CASE("zero patterns and the complement") {
    CHECK(zero_pattern({{q(1)}, {q(2)}, {q(3)}}).empty());
    CHECK(zero_pattern({zeros(2), {q(1), q(0)}, zeros(2)}) == IndexSet{0, 2});
    CHECK(zero_pattern({zeros(1), zeros(1)}) == IndexSet{0, 1});
    CHECK_FALSE(in_complement({zeros(2), zeros(2)}, pair_complex));
    CHECK(in_complement({zeros(2), {q(1), q(0)}}, pair_complex));
    CHECK(in_complement({{q(1)}, {q(5)}}, pair_complex));
    CHECK_THROWS_AS(in_complement({zeros(1)}, pair_complex), ShapeError);
}

TEST_CASE("evaluating a system") {
    PolySystem sys{Field::Real, 2, {MonicPolynomial({q(0), q(0)})}};
    auto at0 = evaluate_system(sys, Rational(0));
    CHECK(at0 == BlockPoint{{q(0), q(0)}});
    auto at1 = evaluate_system(sys, Rational(1));
    CHECK(at1 == BlockPoint{{q(1), q(3)}});
}

TEST_CASE("torus group membership") {
    const auto fan = corpus::cp1();
    const auto& rays = fan.rays();
    CHECK(in_group({q(2), q(2)}, rays));
    CHECK_FALSE(in_group({q(2), q(3)}, rays));
    CHECK(in_group({q(1), q(1)}, rays));
    CHECK_THROWS_AS(in_group({q(0), q(1)}, rays), InvalidInput);
    CHECK_THROWS_AS(in_group({q(1)}, rays), ShapeError);
    for (const auto& nf : corpus::all_fans()) CHECK(in_group(TorusElement(nf.fan.num_rays(), q(1)), nf.fan.rays()));
}

TEST_CASE("Cox criterion") {
    const auto cp1_fan = corpus::cp1();
    const auto& cp1 = cp1_fan.rays();
    auto v = cox_criterion(cp1, {3, 3});
    CHECK(v.symbolic);
    CHECK(v.sampled);
    v = cox_criterion(cp1, {2, 3});
    CHECK_FALSE(v.symbolic);
    CHECK_FALSE(v.sampled);
    v = cox_criterion(corpus::cp2().rays(), {1, 1, 1});
    CHECK(v.symbolic);
    CHECK(v.sampled);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 20);
    for (const auto& nf : corpus::all_fans()) {
        for (int t = 0; t < 200; ++t) {
            std::vector<std::int64_t> d(nf.fan.num_rays());
            for (auto& x : d) x = e(rng);
            auto c = cox_criterion(nf.fan.rays(), d);
            CHECK(c.symbolic == c.sampled);
        }
        if (auto rel = find_positive_relation(nf.fan.rays(), nf.fan.dim())) {
            auto c = cox_criterion(nf.fan.rays(), *rel);
            CHECK(c.symbolic);
            CHECK(c.sampled);
        }
    }
}

TEST_CASE("group rank") {
    CHECK(group_rank(corpus::cp1().rays(), 1) == 1);
    CHECK(group_rank(corpus::cp2().rays(), 2) == 1);
    for (int a = 0; a <= 3; ++a) CHECK(group_rank(corpus::hirzebruch(a).rays(), 2) == 2);
    std::vector<LatticeVector> line{LatticeVector{{1, 0}}, LatticeVector{{-1, 0}}};
    CHECK_THROWS_AS(group_rank(line, 2), NotSpanning);
}

TEST_CASE("group elements form a subgroup") {
    std::mt19937_64 rng(9);
    const std::vector<GaussianRational> bases{q(2), q(3), q(1, 2), GaussianRational(Rational(1), Rational(1))};
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
    std::uniform_int_distribution<int> e(-2, 2);
    for (const auto& nf : corpus::all_fans()) {
        const auto& rays = nf.fan.rays();
        // integer relations among the rays
        RationalMatrix a(nf.fan.dim(), std::vector<Rational>(rays.size()));
        for (std::size_t k = 0; k < rays.size(); ++k)
            for (std::size_t j = 0; j < nf.fan.dim(); ++j) a[j][k] = rays[k].coords[j];
        std::vector<std::vector<long long>> relations;
        for (const auto& v : kernel_basis(a, rays.size())) {
            Integer den = 1;
            for (const auto& x : v) den = boost::multiprecision::lcm(den, Integer(denominator(x)));
            std::vector<long long> d;
            for (const auto& x : v) d.push_back(Integer(numerator(x) * den / denominator(x)).convert_to<long long>());
            relations.push_back(d);
        }
        std::vector<TorusElement> members;
        for (int t = 0; t < 8; ++t) {
            TorusElement mu(rays.size(), q(1));
            for (const auto& d : relations) {
                const auto lambda = bases[pick(rng)];
                const int c = e(rng);
                for (std::size_t k = 0; k < rays.size(); ++k) mu[k] *= pow(lambda, c * d[k]);
            }
            REQUIRE(in_group(mu, rays));
            members.push_back(mu);
        }
        // a perturbed element leaves the group
        auto off = members.front();
        off[0] *= q(2);
        CHECK_FALSE(in_group(off, rays));
        for (const auto& m : members) {
            TorusElement inv;
            for (const auto& x : m) inv.push_back(x.inverse());
            CHECK(in_group(inv, rays));
            for (const auto& b : members) {
                TorusElement prod;
                for (std::size_t k = 0; k < m.size(); ++k) prod.push_back(m[k] * b[k]);
                CHECK(in_group(prod, rays));
            }
        }
    }
}

TEST_CASE("evaluation lands in the complement exactly off the violating roots") {
    for (const auto& nf : corpus::all_fans()) {
        const auto k = underlying_complex(nf.fan);
        planted::Generator gen(nf.fan, 31);
        for (int i = 0; i < 12; ++i) {
            CAPTURE(nf.name);
            const int n = 1 + i % 2;
            const auto member = gen.make(i % 3 ? Field::Real : Field::Complex, n, planted::Target::Member);
            for (int j = 0; j < 200; ++j) {
                const Rational x(j - 100, 8);
                CHECK(in_complement(evaluate_system(member.sys, x), k));
            }
            const auto bad = gen.make(Field::Real, n, planted::Target::RealViolation);
            REQUIRE_FALSE(bad.violating_real.empty());
            for (const auto& x0 : bad.violating_real) CHECK_FALSE(in_complement(evaluate_system(bad.sys, x0), k));
            for (int j = 0; j < 200; ++j) {
                const Rational x(j - 100, 8);
                CHECK(in_complement(evaluate_system(bad.sys, x), k) == (bad.violating_real.count(x) == 0));
            }
        }
    }
}

TEST_CASE("zero pattern records the high-multiplicity roots") {
    for (const auto& nf : corpus::all_fans()) {
        planted::Generator gen(nf.fan, 57);
        for (int i = 0; i < 20; ++i) {
            const int n = 1 + i % 3;
            const auto p = gen.make(Field::Real, n, planted::Target::Any);
            for (const auto& x : planted::real_pool()) {
                IndexSet expected;
                for (std::size_t j = 0; j < p.divisors.divisors.size(); ++j) {
                    auto it = p.divisors.divisors[j].find(x);
                    if (it != p.divisors.divisors[j].end() && it->second >= n) expected.push_back(static_cast<int>(j));
                }
                CHECK(zero_pattern(evaluate_system(p.sys, x.re())) == expected);
            }
        }
    }
}
