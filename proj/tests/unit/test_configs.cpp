#include <doctest.h>

#include "../support/planted.hpp"

#include "toricq/configs.hpp"
#include "toricq/corpus.hpp"
#include "toricq/errors.hpp"

#include <random>
#include <set>

using namespace toricq;

namespace {

GaussianRational q(long long a, long long b = 1) { return GaussianRational(Rational(a, b)); }
const GaussianRational I = GaussianRational::i();

MonicPolynomial monic(std::initializer_list<long long> lower) {
    std::vector<GaussianRational> v;
    for (auto x : lower) v.emplace_back(x);
    return MonicPolynomial(v);
}

const SimplicialComplex pair_complex(2, {{0, 1}});

}  // namespace

TEST_CASE("divisor to polynomial") {
    CHECK(divisor_to_poly({{q(1), 1}, {q(-1), 1}}) == monic({-1, 0}));
    CHECK(divisor_to_poly({{q(2), 3}}) == monic({-8, 12, -6}));
    CHECK(divisor_to_poly({}).degree() == 0);
}

TEST_CASE("polynomial to divisor") {
    CHECK(poly_to_divisor(monic({-1, 0})) == Divisor{{q(1), 1}, {q(-1), 1}});
    CHECK(poly_to_divisor(monic({1, 0})) == Divisor{{I, 1}, {-I, 1}});
    CHECK_THROWS_AS(poly_to_divisor(monic({-2, 0})), NotSplittable);
    CHECK(poly_to_divisor(monic({})).empty());
    // (z - 1/2 - 3i/2)^2 (z + 2/3)
    Divisor xi{{GaussianRational(Rational(1, 2), Rational(3, 2)), 2}, {q(-2, 3), 1}};
    CHECK(poly_to_divisor(divisor_to_poly(xi)) == xi);
    // x^2 + 1 times an irreducible cubic over Q(i)
    auto p = divisor_to_poly({{I, 1}, {-I, 1}}).to_polynomial() * GaussianPolynomial{q(-2), q(0), q(0), q(1)};
    CHECK_THROWS_AS(poly_to_divisor(MonicPolynomial::from_polynomial(p)), NotSplittable);
}

TEST_CASE("root and divisor round trips") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4), mult(1, 3), count(0, 3);
    for (int t = 0; t < 150; ++t) {
        Divisor xi;
        const int pts = count(rng);
        for (int k = 0; k < pts; ++k)
            xi[GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)))] = mult(rng);
        auto f = divisor_to_poly(xi);
        CHECK(poly_to_divisor(f) == xi);
        CHECK(divisor_to_poly(poly_to_divisor(f)) == f);
    }
}

TEST_CASE("divisor membership examples") {
    DivisorSystem s{{{{q(1), 2}}, {{q(1), 2}, {q(-3), 1}}}, 2, Field::Real};
    CHECK_FALSE(divisor_membership(s, pair_complex));
    s.n = 3;
    CHECK(divisor_membership(s, pair_complex));
    DivisorSystem c{{{{I, 1}, {-I, 1}}, {{q(0), 1}, {I, 1}, {-I, 1}}}, 1, Field::Real};
    CHECK(divisor_membership(c, pair_complex));
    DivisorSystem wrong{{{{q(1), 1}}}, 1, Field::Real};
    CHECK_THROWS_AS(divisor_membership(wrong, pair_complex), ShapeError);
    DivisorSystem not_real{{{{I, 1}}, {}}, 1, Field::Real};
    CHECK_THROWS_AS(not_real.validate(), InvalidInput);
}

TEST_CASE("divisor membership agrees with coefficient membership on planted systems") {
    const auto fans = corpus::all_fans();
    for (int i = 0; i < 500; ++i) {
        const auto& nf = fans[i % fans.size()];
        const auto k = underlying_complex(nf.fan);
        planted::Generator gen(nf.fan, 500 + i);
        const auto p = gen.make(i % 2 ? Field::Complex : Field::Real, 1 + i % 3, planted::Target::Any);
        CHECK(divisor_membership(p.divisors, k) == is_member_Q(to_poly_system(p.divisors), k));
        CHECK(divisor_membership(p.divisors, k) == p.member_q);
    }
}

TEST_CASE("squash map") {
    const int big_n = 6;
    CHECK(squash(Rational(4), big_n) == 4);
    CHECK(squash(Rational(-10), big_n) == -10);
    CHECK(squash(Rational(5), big_n) == 5);  // t = 1 -> knee + 1
    std::set<GaussianRational> images;
    for (int a = -50; a < 50; ++a)
        for (int b = 0; b < 100; ++b) {
            GaussianRational w(Rational(a * 7 + b, 13), Rational(b - 50, 7));
            auto img = phi_D(w, big_n);
            CHECK(img.re() < big_n);
            CHECK(img.im() == w.im());
            CHECK(phi_D(w.conj(), big_n) == img.conj());
            images.insert(img);
        }
    std::set<GaussianRational> sources;
    for (int a = -50; a < 50; ++a)
        for (int b = 0; b < 100; ++b) sources.insert(GaussianRational(Rational(a * 7 + b, 13), Rational(b - 50, 7)));
    CHECK(images.size() == sources.size());
    // strictly increasing and approaching N from below
    Rational prev = squash(Rational(-5), big_n);
    for (int k = -4; k < 400; ++k) {
        Rational cur = squash(Rational(k, 3), big_n);
        CHECK(prev < cur);
        prev = cur;
    }
    CHECK(squash(Rational(1000000), big_n) > Rational(big_n) - Rational(1, 100000));
}

TEST_CASE("stabilization") {
    DivisorSystem empty{{{}, {}}, 1, Field::Real};
    auto s = stabilize(empty, {1, 1});
    CHECK(s.divisors[0] == Divisor{{q(1), 1}});
    CHECK(s.divisors[1] == Divisor{{q(2), 1}});
    CHECK_THROWS_AS(stabilize(empty, {0, 0}), InvalidInput);
    CHECK_THROWS_AS(stabilize(empty, {1}), InvalidInput);
    CHECK_THROWS_AS(stabilize(empty, {-1, 2}), InvalidInput);

    const auto fan = corpus::hirzebruch(2);
    const auto k = underlying_complex(fan);
    planted::Generator gen(fan, 77);
    for (int i = 0; i < 100; ++i) {
        const Field field = i % 2 ? Field::Complex : Field::Real;
        const auto p = gen.make(field, 1 + i % 3, planted::Target::Member);
        std::vector<int> a{gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(1, 2)};
        std::vector<int> b{1, 0, 2, 0};
        const auto once = stabilize(p.divisors, a);
        CHECK(divisor_membership(once, k));
        const auto twice = stabilize(once, b);
        CHECK(divisor_membership(twice, k));
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(once.degrees()[j] == p.divisors.degrees()[j] + a[j]);
            CHECK(twice.degrees()[j] == p.divisors.degrees()[j] + a[j] + b[j]);
        }
        if (field == Field::Real) CHECK_NOTHROW(once.validate());
        CHECK(stabilize(p.divisors.conj(), a) == once.conj());
    }
}

TEST_CASE("scanning") {
    DivisorSystem s{{{{q(0), 1}}}, 1, Field::Complex};
    CHECK(scan_at(s, Rational(0), Rational(1, 10)).divisors[0].size() == 1);
    CHECK(scan_at(s, Rational(5), Rational(1, 10)).divisors[0].empty());
    DivisorSystem high{{{{GaussianRational(Rational(1, 20), Rational(2)), 1}}}, 1, Field::Complex};
    CHECK(scan_at(high, Rational(0), Rational(1, 10)).divisors[0].empty());
    DivisorSystem m{{{{q(1), 3}, {q(2), 1}}}, 2, Field::Complex};
    auto clipped = scan_at(m, Rational(1), Rational(1, 2));
    CHECK(clipped.divisors[0] == Divisor{{q(1), 3}});
    CHECK_THROWS_AS(scan_at(m, Rational(0), Rational(0)), InvalidInput);
}
