#include <doctest.h>

#include "../support/brute.hpp"

#include "toricq/corpus.hpp"
#include "toricq/errors.hpp"
#include "toricq/fan.hpp"

#include <random>

using namespace toricq;

namespace {

LatticeVector v(std::initializer_list<std::int64_t> c) { return LatticeVector{std::vector<std::int64_t>(c)}; }

}  // namespace

TEST_CASE("primitive generators") {
    CHECK(primitive_generator(v({2, 4})) == v({1, 2}));
    CHECK(primitive_generator(v({1, 0})) == v({1, 0}));
    CHECK(primitive_generator(v({-3, 6, -9})) == v({-1, 2, -3}));
    CHECK_THROWS_AS(primitive_generator(v({0, 0})), InvalidRay);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> e(-30, 30);
    for (int t = 0; t < 200; ++t) {
        auto x = v({e(rng), e(rng), e(rng)});
        if (x.is_zero()) continue;
        auto p = primitive_generator(x);
        CHECK(primitive_generator(p) == p);
    }
}

TEST_CASE("fan construction rejects bad rays") {
    CHECK_THROWS_AS(Fan(2, {v({2, 0})}, {}), InvalidRay);
    CHECK_THROWS_AS(Fan(2, {v({1, 0}), v({1, 0})}, {}), InvalidRay);
    CHECK_THROWS_AS(Fan(2, {v({1, 0, 0})}, {}), ShapeError);
    CHECK_THROWS_AS(Fan(2, {v({1, 0})}, {Cone({0, 1})}), InvalidInput);
    CHECK_THROWS_AS(Cone({0, 0}), InvalidInput);
}

TEST_CASE("strong convexity") {
    Fan f(2, {v({1, 0}), v({0, 1}), v({-1, 0})}, {Cone({0, 1})});
    CHECK(is_strongly_convex(Cone({0, 1}), f));
    CHECK_FALSE(is_strongly_convex(Cone({0, 2}), f));
    CHECK(is_strongly_convex(Cone(), f));
}

TEST_CASE("point in cone") {
    Fan f(2, {v({1, 0}), v({0, 1})}, {Cone({0, 1})});
    CHECK(point_in_cone({1, 1}, Cone({0, 1}), f));
    CHECK_FALSE(point_in_cone({-1, 0}, Cone({0, 1}), f));
    CHECK(point_in_cone({0, 0}, Cone({0, 1}), f));
    Fan g(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {});
    CHECK_THROWS_AS(point_in_cone({1, 1}, Cone({0, 1, 2}), g), UnsupportedCone);
}

TEST_CASE("fan validation") {
    CHECK(validate_fan(corpus::cp2()).valid());
    Fan single(2, {v({1, 0})}, {Cone({0})});
    CHECK(validate_fan(single).valid());
    // {(1,0),(0,1)} and {(1,0),(1,2)} overlap in the interior of the second cone
    Fan bad(2, {v({1, 0}), v({1, 2}), v({0, 1})}, {Cone({0, 2}), Cone({0, 1})});
    auto rep = validate_fan(bad);
    REQUIRE_FALSE(rep.valid());
    const auto& w = rep.violations.front().witness;
    REQUIRE(w.size() == 2);
    CHECK(point_in_cone(w, Cone({0, 2}), bad));
    CHECK(point_in_cone(w, Cone({0, 1}), bad));
    CHECK_FALSE(point_in_cone(w, Cone({0}), bad));
    // adjacent cones sharing the ray (1,2)
    Fan nested(2, {v({1, 0}), v({1, 2}), v({0, 1})}, {Cone({0, 1}), Cone({1, 2})});
    CHECK(validate_fan(nested).valid());
    Fan thick(2, {v({1, 0}), v({0, 1}), v({1, 1})}, {Cone({0, 1, 2})});
    CHECK_THROWS_AS(validate_fan(thick), UnsupportedCone);
}

TEST_CASE("smoothness") {
    CHECK(is_smooth(corpus::cp2()));
    Fan f(2, {v({1, 0}), v({1, 2})}, {Cone({0, 1})});
    CHECK_FALSE(is_smooth(f));
    Fan single(1, {v({1})}, {Cone({0})});
    CHECK(is_smooth(single));
}

TEST_CASE("completeness") {
    CHECK(is_complete(corpus::cp1()));
    Fan half(1, {v({1})}, {Cone({0})});
    CHECK_FALSE(is_complete(half));
    for (int a = 0; a <= 3; ++a) CHECK(is_complete(corpus::hirzebruch(a)));
    Fan mixed(2, {v({1, 0}), v({0, 1}), v({-1, -1})}, {Cone({0, 1}), Cone({2})});
    auto rep = completeness_report(mixed);
    CHECK_FALSE(rep.complete);
    CHECK_FALSE(rep.diagnostic.empty());
    Fan quadrant(2, {v({1, 0}), v({0, 1})}, {Cone({0, 1})});
    CHECK_FALSE(is_complete(quadrant));
}

TEST_CASE("lattice spanning") {
    CHECK(spans_lattice({v({1, 0}), v({0, 1}), v({-1, -1})}, 2));
    CHECK_FALSE(spans_lattice({v({2, 0}), v({0, 1})}, 2));
    CHECK(spans_lattice({v({1})}, 1));
}

TEST_CASE("positive relations") {
    CHECK(find_positive_relation(corpus::cp1().rays(), 1) == std::vector<std::int64_t>{1, 1});
    CHECK(find_positive_relation(corpus::cp2().rays(), 2) == std::vector<std::int64_t>{1, 1, 1});
    CHECK_FALSE(find_positive_relation({v({1, 0}), v({0, 1})}, 2));
    std::vector<LatticeVector> many;
    for (int i = 1; i <= 17; ++i) many.push_back(v({i, 1}));
    CHECK_THROWS_AS(find_positive_relation(many, 2), TooLarge);
    auto h = find_positive_relation(corpus::hirzebruch(3).rays(), 2);
    REQUIRE(h);
    for (std::size_t j = 0; j < 2; ++j) {
        long long s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += (*h)[k] * corpus::hirzebruch(3).rays()[k].coords[j];
        CHECK(s == 0);
    }
}

TEST_CASE("corpus invariants agree with brute force") {
    for (const auto& nf : corpus::all_fans()) {
        CAPTURE(nf.name);
        CHECK(validate_fan(nf.fan).valid());
        CHECK(is_smooth(nf.fan) == brute::smooth(nf.fan));
        CHECK(is_smooth(nf.fan));
        auto rep = completeness_report(nf.fan, 5, 200);
        CHECK(rep.complete);
        CHECK(rep.sampling_consistent);
        CHECK(rep.uncovered_samples == 0);
        CHECK(brute::complete(nf.fan));
        CHECK(spans_lattice(nf.fan.rays(), nf.fan.dim()));
        for (const auto& c : nf.fan.max_cones()) CHECK(is_strongly_convex(c, nf.fan));
    }
}
