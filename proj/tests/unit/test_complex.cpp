#include <doctest.h>

#include "../support/brute.hpp"

#include "toricq/complex.hpp"
#include "toricq/corpus.hpp"
#include "toricq/errors.hpp"

using namespace toricq;

namespace {

LatticeVector v(std::initializer_list<std::int64_t> c) { return LatticeVector{std::vector<std::int64_t>(c)}; }

GradedRanks single(int degree, std::size_t rank = 1) {
    GradedRanks g;
    g.add(degree, rank, {});
    return g;
}

const SimplicialComplex two_points(2, {{0, 1}});
const SimplicialComplex triangle_boundary(3, {{0, 1, 2}});
const SimplicialComplex full_simplex(3, {});

}  // namespace

TEST_CASE("underlying complexes of small fans") {
    auto k1 = underlying_complex(corpus::cp1());
    CHECK(k1.min_non_faces() == std::vector<IndexSet>{{0, 1}});
    CHECK(k1.faces().size() == 3);
    CHECK(underlying_complex(corpus::cp2()).min_non_faces() == std::vector<IndexSet>{{0, 1, 2}});
    Fan cone(2, {v({1, 0}), v({0, 1})}, {Cone({0, 1})});
    CHECK(underlying_complex(cone).min_non_faces().empty());
}

TEST_CASE("minimal non-faces and primitive collections") {
    CHECK(minimal_non_faces(triangle_boundary) == std::vector<IndexSet>{{0, 1, 2}});
    CHECK(minimal_non_faces(full_simplex).empty());
    CHECK(minimal_non_faces(two_points) == std::vector<IndexSet>{{0, 1}});
    CHECK(primitive_collections(corpus::cp1xcp1()) == std::vector<IndexSet>{{0, 2}, {1, 3}});
    CHECK(primitive_collections(corpus::cp2()) == std::vector<IndexSet>{{0, 1, 2}});
    // redundant non-faces are dropped
    SimplicialComplex k(3, {{0, 1, 2}, {0, 1}, {0, 1}});
    CHECK(k.min_non_faces() == std::vector<IndexSet>{{0, 1}});
    CHECK_THROWS_AS(SimplicialComplex(2, {{}}), InvalidInput);
    CHECK_THROWS_AS(SimplicialComplex(2, {{0, 2}}), InvalidInput);
}

TEST_CASE("r_min") {
    CHECK(r_min(underlying_complex(corpus::cp1())) == 2);
    CHECK(r_min(underlying_complex(corpus::cp2())) == 3);
    CHECK(r_min(underlying_complex(corpus::hirzebruch(1))) == 2);
    CHECK_THROWS_AS(r_min(full_simplex), Undefined);
}

TEST_CASE("face reconstruction from minimal non-faces") {
    for (const auto& nf : corpus::all_fans()) {
        CAPTURE(nf.name);
        const auto k = underlying_complex(nf.fan);
        const int r = static_cast<int>(nf.fan.num_rays());
        std::size_t count = 0;
        for (brute::Mask s = 0; s < (brute::Mask{1} << r); ++s) {
            CHECK(k.is_face(s) == brute::fan_face(nf.fan, s));
            count += brute::fan_face(nf.fan, s);
        }
        CHECK(k.faces().size() == count);
        CHECK(SimplicialComplex::from_faces(k.num_vertices(), k.facets()) == k);
    }
}

TEST_CASE("power complexes") {
    CHECK(complex_power(two_points, 1) == two_points);
    auto k2 = complex_power(two_points, 2);
    CHECK(k2.num_vertices() == 4);
    CHECK(k2.min_non_faces() == std::vector<IndexSet>{{0, 1, 2, 3}});
    for (const auto& nf : corpus::all_fans()) {
        const auto k = underlying_complex(nf.fan);
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(nf.name);
            CAPTURE(n);
            const auto kn = complex_power(k, n);
            CHECK(r_min(kn) == n * r_min(k));
            const auto fp = fan_power(nf.fan, n);
            CHECK(underlying_complex(fp) == kn);
            if (n == 1) {
                CHECK(is_smooth(fp));
            } else {
                // facets of K(n) carry more rays than the dimension, and some contain a line
                bool oversized = false, line = false;
                for (const auto& c : fp.max_cones()) {
                    oversized |= c.dim() > fp.dim();
                    line |= !is_strongly_convex(c, fp);
                }
                CHECK(oversized);
                CHECK(line);
                CHECK_FALSE(is_smooth(fp));
            }
        }
    }
}

TEST_CASE("fan powers") {
    const auto f1 = fan_power(corpus::cp1(), 1);
    CHECK(f1.rays() == corpus::cp1().rays());
    const auto f2 = fan_power(corpus::cp1(), 2);
    CHECK(f2.dim() == 2);
    CHECK(f2.rays() == std::vector<LatticeVector>{v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})});
}

TEST_CASE("reduced homology") {
    CHECK(reduced_homology(triangle_boundary) == single(1));
    CHECK(reduced_homology(full_simplex).is_zero());
    CHECK(reduced_homology(two_points) == single(0));
    // two hollow triangles glued at a vertex: a wedge of two circles
    auto wedge = SimplicialComplex::from_faces(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    CHECK(reduced_homology(wedge) == single(1, 2));
    // minimal triangulation of RP^2 has Z/2 in degree 1
    auto rp2 = SimplicialComplex::from_faces(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    auto h = reduced_homology(rp2);
    CHECK(h.rank(1) == 0);
    CHECK(h.torsion(1) == std::vector<Integer>{2});
    CHECK(h.rank(2) == 0);
    CHECK_THROWS_AS(reduced_homology(SimplicialComplex(30, {}), 1000), TooLarge);
}

TEST_CASE("moment-angle homology") {
    CHECK(moment_angle_homology(two_points, 1, 2) == single(3));
    CHECK(moment_angle_homology(two_points, 2, 4) == single(7));
    CHECK(moment_angle_homology(triangle_boundary, 1, 2) == single(5));
    // real model: Z_K(D^1, S^0) for two points is a circle
    CHECK(moment_angle_homology(two_points, 1, 1) == single(1));
    CHECK_THROWS_AS(moment_angle_homology(two_points, 2, 3), InvalidInput);
    // square: Z_K(D^2, S^1) = S^3 x S^3
    auto sq = moment_angle_homology(underlying_complex(corpus::cp1xcp1()), 1, 2);
    CHECK(sq.rank(3) == 2);
    CHECK(sq.rank(6) == 1);
    for (const auto& nf : corpus::all_fans()) {
        const auto k = underlying_complex(nf.fan);
        for (int n = 1; n <= 2; ++n) {
            CAPTURE(nf.name);
            const auto h = moment_angle_homology(k, n, 2 * n);
            CHECK(h.lowest_degree().value_or(100) > 2);
            CHECK(h == moment_angle_homology(complex_power(k, n), 1, 2));
        }
    }
}
