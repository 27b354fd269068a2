#include "toricq/fan.hpp"

#include "toricq/errors.hpp"
#include "toricq/linalg.hpp"
#include "toricq/lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace toricq {

namespace {

RationalMatrix generator_columns(const Cone& c, const Fan& fan) {
    // m x k matrix whose columns are the cone's generators
    RationalMatrix a(fan.dim(), std::vector<Rational>(c.dim()));
    for (std::size_t j = 0; j < c.dim(); ++j) {
        const auto& v = fan.ray(c.generators[j]).coords;
        for (std::size_t i = 0; i < fan.dim(); ++i) a[i][j] = v[i];
    }
    return a;
}

IntegerMatrix generator_rows(const std::vector<LatticeVector>& vs) {
    IntegerMatrix a;
    a.reserve(vs.size());
    for (const auto& v : vs) {
        std::vector<Integer> row;
        row.reserve(v.dim());
        for (auto x : v.coords) row.emplace_back(x);
        a.push_back(std::move(row));
    }
    return a;
}

std::vector<int> shared_generators(const Cone& a, const Cone& b) {
    std::vector<int> out;
    std::set_intersection(a.generators.begin(), a.generators.end(), b.generators.begin(), b.generators.end(),
                          std::back_inserter(out));
    return out;
}

std::string describe(const Cone& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.generators[i]);
    }
    return s + "}";
}

}  // namespace

bool LatticeVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

Cone::Cone(std::vector<int> gens) : generators(std::move(gens)) {
    std::sort(generators.begin(), generators.end());
    if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
        throw InvalidInput("cone lists a ray twice");
}

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ == 0) throw InvalidInput("fan dimension must be positive");
    if (rays_.empty()) throw InvalidInput("fan needs at least one ray");
    for (const auto& v : rays_) {
        if (v.dim() != dim_) throw ShapeError("ray has wrong dimension");
        if (v.is_zero()) throw InvalidRay("zero ray");
        if (primitive_generator(v) != v) throw InvalidRay("ray is not primitive");
    }
    std::set<LatticeVector> seen(rays_.begin(), rays_.end());
    if (seen.size() != rays_.size()) throw InvalidRay("duplicate rays");
    for (const auto& c : max_cones_) {
        for (int g : c.generators)
            if (g < 0 || static_cast<std::size_t>(g) >= rays_.size())
                throw InvalidInput("cone references missing ray " + std::to_string(g));
    }
}

LatticeVector primitive_generator(const LatticeVector& v) {
    if (v.is_zero()) throw InvalidRay("zero vector has no primitive generator");
    std::int64_t g = 0;
    for (auto x : v.coords) g = std::gcd(g, x);
    LatticeVector out = v;
    for (auto& x : out.coords) x /= g;
    return out;
}

bool is_simplicial(const Cone& c, const Fan& fan) { return rank(generator_columns(c, fan)) == c.dim(); }

bool is_strongly_convex(const Cone& c, const Fan& fan) {
    if (c.dim() == 0) return true;
    // feasible {lambda >= 0, V lambda = 0, sum lambda = 1} <=> the cone contains a line
    RationalMatrix a = generator_columns(c, fan);
    a.emplace_back(c.dim(), Rational(1));
    std::vector<Rational> b(fan.dim(), Rational(0));
    b.emplace_back(1);
    return !lp::feasible_point(a, b, c.dim()).has_value();
}

bool point_in_cone(const std::vector<Rational>& x, const Cone& c, const Fan& fan) {
    if (x.size() != fan.dim()) throw ShapeError("point has wrong dimension");
    if (!is_simplicial(c, fan)) throw UnsupportedCone("cone " + describe(c) + " is not simplicial");
    auto coeffs = solve(generator_columns(c, fan), x);
    if (!coeffs) return false;
    return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& q) { return q >= 0; });
}

ValidationReport validate_fan(const Fan& fan) {
    ValidationReport report;
    const auto& cones = fan.max_cones();
    for (const auto& c : cones) {
        if (!is_simplicial(c, fan)) throw UnsupportedCone("cone " + describe(c) + " is not simplicial");
        if (!is_strongly_convex(c, fan))
            report.violations.push_back({"cone " + describe(c) + " is not strongly convex", {}});
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            const Cone& s1 = cones[i];
            const Cone& s2 = cones[j];
            if (s1 == s2) {
                report.violations.push_back({"maximal cone " + describe(s1) + " listed twice", {}});
                continue;
            }
            const auto shared = shared_generators(s1, s2);
            // variables: lambda (s1 generators) then mu (s2 generators)
            const std::size_t k1 = s1.dim(), k2 = s2.dim();
            RationalMatrix a(fan.dim(), std::vector<Rational>(k1 + k2, Rational(0)));
            std::vector<Rational> b(fan.dim(), Rational(0));
            for (std::size_t col = 0; col < k1; ++col) {
                const auto& v = fan.ray(s1.generators[col]).coords;
                for (std::size_t r = 0; r < fan.dim(); ++r) a[r][col] = v[r];
            }
            for (std::size_t col = 0; col < k2; ++col) {
                const auto& v = fan.ray(s2.generators[col]).coords;
                for (std::size_t r = 0; r < fan.dim(); ++r) a[r][k1 + col] = -v[r];
            }
            std::vector<Rational> outside(k1 + k2, Rational(0));
            for (std::size_t col = 0; col < k1; ++col)
                if (!std::binary_search(shared.begin(), shared.end(), s1.generators[col])) outside[col] = 1;
            for (std::size_t col = 0; col < k2; ++col)
                if (!std::binary_search(shared.begin(), shared.end(), s2.generators[col])) outside[k1 + col] = 1;
            a.push_back(outside);
            b.emplace_back(1);
            auto sol = lp::feasible_point(a, b, k1 + k2);
            if (!sol) continue;
            std::vector<Rational> witness(fan.dim(), Rational(0));
            for (std::size_t col = 0; col < k1; ++col) {
                const auto& v = fan.ray(s1.generators[col]).coords;
                for (std::size_t r = 0; r < fan.dim(); ++r) witness[r] += (*sol)[col] * v[r];
            }
            report.violations.push_back({"cones " + describe(s1) + " and " + describe(s2) +
                                             " meet outside their common face",
                                         std::move(witness)});
        }
    }
    return report;
}

bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones()) {
        std::vector<LatticeVector> gens;
        for (int g : c.generators) gens.push_back(fan.ray(g));
        auto factors = invariant_factors(generator_rows(gens));
        if (factors.size() != c.dim()) return false;
        if (!std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; })) return false;
    }
    return true;
}

CompletenessReport completeness_report(const Fan& fan, std::uint64_t seed, std::size_t samples) {
    CompletenessReport rep;
    const auto& cones = fan.max_cones();
    const std::size_t m = fan.dim();
    std::size_t full = 0;
    for (const auto& c : cones) {
        if (!is_simplicial(c, fan)) throw UnsupportedCone("cone " + describe(c) + " is not simplicial");
        if (c.dim() == m) ++full;
    }
    if (full == 0) {
        rep.diagnostic = "no full-dimensional cone";
    } else if (full != cones.size()) {
        rep.diagnostic = "mixed-dimension maximal cones";
    } else {
        // wall -> (cone index, generator opposite the wall)
        std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> walls;
        for (std::size_t ci = 0; ci < cones.size(); ++ci) {
            for (int g : cones[ci].generators) {
                std::vector<int> wall;
                for (int h : cones[ci].generators)
                    if (h != g) wall.push_back(h);
                walls[wall].emplace_back(ci, g);
            }
        }
        std::vector<std::size_t> parent(cones.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        rep.complete = true;
        for (const auto& [wall, owners] : walls) {
            if (owners.size() != 2) {
                rep.complete = false;
                rep.diagnostic = "wall " + describe(Cone(wall)) + " bounds " + std::to_string(owners.size()) +
                                 " maximal cone(s)";
                break;
            }
            RationalMatrix w;
            for (int h : wall) {
                std::vector<Rational> row;
                for (auto x : fan.ray(h).coords) row.emplace_back(x);
                w.push_back(std::move(row));
            }
            auto normal = kernel_basis(w, m).front();
            auto side = [&](int g) {
                Rational s = 0;
                for (std::size_t i = 0; i < m; ++i) s += normal[i] * fan.ray(g).coords[i];
                return sign(s);
            };
            if (side(owners[0].second) * side(owners[1].second) >= 0) {
                rep.complete = false;
                rep.diagnostic = "cones on wall " + describe(Cone(wall)) + " lie on the same side";
                break;
            }
            parent[find(owners[0].first)] = find(owners[1].first);
        }
        if (rep.complete) {
            for (std::size_t ci = 0; ci < cones.size(); ++ci) {
                if (find(ci) != find(0)) {
                    rep.complete = false;
                    rep.diagnostic = "wall-adjacency graph is disconnected";
                    break;
                }
            }
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-1000, 1000);
    rep.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> x(m);
        bool nonzero = false;
        for (auto& v : x) {
            v = coord(rng);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) x[0] = 1;
        bool covered = std::any_of(cones.begin(), cones.end(), [&](const Cone& c) { return point_in_cone(x, c, fan); });
        if (!covered) ++rep.uncovered_samples;
    }
    rep.sampling_consistent = !(rep.complete && rep.uncovered_samples > 0);
    return rep;
}

bool is_complete(const Fan& fan) { return completeness_report(fan).complete; }

bool spans_lattice(const std::vector<LatticeVector>& rays, std::size_t dim) {
    for (const auto& v : rays)
        if (v.dim() != dim) throw ShapeError("ray has wrong dimension");
    auto factors = invariant_factors(generator_rows(rays));
    return factors.size() == dim &&
           std::all_of(factors.begin(), factors.end(), [](const Integer& d) { return d == 1; });
}

std::optional<std::vector<std::int64_t>> find_positive_relation(const std::vector<LatticeVector>& rays,
                                                                std::size_t dim) {
    const std::size_t r = rays.size();
    if (r > 16) throw TooLarge("positive relation search is limited to 16 rays");
    RationalMatrix m(dim, std::vector<Rational>(r));
    for (std::size_t k = 0; k < r; ++k) {
        if (rays[k].dim() != dim) throw ShapeError("ray has wrong dimension");
        for (std::size_t i = 0; i < dim; ++i) m[i][k] = rays[k].coords[i];
    }
    if (kernel_basis(m, r).empty()) return std::nullopt;

    // d = 1 + y with y >= 0:  M y = -M 1, minimise sum y
    std::vector<Rational> b(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < r; ++k) b[i] -= m[i][k];
    auto res = lp::solve(lp::Problem{m, b, std::vector<Rational>(r, Rational(1)), r});
    if (res.status != lp::Status::Optimal) return std::nullopt;

    Integer lcm_den = 1;
    for (auto& y : res.x) {
        y += 1;
        lcm_den = lcm(lcm_den, denominator_of(y));
    }
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& y : res.x) {
        ints.push_back(numerator_of(y) * (lcm_den / denominator_of(y)));
        g = gcd(g, ints.back());
    }
    std::vector<std::int64_t> out;
    for (auto& v : ints) {
        v /= g;
        if (v > std::numeric_limits<std::int64_t>::max()) throw TooLarge("relation coefficient overflows int64");
        out.push_back(v.convert_to<std::int64_t>());
    }
    return out;
}

}  // namespace toricq
