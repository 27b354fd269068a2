#include "toricq/cox.hpp"

#include "toricq/errors.hpp"
#include "toricq/linalg.hpp"

namespace toricq {

IndexSet zero_pattern(const BlockPoint& p) {
    IndexSet out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool zero = true;
        for (const auto& v : p[i]) zero = zero && v.is_zero();
        if (zero) out.push_back(static_cast<int>(i));
    }
    return out;
}

bool in_complement(const BlockPoint& p, const SimplicialComplex& k) {
    if (p.size() != k.num_vertices())
        throw ShapeError("point has " + std::to_string(p.size()) + " blocks but the complex has " +
                         std::to_string(k.num_vertices()) + " vertices");
    return k.is_face(zero_pattern(p));
}

BlockPoint evaluate_system(const PolySystem& sys, const Rational& x) {
    sys.validate();
    const GaussianRational at(x);
    BlockPoint out;
    for (const auto& f : sys.polys) {
        const auto p = f.to_polynomial();
        const auto base = p(at);
        std::vector<GaussianRational> block{base};
        auto d = p;
        for (int j = 1; j < sys.n; ++j) {
            d = d.derivative();
            block.push_back(base + d(at));
        }
        out.push_back(std::move(block));
    }
    return out;
}

bool in_group(const TorusElement& mu, const std::vector<LatticeVector>& rays) {
    if (mu.size() != rays.size()) throw ShapeError("torus element length does not match the ray count");
    for (const auto& z : mu)
        if (z.is_zero()) throw InvalidInput("torus element has a zero entry");
    if (rays.empty()) return true;
    const std::size_t m = rays.front().dim();
    for (std::size_t j = 0; j < m; ++j) {
        GaussianRational prod(1);
        for (std::size_t k = 0; k < rays.size(); ++k) prod *= pow(mu[k], rays[k].coords[j]);
        if (prod != GaussianRational(1)) return false;
    }
    return true;
}

CoxVerdict cox_criterion(const std::vector<LatticeVector>& rays, const std::vector<std::int64_t>& degrees) {
    if (degrees.size() != rays.size()) throw ShapeError("degree vector length does not match the ray count");
    CoxVerdict v;
    v.symbolic = true;
    const std::size_t m = rays.empty() ? 0 : rays.front().dim();
    for (std::size_t j = 0; j < m; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < rays.size(); ++k) s += Integer(degrees[k]) * rays[k].coords[j];
        if (s != 0) v.symbolic = false;
    }
    TorusElement mu;
    for (auto d : degrees) mu.push_back(pow(GaussianRational(2), d));
    v.sampled = in_group(mu, rays);
    return v;
}

int group_rank(const std::vector<LatticeVector>& rays, std::size_t dim) {
    IntegerMatrix m;
    for (const auto& r : rays) {
        if (r.dim() != dim) throw ShapeError("ray dimension mismatch");
        std::vector<Integer> row;
        for (auto c : r.coords) row.emplace_back(c);
        m.push_back(std::move(row));
    }
    if (invariant_factors(m).size() != dim) throw NotSpanning("rays do not span the ambient space");
    return static_cast<int>(rays.size()) - static_cast<int>(dim);
}

}  // namespace toricq
