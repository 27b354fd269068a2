#pragma once

// Homogeneous coordinates: the coordinate-subspace complement, the Cox group and
// the evaluation of a polynomial system at a real point.

#include "toricq/complex.hpp"
#include "toricq/fan.hpp"
#include "toricq/polysys.hpp"

#include <vector>

namespace toricq {

/// r blocks of n coordinates each.
using BlockPoint = std::vector<std::vector<GaussianRational>>;
/// r nonzero scalars.
using TorusElement = std::vector<GaussianRational>;

IndexSet zero_pattern(const BlockPoint& p);

/// zero_pattern(p) is a face of K. Throws ShapeError on a block count mismatch.
bool in_complement(const BlockPoint& p, const SimplicialComplex& k);

/// Block i = (f_i(x), f_i(x) + f_i'(x), ..., f_i(x) + f_i^{(n-1)}(x)).
BlockPoint evaluate_system(const PolySystem& sys, const Rational& x);

/// prod_k mu_k^{<n_k, e_j>} = 1 for every j. Throws InvalidInput on a zero entry.
bool in_group(const TorusElement& mu, const std::vector<LatticeVector>& rays);

struct CoxVerdict {
    bool symbolic = false;  // sum d_k n_k = 0
    bool sampled = false;   // (2^{d_k})_k lies in the group
};
CoxVerdict cox_criterion(const std::vector<LatticeVector>& rays, const std::vector<std::int64_t>& degrees);

/// r - m. Throws NotSpanning if the rays do not span Q^m.
int group_rank(const std::vector<LatticeVector>& rays, std::size_t dim);

}  // namespace toricq
