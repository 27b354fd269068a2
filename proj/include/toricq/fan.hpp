#pragma once

// Simplicial rational fans: rays, cones, validation and toric invariants.

#include "toricq/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricq {

/// Integer vector of the ambient lattice Z^m.
struct LatticeVector {
    std::vector<std::int64_t> coords;

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const;
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Cone spanned by a subset of the fan's rays (0-based indices, sorted, unique).
struct Cone {
    std::vector<int> generators;

    Cone() = default;
    explicit Cone(std::vector<int> gens);
    std::size_t dim() const { return generators.size(); }
    friend bool operator==(const Cone&, const Cone&) = default;
};

class Fan {
public:
    /// Checks shape, primitivity and distinctness of rays and index ranges of cones.
    /// Geometric axioms are checked separately by validate_fan.
    Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_.at(static_cast<std::size_t>(i)); }
    const std::vector<Cone>& max_cones() const { return max_cones_; }

private:
    std::size_t dim_;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> max_cones_;
};

/// v / gcd(v). Throws InvalidRay for the zero vector.
LatticeVector primitive_generator(const LatticeVector& v);

/// True iff the generators are linearly independent over Q.
bool is_simplicial(const Cone& c, const Fan& fan);

/// sigma ∩ (-sigma) = {0}, decided exactly: no nontrivial non-negative relation among generators.
bool is_strongly_convex(const Cone& c, const Fan& fan);

/// Exact membership of a rational point in a simplicial cone.
bool point_in_cone(const std::vector<Rational>& x, const Cone& c, const Fan& fan);

struct FanViolation {
    std::string message;
    std::vector<Rational> witness;  // a point of σ1∩σ2 outside the shared face, when applicable
};

struct ValidationReport {
    std::vector<FanViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Strong convexity of every cone and the common-face axiom for each pair of maximal cones.
/// Throws UnsupportedCone if some maximal cone is not simplicial.
ValidationReport validate_fan(const Fan& fan);

/// Every maximal cone is unimodular (all Smith invariant factors equal to one).
bool is_smooth(const Fan& fan);

struct CompletenessReport {
    bool complete = false;
    std::string diagnostic;
    std::size_t samples = 0;            // random directions tested
    std::size_t uncovered_samples = 0;  // directions lying in no maximal cone
    bool sampling_consistent = true;    // no uncovered direction when the wall test says complete
};

/// Wall test (each codimension-one face of a full-dimensional cone bounds exactly two
/// cones, on opposite sides) plus connectivity, with a seeded random-direction check.
CompletenessReport completeness_report(const Fan& fan, std::uint64_t seed = 0, std::size_t samples = 64);
bool is_complete(const Fan& fan);

/// Integer row span of the rays equals Z^m.
bool spans_lattice(const std::vector<LatticeVector>& rays, std::size_t dim);

/// Strictly positive integer D* with sum d_k n_k = 0, or nullopt if none exists. The
/// rational minimiser of sum d_k over d_k >= 1 is scaled to coprime integers.
/// Throws TooLarge for more than 16 rays.
std::optional<std::vector<std::int64_t>> find_positive_relation(const std::vector<LatticeVector>& rays,
                                                                std::size_t dim);

}  // namespace toricq
