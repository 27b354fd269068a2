#pragma once

// Simplicial complexes stored through their minimal non-faces, power complexes K(n),
// and integral homology of complexes and polyhedral products.

#include "toricq/arith.hpp"
#include "toricq/fan.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toricq {

using IndexSet = std::vector<int>;
using VertexMask = std::uint64_t;

VertexMask to_mask(const IndexSet& s);
IndexSet from_mask(VertexMask m);

/// Complex on vertices 0..r-1. A set is a face iff it contains no minimal non-face.
class SimplicialComplex {
public:
    /// Non-minimal entries are dropped; the stored list is sorted and canonical.
    SimplicialComplex(std::size_t num_vertices, std::vector<IndexSet> min_non_faces);

    /// Subset closure of the given faces.
    static SimplicialComplex from_faces(std::size_t num_vertices, const std::vector<IndexSet>& generators);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<IndexSet>& min_non_faces() const { return min_non_faces_; }

    bool is_face(VertexMask s) const;
    bool is_face(const IndexSet& s) const { return is_face(to_mask(s)); }

    /// All faces including the empty one, ordered by size then lexicographically.
    /// Throws TooLarge beyond `limit` faces.
    std::vector<VertexMask> faces(std::size_t limit = std::size_t{1} << 20) const;
    std::vector<IndexSet> facets() const;

    /// Full subcomplex on `vertices`, relabelled 0..|J|-1 in increasing order.
    SimplicialComplex full_subcomplex(VertexMask vertices) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t num_vertices_;
    std::vector<IndexSet> min_non_faces_;
    std::vector<VertexMask> masks_;
};

/// Reduced homology summary: only degrees with nonzero free rank or torsion are listed.
class GradedRanks {
public:
    struct Entry {
        int degree;
        std::size_t rank;
        std::vector<Integer> torsion;  // invariant factors > 1
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    void add(int degree, std::size_t rank, const std::vector<Integer>& torsion);

    std::size_t rank(int degree) const;
    std::vector<Integer> torsion(int degree) const;
    bool is_zero() const { return entries_.empty(); }
    /// Lowest degree with nonzero homology, if any.
    std::optional<int> lowest_degree() const;
    const std::vector<Entry>& entries() const { return entries_; }

    friend bool operator==(const GradedRanks&, const GradedRanks&) = default;

private:
    std::vector<Entry> entries_;
};

SimplicialComplex underlying_complex(const Fan& fan);
const std::vector<IndexSet>& minimal_non_faces(const SimplicialComplex& k);
std::vector<IndexSet> primitive_collections(const Fan& fan);

/// Smallest minimal non-face. Throws Undefined for a full simplex.
int r_min(const SimplicialComplex& k);

/// K(n) on [r]x[n]; vertex (i, j) has index i*n + j.
SimplicialComplex complex_power(const SimplicialComplex& k, int n);
int power_vertex(int ray, int slot, int n);

/// F_n(fan) in R^{mn} with rays n_{i,j} = n_i placed in block j.
Fan fan_power(const Fan& fan, int n);

/// Reduced integral homology of |K|. Throws TooLarge past the face limit.
GradedRanks reduced_homology(const SimplicialComplex& k, std::size_t face_limit = std::size_t{1} << 20);

/// Reduced homology of Z_K(D^b, S^{b-1}) with b = ball_dim in {n, 2n}, via the
/// full-subcomplex splitting  H~_p = ⊕_J H~_{p - 1 - (b-1)|J|}(K_J).
GradedRanks moment_angle_homology(const SimplicialComplex& k, int n, int ball_dim);

}  // namespace toricq
