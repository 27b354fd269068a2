#include "toricq/complex.hpp"

#include "toricq/errors.hpp"
#include "toricq/linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace toricq {

namespace {

constexpr std::size_t kMaxVertices = 63;

bool mask_less(VertexMask a, VertexMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    VertexMask low = (a ^ b) & (~(a ^ b) + 1);
    return (a & low) != 0;
}

void check_vertex_count(std::size_t r) {
    if (r > kMaxVertices) throw TooLarge("complexes are limited to 63 vertices");
}

}  // namespace

VertexMask to_mask(const IndexSet& s) {
    VertexMask m = 0;
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(kMaxVertices)) throw InvalidInput("vertex index out of range");
        m |= VertexMask{1} << v;
    }
    return m;
}

IndexSet from_mask(VertexMask m) {
    IndexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<IndexSet> min_non_faces)
    : num_vertices_(num_vertices) {
    check_vertex_count(num_vertices);
    std::vector<VertexMask> masks;
    for (auto& s : min_non_faces) {
        for (int v : s)
            if (v < 0 || static_cast<std::size_t>(v) >= num_vertices)
                throw InvalidInput("non-face references vertex " + std::to_string(v) + " outside [0, " +
                                   std::to_string(num_vertices) + ")");
        masks.push_back(to_mask(s));
    }
    std::sort(masks.begin(), masks.end(), mask_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (VertexMask m : masks) {
        if (m == 0) throw InvalidInput("the empty set is always a face");
        bool redundant = std::any_of(masks_.begin(), masks_.end(), [m](VertexMask k) { return (k & m) == k; });
        if (!redundant) masks_.push_back(m);
    }
    for (VertexMask m : masks_) min_non_faces_.push_back(from_mask(m));
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t num_vertices, const std::vector<IndexSet>& generators) {
    check_vertex_count(num_vertices);
    std::vector<VertexMask> gens;
    for (const auto& g : generators) {
        for (int v : g)
            if (v < 0 || static_cast<std::size_t>(v) >= num_vertices) throw InvalidInput("face vertex out of range");
        gens.push_back(to_mask(g));
    }
    auto in_closure = [&](VertexMask s) {
        return s == 0 || std::any_of(gens.begin(), gens.end(), [s](VertexMask g) { return (s & g) == s; });
    };
    // every minimal non-face S arises as F ∪ {v} with F = S minus its largest vertex
    std::vector<VertexMask> faces{0};
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const VertexMask f = faces[i];
        const int start = f ? 64 - std::countl_zero(f) : 0;
        for (int v = start; v < static_cast<int>(num_vertices); ++v) {
            VertexMask s = f | (VertexMask{1} << v);
            if (in_closure(s)) faces.push_back(s);
        }
    }
    std::vector<IndexSet> mnf;
    for (VertexMask f : faces) {
        const int start = f ? 64 - std::countl_zero(f) : 0;
        for (int v = start; v < static_cast<int>(num_vertices); ++v) {
            VertexMask s = f | (VertexMask{1} << v);
            if (in_closure(s)) continue;
            bool minimal = true;
            for (VertexMask rest = s; rest && minimal; rest &= rest - 1) {
                VertexMask bit = rest & (~rest + 1);
                minimal = in_closure(s & ~bit);
            }
            if (minimal) mnf.push_back(from_mask(s));
        }
    }
    return SimplicialComplex(num_vertices, std::move(mnf));
}

bool SimplicialComplex::is_face(VertexMask s) const {
    if (num_vertices_ < 64 && (s >> num_vertices_) != 0) return false;
    return std::none_of(masks_.begin(), masks_.end(), [s](VertexMask k) { return (k & s) == k; });
}

std::vector<VertexMask> SimplicialComplex::faces(std::size_t limit) const {
    std::vector<VertexMask> out{0};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const VertexMask f = out[i];
        const int start = f ? 64 - std::countl_zero(f) : 0;
        for (int v = start; v < static_cast<int>(num_vertices_); ++v) {
            VertexMask s = f | (VertexMask{1} << v);
            if (!is_face(s)) continue;
            if (out.size() >= limit) throw TooLarge("complex has more than " + std::to_string(limit) + " faces");
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), mask_less);
    return out;
}

std::vector<IndexSet> SimplicialComplex::facets() const {
    std::vector<IndexSet> out;
    for (VertexMask f : faces()) {
        bool maximal = true;
        for (std::size_t v = 0; v < num_vertices_ && maximal; ++v) {
            VertexMask bit = VertexMask{1} << v;
            if (!(f & bit) && is_face(f | bit)) maximal = false;
        }
        if (maximal) out.push_back(from_mask(f));
    }
    return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(VertexMask vertices) const {
    std::vector<int> relabel(num_vertices_, -1);
    int next = 0;
    for (int v : from_mask(vertices)) {
        if (static_cast<std::size_t>(v) >= num_vertices_) throw InvalidInput("vertex outside complex");
        relabel[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<IndexSet> mnf;
    for (VertexMask k : masks_) {
        if ((k & vertices) != k) continue;
        IndexSet s;
        for (int v : from_mask(k)) s.push_back(relabel[static_cast<std::size_t>(v)]);
        mnf.push_back(std::move(s));
    }
    return SimplicialComplex(static_cast<std::size_t>(next), std::move(mnf));
}

void GradedRanks::add(int degree, std::size_t rank, const std::vector<Integer>& torsion) {
    if (rank == 0 && torsion.empty()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), degree,
                               [](const Entry& e, int d) { return e.degree < d; });
    if (it == entries_.end() || it->degree != degree) it = entries_.insert(it, Entry{degree, 0, {}});
    it->rank += rank;
    it->torsion.insert(it->torsion.end(), torsion.begin(), torsion.end());
    std::sort(it->torsion.begin(), it->torsion.end());
}

std::size_t GradedRanks::rank(int degree) const {
    for (const auto& e : entries_)
        if (e.degree == degree) return e.rank;
    return 0;
}

std::vector<Integer> GradedRanks::torsion(int degree) const {
    for (const auto& e : entries_)
        if (e.degree == degree) return e.torsion;
    return {};
}

std::optional<int> GradedRanks::lowest_degree() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.front().degree;
}

SimplicialComplex underlying_complex(const Fan& fan) {
    std::vector<IndexSet> gens;
    for (const auto& c : fan.max_cones()) gens.push_back(c.generators);
    return SimplicialComplex::from_faces(fan.num_rays(), gens);
}

const std::vector<IndexSet>& minimal_non_faces(const SimplicialComplex& k) { return k.min_non_faces(); }

std::vector<IndexSet> primitive_collections(const Fan& fan) { return underlying_complex(fan).min_non_faces(); }

int r_min(const SimplicialComplex& k) {
    const auto& mnf = k.min_non_faces();
    if (mnf.empty()) throw Undefined("r_min is undefined for a full simplex");
    std::size_t best = mnf.front().size();
    for (const auto& s : mnf) best = std::min(best, s.size());
    return static_cast<int>(best);
}

int power_vertex(int ray, int slot, int n) { return ray * n + slot; }

SimplicialComplex complex_power(const SimplicialComplex& k, int n) {
    if (n < 1) throw InvalidInput("power n must be positive");
    std::vector<IndexSet> mnf;
    for (const auto& tau : k.min_non_faces()) {
        IndexSet s;
        for (int i : tau)
            for (int j = 0; j < n; ++j) s.push_back(power_vertex(i, j, n));
        mnf.push_back(std::move(s));
    }
    return SimplicialComplex(k.num_vertices() * static_cast<std::size_t>(n), std::move(mnf));
}

Fan fan_power(const Fan& fan, int n) {
    if (n < 1) throw InvalidInput("power n must be positive");
    const std::size_t m = fan.dim();
    const auto un = static_cast<std::size_t>(n);
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < fan.num_rays(); ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            LatticeVector v{std::vector<std::int64_t>(m * un, 0)};
            for (std::size_t c = 0; c < m; ++c) v.coords[j * m + c] = fan.rays()[i].coords[c];
            rays.push_back(std::move(v));
        }
    }
    std::vector<Cone> cones;
    for (auto& f : complex_power(underlying_complex(fan), n).facets()) cones.emplace_back(std::move(f));
    return Fan(m * un, std::move(rays), std::move(cones));
}

namespace {

// Reduced homology including degree -1 (nonzero only for the void complex).
GradedRanks reduced_homology_impl(const SimplicialComplex& k, std::size_t face_limit) {
    const auto faces = k.faces(face_limit);
    int top = -1;
    for (VertexMask f : faces) top = std::max(top, std::popcount(f) - 1);
    // by_dim[d + 1] lists d-dimensional faces; the empty face is dimension -1
    std::vector<std::vector<VertexMask>> by_dim(static_cast<std::size_t>(top + 2));
    for (VertexMask f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    std::vector<std::unordered_map<VertexMask, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;

    // boundary[d] : C_d -> C_{d-1}, stored by position d+1 in by_dim
    std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
    std::vector<std::vector<Integer>> torsion(by_dim.size() + 1);
    for (std::size_t pos = 1; pos < by_dim.size(); ++pos) {
        SparseIntegerMatrix bd(by_dim[pos - 1].size(), by_dim[pos].size());
        for (std::size_t c = 0; c < by_dim[pos].size(); ++c) {
            const VertexMask f = by_dim[pos][c];
            int sgn = 1;
            for (int v : from_mask(f)) {
                bd.add(index[pos - 1].at(f & ~(VertexMask{1} << v)), c, Integer(sgn));
                sgn = -sgn;
            }
        }
        auto factors = bd.reduce();
        ranks[pos] = factors.size();
        for (auto& q : factors)
            if (q != 1) torsion[pos].push_back(q);
    }
    GradedRanks out;
    for (std::size_t pos = 0; pos < by_dim.size(); ++pos) {
        const std::size_t cycles = by_dim[pos].size() - ranks[pos];
        const std::size_t free = cycles - ranks[pos + 1];
        out.add(static_cast<int>(pos) - 1, free, torsion[pos + 1]);
    }
    return out;
}

}  // namespace

GradedRanks reduced_homology(const SimplicialComplex& k, std::size_t face_limit) {
    return reduced_homology_impl(k, face_limit);
}

GradedRanks moment_angle_homology(const SimplicialComplex& k, int n, int ball_dim) {
    if (n < 1 || (ball_dim != n && ball_dim != 2 * n))
        throw InvalidInput("ball_dim must be n (real model) or 2n (complex model)");
    const std::size_t r = k.num_vertices();
    if (r > 24) throw TooLarge("moment-angle homology enumerates all vertex subsets; limited to 24 vertices");
    GradedRanks out;
    const VertexMask all = (VertexMask{1} << r) - 1;
    for (VertexMask j = 1; j <= all; ++j) {
        if (k.is_face(j)) continue;  // full simplex: contractible
        const int size = std::popcount(j);
        auto h = reduced_homology_impl(k.full_subcomplex(j), std::size_t{1} << 20);
        for (const auto& e : h.entries()) out.add(e.degree + 1 + (ball_dim - 1) * size, e.rank, e.torsion);
    }
    return out;
}

}  // namespace toricq
