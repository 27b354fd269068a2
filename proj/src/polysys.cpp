#include "toricq/polysys.hpp"

#include "toricq/errors.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace toricq {

int field_dim(Field f) { return f == Field::Complex ? 2 : 1; }

const char* field_name(Field f) { return f == Field::Complex ? "C" : "R"; }

MonicPolynomial MonicPolynomial::from_polynomial(const GaussianPolynomial& p) {
    if (p.is_zero() || p.leading() != GaussianRational(1)) throw InvalidInput("polynomial is not monic");
    std::vector<GaussianRational> lower(p.coeffs().begin(), p.coeffs().end() - 1);
    return MonicPolynomial(std::move(lower));
}

GaussianPolynomial MonicPolynomial::to_polynomial() const {
    std::vector<GaussianRational> c = lower_;
    c.emplace_back(1);
    return GaussianPolynomial(std::move(c));
}

bool MonicPolynomial::is_real() const {
    return std::all_of(lower_.begin(), lower_.end(), [](const GaussianRational& z) { return z.is_real(); });
}

MonicPolynomial MonicPolynomial::conj() const {
    std::vector<GaussianRational> c;
    for (const auto& z : lower_) c.push_back(z.conj());
    return MonicPolynomial(std::move(c));
}

std::vector<int> PolySystem::degrees() const {
    std::vector<int> d;
    for (const auto& f : polys) d.push_back(f.degree());
    return d;
}

void PolySystem::validate() const {
    if (n < 1) throw InvalidInput("multiplicity bound n must be >= 1");
    if (field == Field::Real) {
        for (const auto& f : polys)
            if (!f.is_real()) throw InvalidInput("real system has a non-real coefficient");
    }
}

PolySystem PolySystem::conj() const {
    PolySystem out = *this;
    for (auto& f : out.polys) f = f.conj();
    return out;
}

std::vector<MonicPolynomial> f_n_tuple(const MonicPolynomial& f, int n) {
    if (n < 1) throw InvalidInput("n must be >= 1");
    const auto p = f.to_polynomial();
    std::vector<MonicPolynomial> out{f};
    for (int j = 1; j < n; ++j) out.push_back(MonicPolynomial::from_polynomial(p + p.derivative(static_cast<unsigned>(j))));
    return out;
}

GaussianPolynomial mult_locus(const MonicPolynomial& f, int n) {
    if (n < 1) throw InvalidInput("n must be >= 1");
    GaussianPolynomial p = f.to_polynomial();
    GaussianPolynomial g = p;
    GaussianPolynomial d = p;
    for (int j = 1; j < n && g.degree() > 0; ++j) {
        d = d.derivative();
        g = gcd(g, d);
    }
    return g.monic();
}

RationalPolynomial real_common_part(const GaussianPolynomial& g) {
    if (g.is_zero()) throw InvalidInput("real root test of the zero polynomial");
    auto re = g.map<Rational>([](const GaussianRational& z) { return z.re(); });
    auto im = g.map<Rational>([](const GaussianRational& z) { return z.im(); });
    if (im.is_zero()) return re;
    return gcd(re, im);
}

bool real_roots_exist(const GaussianPolynomial& g) {
    auto h = real_common_part(g);
    if (h.degree() < 1) return false;
    return SturmSequence(h).count_all() > 0;
}

std::vector<RootInterval> real_root_intervals(const GaussianPolynomial& g) {
    auto h = real_common_part(g);
    if (h.degree() < 1) return {};
    return isolate_real_roots(h);
}

namespace {

void check_shape(const PolySystem& sys, const SimplicialComplex& k) {
    sys.validate();
    if (sys.polys.size() != k.num_vertices())
        throw ShapeError("system has " + std::to_string(sys.polys.size()) + " polynomials but the complex has " +
                         std::to_string(k.num_vertices()) + " vertices");
}

// gcd of the multiplicity loci over sigma, with loci computed once per index
class LocusCache {
public:
    explicit LocusCache(const PolySystem& sys) : sys_(sys), loci_(sys.polys.size()) {}

    GaussianPolynomial common(const IndexSet& sigma) {
        GaussianPolynomial g;
        bool first = true;
        for (int i : sigma) {
            const auto& l = locus(static_cast<std::size_t>(i));
            g = first ? l : gcd(g, l);
            first = false;
            if (g.degree() == 0) break;
        }
        return g;
    }

private:
    const GaussianPolynomial& locus(std::size_t i) {
        if (!loci_[i]) loci_[i] = mult_locus(sys_.polys[i], sys_.n);
        return *loci_[i];
    }

    const PolySystem& sys_;
    std::vector<std::optional<GaussianPolynomial>> loci_;
};

}  // namespace

MembershipResult check_member_Q(const PolySystem& sys, const SimplicialComplex& k) {
    check_shape(sys, k);
    LocusCache cache(sys);
    for (const auto& sigma : k.min_non_faces()) {
        auto g = cache.common(sigma);
        if (g.degree() < 1) continue;
        auto roots = real_root_intervals(g);
        if (!roots.empty()) return {false, sigma, roots.front()};
    }
    return {};
}

MembershipResult check_member_Poly(const PolySystem& sys, const SimplicialComplex& k) {
    check_shape(sys, k);
    LocusCache cache(sys);
    for (const auto& sigma : k.min_non_faces()) {
        if (cache.common(sigma).degree() >= 1) return {false, sigma, std::nullopt};
    }
    return {};
}

bool is_member_Q(const PolySystem& sys, const SimplicialComplex& k) { return check_member_Q(sys, k).member; }
bool is_member_Poly(const PolySystem& sys, const SimplicialComplex& k) { return check_member_Poly(sys, k).member; }

int StabilityParams::d_min() const {
    if (degrees.empty()) throw InvalidInput("degree vector is empty");
    return *std::min_element(degrees.begin(), degrees.end());
}

int StabilityParams::d_prime() const { return d_min() / n; }

void StabilityParams::validate() const {
    if (n < 1) throw InvalidInput("n must be >= 1");
    if (r_min < 2) throw InvalidInput("r_min must be >= 2");
    if (degrees.empty()) throw InvalidInput("degree vector is empty");
    for (int d : degrees)
        if (d < 1) throw InvalidInput("degrees must be positive");
}

FlaggedValue stability_dimension(const StabilityParams& p) {
    p.validate();
    const long long v = (static_cast<long long>(p.field_dim()) * p.n * p.r_min - 2) * p.d_prime() - 2;
    return {v, v < 0};
}

FlaggedValue dpoly_dimension(const StabilityParams& p) {
    p.validate();
    const long long v = (2LL * p.n * p.r_min - 3) * p.d_prime() - 2;
    return {v, v < 0};
}

ConditionFlags conditions_flags(const StabilityParams& p) {
    p.validate();
    ConditionFlags f;
    f.star = p.d_min() >= p.n && p.n >= 1;
    f.dagger = f.star && !(p.n == 1 && p.r_min == 2);
    return f;
}

std::string ConnectivityBound::describe() const {
    switch (kind) {
        case Kind::Connected: return std::to_string(value) + "-connected";
        case Kind::SimplyConnectedOnly: return "simply connected";
        case Kind::Unknown: break;
    }
    return "no bound";
}

ConnectivityBound connectivity_bound(const StabilityParams& p) {
    p.validate();
    using K = ConnectivityBound::Kind;
    const int n = p.n, r = p.r_min, dp = p.d_prime(), dmin = p.d_min();
    if (dp < 1) return {K::Unknown, 0};
    if (p.field == Field::Complex) {
        if (n >= 2) return {K::Connected, dp >= 2 ? 2 * n * r - 3 : 2 * n * r - 4};
        if (dmin >= 2) return {K::Connected, 2 * r - 3};
        if (r >= 3) return {K::Connected, 2 * r - 4};
        return {K::SimplyConnectedOnly, 1};
    }
    if (n >= 2) {
        if (dp >= 2) return {K::Connected, n * r - 3};
        if (n * r >= 5) return {K::Connected, n * r - 4};
        return {K::SimplyConnectedOnly, 1};  // n = r_min = 2
    }
    if (r == 2) return {K::Unknown, 0};  // not path-connected
    if (dmin >= 2) return r >= 4 ? ConnectivityBound{K::Connected, r - 3} : ConnectivityBound{K::SimplyConnectedOnly, 1};
    return r >= 5 ? ConnectivityBound{K::Connected, r - 4} : ConnectivityBound{K::SimplyConnectedOnly, 1};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

PolySystem random_system(const SampleConfig& cfg, std::uint64_t sample_seed) {
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<int> num(-cfg.box_bound, cfg.box_bound);
    std::uniform_int_distribution<int> den(1, cfg.box_bound);
    auto coeff = [&] { return Rational(num(rng), den(rng)); };
    PolySystem sys;
    sys.field = cfg.field;
    sys.n = cfg.n;
    for (int d : cfg.degrees) {
        std::vector<GaussianRational> lower;
        for (int k = 0; k < d; ++k) {
            Rational re = coeff();
            Rational im = cfg.field == Field::Complex ? coeff() : Rational(0);
            lower.emplace_back(re, im);
        }
        sys.polys.emplace_back(std::move(lower));
    }
    return sys;
}

}  // namespace

SampleStats sample_systems(const SampleConfig& cfg, const SimplicialComplex& k) {
    if (cfg.count < 1) throw InvalidInput("sample count must be >= 1");
    if (cfg.box_bound < 1) throw InvalidInput("box bound must be >= 1");
    if (cfg.workers < 1) throw InvalidInput("worker count must be >= 1");
    if (cfg.degrees.size() != k.num_vertices()) throw ShapeError("degree vector length does not match complex");
    for (int d : cfg.degrees)
        if (d < 1) throw InvalidInput("degrees must be positive");

    std::vector<SampleStats> partial(cfg.workers);
    auto work = [&](unsigned w) {
        SampleStats& st = partial[w];
        for (std::size_t i = w; i < cfg.count; i += cfg.workers) {
            auto sys = random_system(cfg, splitmix64(cfg.seed ^ splitmix64(i)));
            ++st.count;
            if (is_member_Q(sys, k)) ++st.q_members;
            else ++st.discriminant_hits;
            if (is_member_Poly(sys, k)) ++st.poly_members;
        }
    };
    if (cfg.workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < cfg.workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    SampleStats total;
    for (const auto& st : partial) {
        total.count += st.count;
        total.q_members += st.q_members;
        total.poly_members += st.poly_members;
        total.discriminant_hits += st.discriminant_hits;
    }
    return total;
}

}  // namespace toricq
