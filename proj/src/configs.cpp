#include "toricq/configs.hpp"

#include "toricq/errors.hpp"
#include "toricq/realroots.hpp"

#include <algorithm>
#include <set>

namespace toricq {

int divisor_degree(const Divisor& xi) {
    int d = 0;
    for (const auto& [pt, m] : xi) d += m;
    return d;
}

Divisor conj(const Divisor& xi) {
    Divisor out;
    for (const auto& [pt, m] : xi) out[pt.conj()] = m;
    return out;
}

std::vector<int> DivisorSystem::degrees() const {
    std::vector<int> d;
    for (const auto& xi : divisors) d.push_back(divisor_degree(xi));
    return d;
}

void DivisorSystem::validate() const {
    if (n < 1) throw InvalidInput("multiplicity bound n must be >= 1");
    for (const auto& xi : divisors) {
        for (const auto& [pt, m] : xi)
            if (m < 1) throw InvalidInput("divisor multiplicities must be >= 1");
        if (field == Field::Real && toricq::conj(xi) != xi)
            throw InvalidInput("real divisor system is not closed under conjugation");
    }
}

DivisorSystem DivisorSystem::conj() const {
    DivisorSystem out = *this;
    for (auto& xi : out.divisors) xi = toricq::conj(xi);
    return out;
}

MonicPolynomial divisor_to_poly(const Divisor& xi) {
    GaussianPolynomial p = GaussianPolynomial::constant(GaussianRational(1));
    for (const auto& [pt, m] : xi) {
        if (m < 1) throw InvalidInput("divisor multiplicities must be >= 1");
        p = p * pow(GaussianPolynomial::linear(pt), static_cast<unsigned>(m));
    }
    return MonicPolynomial::from_polynomial(p);
}

namespace {

// Newton interpolation through (xs[k], ys[k]) over Q, returned in monomial form.
RationalPolynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
    const std::size_t m = xs.size();
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t k = m - 1; k >= j; --k) ys[k] = (ys[k] - ys[k - 1]) / (xs[k] - xs[k - j]);
    RationalPolynomial out;
    for (std::size_t k = m; k-- > 0;) {
        out = out * RationalPolynomial{-xs[k], Rational(1)} + RationalPolynomial::constant(ys[k]);
    }
    return out;
}

// g(a + i t) as a polynomial in t.
GaussianPolynomial on_vertical_line(const GaussianPolynomial& g, const Rational& a) {
    const GaussianPolynomial line{GaussianRational(a), GaussianRational::i()};
    GaussianPolynomial acc;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
        acc = acc * line + GaussianPolynomial::constant(*it);
    return acc;
}

// Distinct roots of the square-free g that lie in Q(i).
std::vector<GaussianRational> gaussian_rational_roots(const GaussianPolynomial& g) {
    const int d = g.degree();
    if (d < 1) return {};
    const auto gbar = g.map<GaussianRational>([](const GaussianRational& z) { return z.conj(); });
    // S(z) = Res_t(g(t), gbar(z - t)) vanishes at alpha_j + conj(alpha_k); degree d^2
    const int deg_s = d * d;
    std::vector<Rational> xs, ys;
    for (int z0 = 0; z0 <= deg_s; ++z0) {
        GaussianPolynomial shifted;
        const GaussianPolynomial line{GaussianRational(z0), GaussianRational(-1)};
        for (auto it = gbar.coeffs().rbegin(); it != gbar.coeffs().rend(); ++it)
            shifted = shifted * line + GaussianPolynomial::constant(*it);
        auto res = resultant(g, shifted);
        xs.emplace_back(z0);
        ys.push_back(res.re());
    }
    auto s = interpolate(xs, ys);

    std::set<GaussianRational> found;
    if (s.is_zero()) throw InvalidInput("degenerate real-part resultant");
    for (const auto& two_re : rational_roots(s)) {
        const Rational a = two_re / 2;
        auto h = on_vertical_line(g, a);
        auto common = real_common_part(h);
        if (common.degree() < 1) continue;
        for (const auto& b : rational_roots(common)) {
            GaussianRational alpha(a, b);
            if (g(alpha).is_zero()) found.insert(alpha);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace

Divisor poly_to_divisor(const MonicPolynomial& f) {
    Divisor out;
    if (f.degree() == 0) return out;
    GaussianPolynomial p = f.to_polynomial();
    int total = 0;
    for (const auto& alpha : gaussian_rational_roots(squarefree_part(p))) {
        const auto lin = GaussianPolynomial::linear(alpha);
        int m = 0;
        for (;;) {
            auto [q, r] = divmod(p, lin);
            if (!r.is_zero()) break;
            p = std::move(q);
            ++m;
        }
        out[alpha] = m;
        total += m;
    }
    if (total != f.degree()) throw NotSplittable("polynomial has a root outside Q(i)");
    return out;
}

PolySystem to_poly_system(const DivisorSystem& sys) {
    PolySystem out;
    out.field = sys.field;
    out.n = sys.n;
    for (const auto& xi : sys.divisors) out.polys.push_back(divisor_to_poly(xi));
    return out;
}

bool divisor_membership(const DivisorSystem& sys, const SimplicialComplex& k) {
    sys.validate();
    if (sys.divisors.size() != k.num_vertices())
        throw ShapeError("system has " + std::to_string(sys.divisors.size()) + " divisors but the complex has " +
                         std::to_string(k.num_vertices()) + " vertices");
    for (const auto& sigma : k.min_non_faces()) {
        const Divisor& first = sys.divisors[static_cast<std::size_t>(sigma.front())];
        for (const auto& [pt, m] : first) {
            if (!pt.is_real() || m < sys.n) continue;
            int low = m;
            for (int i : sigma) {
                const auto& xi = sys.divisors[static_cast<std::size_t>(i)];
                auto it = xi.find(pt);
                low = std::min(low, it == xi.end() ? 0 : it->second);
            }
            if (low >= sys.n) return false;
        }
    }
    return true;
}

Rational squash(const Rational& x, int big_n) {
    const Rational knee(big_n - 2);
    if (x <= knee) return x;
    const Rational t = x - knee;
    return knee + 2 * t / (1 + t);
}

GaussianRational phi_D(const GaussianRational& w, int big_n) { return {squash(w.re(), big_n), w.im()}; }

DivisorSystem stabilize(const DivisorSystem& sys, const std::vector<int>& a) {
    sys.validate();
    if (a.size() != sys.divisors.size()) throw InvalidInput("stabilization vector has the wrong length");
    if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }))
        throw InvalidInput("stabilization vector must be non-negative");
    if (std::all_of(a.begin(), a.end(), [](int v) { return v == 0; }))
        throw InvalidInput("stabilization vector must be nonzero");
    int big_n = 0;
    for (int d : sys.degrees()) big_n += d;

    DivisorSystem out;
    out.n = sys.n;
    out.field = sys.field;
    for (std::size_t i = 0; i < sys.divisors.size(); ++i) {
        Divisor xi;
        for (const auto& [pt, m] : sys.divisors[i]) xi[phi_D(pt, big_n)] = m;
        if (a[i] > 0) xi[GaussianRational(static_cast<long long>(big_n) + static_cast<long long>(i) + 1)] = a[i];
        out.divisors.push_back(std::move(xi));
    }
    return out;
}

DivisorSystem scan_at(const DivisorSystem& sys, const Rational& x, const Rational& eps) {
    if (eps <= 0) throw InvalidInput("scan width must be positive");
    DivisorSystem out;
    out.n = sys.n;
    out.field = sys.field;
    for (const auto& xi : sys.divisors) {
        Divisor kept;
        for (const auto& [pt, m] : xi)
            if (abs(pt.re() - x) < eps && abs(pt.im()) < 1) kept[pt] = m;
        out.divisors.push_back(std::move(kept));
    }
    return out;
}

}  // namespace toricq
