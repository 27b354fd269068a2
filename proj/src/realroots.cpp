#include "toricq/realroots.hpp"

#include <functional>

namespace toricq {

namespace {

Integer floor_div(const Rational& q) {
    Integer n = numerator_of(q), d = denominator_of(q);
    Integer f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

Integer ceil_div(const Rational& q) { return -floor_div(-q); }

}  // namespace

SturmSequence::SturmSequence(const RationalPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
    chain_.push_back(squarefree_part(p));
    if (chain_.front().degree() < 1) return;
    chain_.push_back(chain_.front().derivative());
    while (chain_.back().degree() > 0) {
        auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
        int s = sign(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_pos_infinity() const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
        int s = sign(q.leading());
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::variations_at_neg_infinity() const {
    int changes = 0, last = 0;
    for (const auto& q : chain_) {
        int s = sign(q.leading()) * (q.degree() % 2 ? -1 : 1);
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

Rational cauchy_bound(const RationalPolynomial& p) {
    Rational best = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rational v = abs(p.coeff(static_cast<std::size_t>(k)) / p.leading());
        if (v > best) best = v;
    }
    return best + 1;
}

std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
    SturmSequence s(p);
    std::vector<RootInterval> out;
    if (s.base().degree() < 1) return out;
    const Rational bound = cauchy_bound(s.base());
    std::function<void(const Rational&, const Rational&)> split = [&](const Rational& lo, const Rational& hi) {
        const int c = s.count(lo, hi);
        if (c == 0) return;
        if (c == 1) {
            if (s.base()(hi) == 0) out.push_back({hi, hi});
            else out.push_back({lo, hi});
            return;
        }
        Rational mid = (lo + hi) / 2;
        split(lo, mid);
        split(mid, hi);
    };
    split(-bound, bound);
    return out;
}

RootInterval refine(const SturmSequence& s, RootInterval iv, const Rational& width) {
    while (!iv.exact() && iv.hi - iv.lo >= width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (s.base()(mid) == 0) return {mid, mid};
        if (s.count(iv.lo, mid) == 1) iv.hi = mid;
        else iv.lo = mid;
    }
    return iv;
}

std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    SturmSequence s(p);
    const auto& base = s.base();
    std::vector<Rational> out;
    if (base.degree() < 1) return out;
    Integer den = 1;
    for (const auto& c : base.coeffs()) den = lcm(den, denominator_of(c));
    // a rational root k/q of the integer polynomial den*base has q | leading coefficient
    const Integer lead = abs(numerator_of(base.leading() * den));
    const Rational step(Integer(1), lead);
    for (auto iv : isolate_real_roots(base)) {
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        iv = refine(s, iv, step);
        if (iv.exact()) {
            out.push_back(iv.lo);
            continue;
        }
        for (Integer k = ceil_div(iv.lo * lead); Rational(k, lead) < iv.hi; ++k) {
            Rational cand(k, lead);
            if (cand > iv.lo && base(cand) == 0) out.push_back(cand);
        }
    }
    return out;
}

}  // namespace toricq
