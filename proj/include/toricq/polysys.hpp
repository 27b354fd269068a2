#pragma once

// Tuples of monic polynomials over Q(i), membership in the spaces of tuples with
// bounded (real) common-root multiplicity, and the closed-form dimension formulas.

#include "toricq/complex.hpp"
#include "toricq/polynomial.hpp"
#include "toricq/realroots.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace toricq {

enum class Field { Real, Complex };

/// dim_R of the field: 1 for R, 2 for C.
int field_dim(Field f);
const char* field_name(Field f);

/// Monic polynomial of degree d stored as c_0..c_{d-1}; the leading 1 is implicit.
class MonicPolynomial {
public:
    MonicPolynomial() = default;
    explicit MonicPolynomial(std::vector<GaussianRational> lower) : lower_(std::move(lower)) {}

    /// Throws InvalidInput unless p is monic.
    static MonicPolynomial from_polynomial(const GaussianPolynomial& p);

    int degree() const { return static_cast<int>(lower_.size()); }
    const std::vector<GaussianRational>& lower() const { return lower_; }
    GaussianPolynomial to_polynomial() const;
    bool is_real() const;
    MonicPolynomial conj() const;

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
    std::vector<GaussianRational> lower_;
};

struct PolySystem {
    Field field = Field::Complex;
    int n = 1;
    std::vector<MonicPolynomial> polys;

    std::vector<int> degrees() const;
    /// Throws InvalidInput for n < 1 or non-real coefficients in a real system.
    void validate() const;
    PolySystem conj() const;
};

/// (f, f + f', f + f'', ..., f + f^{(n-1)}).
std::vector<MonicPolynomial> f_n_tuple(const MonicPolynomial& f, int n);

/// gcd(f, f', ..., f^{(n-1)}) made monic: its roots are the roots of f of multiplicity >= n.
GaussianPolynomial mult_locus(const MonicPolynomial& f, int n);

/// Real polynomial h whose real roots are exactly the real roots of g: g itself when g is
/// real, otherwise gcd(Re g, Im g). Throws InvalidInput when g = 0.
RationalPolynomial real_common_part(const GaussianPolynomial& g);

bool real_roots_exist(const GaussianPolynomial& g);
std::vector<RootInterval> real_root_intervals(const GaussianPolynomial& g);

struct MembershipResult {
    bool member = true;
    IndexSet witness;                      // offending minimal non-face
    std::optional<RootInterval> location;  // a real violating root, Q-membership only
};

MembershipResult check_member_Q(const PolySystem& sys, const SimplicialComplex& k);
MembershipResult check_member_Poly(const PolySystem& sys, const SimplicialComplex& k);
bool is_member_Q(const PolySystem& sys, const SimplicialComplex& k);
bool is_member_Poly(const PolySystem& sys, const SimplicialComplex& k);

struct StabilityParams {
    std::vector<int> degrees;  // D
    int n = 1;
    int r_min = 2;
    Field field = Field::Complex;

    int d_min() const;
    /// floor(d_min / n)
    int d_prime() const;
    /// d(K) = dim_R K
    int field_dim() const { return toricq::field_dim(field); }
    void validate() const;
};

struct FlaggedValue {
    long long value = 0;
    bool degenerate = false;  // negative
    friend bool operator==(const FlaggedValue&, const FlaggedValue&) = default;
};

/// (d(K) n r_min - 2) floor(d_min / n) - 2.
FlaggedValue stability_dimension(const StabilityParams& p);
/// (2 n r_min - 3) floor(d_min / n) - 2.
FlaggedValue dpoly_dimension(const StabilityParams& p);

struct ConditionFlags {
    bool star = false;    // d_min >= n >= 1
    bool dagger = false;  // star and (n, r_min) != (1, 2)
};
ConditionFlags conditions_flags(const StabilityParams& p);

struct ConnectivityBound {
    enum class Kind { Connected, SimplyConnectedOnly, Unknown };
    Kind kind = Kind::Unknown;
    int value = 0;  // meaningful for Connected
    std::string describe() const;
};
ConnectivityBound connectivity_bound(const StabilityParams& p);

struct SampleConfig {
    std::vector<int> degrees;
    int n = 1;
    Field field = Field::Complex;
    int box_bound = 3;  // |numerator| <= box, 1 <= denominator <= box
    std::size_t count = 100;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct SampleStats {
    std::size_t count = 0;
    std::size_t q_members = 0;
    std::size_t poly_members = 0;
    std::size_t discriminant_hits = 0;  // not in Q
    friend bool operator==(const SampleStats&, const SampleStats&) = default;
};

/// Random systems with bounded rational coefficients. Each sample is seeded from
/// (seed, index), so results do not depend on the worker count.
SampleStats sample_systems(const SampleConfig& cfg, const SimplicialComplex& k);

}  // namespace toricq
