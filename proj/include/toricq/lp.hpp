#pragma once

// Exact rational linear programming: two-phase primal simplex with Bland's rule.

#include "toricq/linalg.hpp"

#include <optional>
#include <vector>

namespace toricq::lp {

/// minimize c.x subject to A x = b, x >= 0.
struct Problem {
    RationalMatrix a;
    std::vector<Rational> b;
    std::vector<Rational> c;  // empty means pure feasibility
    std::size_t num_vars = 0;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    std::vector<Rational> x;
    Rational objective{0};
};

Result solve(const Problem& problem);

/// Some x >= 0 with A x = b, if one exists.
std::optional<std::vector<Rational>> feasible_point(const RationalMatrix& a, const std::vector<Rational>& b,
                                                    std::size_t num_vars);

}  // namespace toricq::lp
