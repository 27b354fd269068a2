#pragma once

// Command-line front end. All commands run in-process through run_cli so the tests
// can drive them without spawning the executable.

#include "toricq/complex.hpp"
#include "toricq/fan.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace toricq {

struct FanReport {
    bool valid = false;
    std::vector<std::string> violations;
    bool smooth = false;
    bool complete = false;
    std::string complete_diagnostic;
    bool spans_lattice = false;
    std::optional<std::vector<std::int64_t>> positive_relation;
    std::vector<IndexSet> min_non_faces;
    std::optional<int> r_min;
    std::optional<int> group_rank;
};

FanReport analyze_fan(const Fan& fan);

/// "0" or "H3 = Z, H5 = Z^2 + Z/2".
std::string format_homology(const GradedRanks& h);

/// args excludes the program name. Returns 0 (ok / member), 1 (non-member) or 2 (error).
/// Nothing is written to `out` when the result is 2.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricq
