#pragma once

// Bookkeeping for the truncated E^1 pages: dimension counts, vanishing regions and
// brute-force oracles for the stability frontier and the connectivity minimum.

#include "toricq/polysys.hpp"

#include <map>
#include <string>
#include <vector>

namespace toricq {

struct AuxDimensions {
    long long big_n = 0;   // N(D) = sum d_i
    long long dim_l = 0;   // n d(K) (r - r_min)
    long long dim_c = 0;   // k + d(K) k n (r - r_min)
    long long rank_l = 0;  // d(K)(N - n r k) + k - 1
    friend bool operator==(const AuxDimensions&, const AuxDimensions&) = default;
};

/// Throws RangeError unless 1 <= k <= floor(d_min / n), and InvalidInput if r < r_min.
AuxDimensions aux_dimensions(const StabilityParams& p, int r, int k);

enum class Cell { Zero, PossiblyNonzero };

Cell e1_vanishing(const StabilityParams& p, int r, int k, int s);

struct E1Grid {
    StabilityParams params;
    int r = 0;
    int max_k = 0;  // floor(d_min / n) + 1
    int max_s = 0;
    std::vector<std::vector<Cell>> cells;  // cells[k][s]

    /// Rows k = 0..max_k; "Z" marks (0,0), "*" other possibly nonzero cells, "." vanishing ones.
    std::string render_text() const;
    std::string render_csv() const;
};

/// s window defaults to just past the last row's vanishing line.
E1Grid build_grid(const StabilityParams& p, int r, int max_s = -1);

struct FrontierResult {
    long long value = 0;                  // min_t a(t) - 2
    std::map<int, long long> a_by_t;      // t -> a(t), nonempty A_t only
    std::size_t tuples = 0;               // l-tuples enumerated
};

/// Enumerates strictly increasing l-tuples with sum <= d' + 1 and scans the cells of each A_t.
/// Throws RangeError when floor(d_min / n) = 0.
FrontierResult stable_frontier_oracle(const StabilityParams& p);

struct ConnectivityResult {
    long long m0 = 0;
    std::map<int, long long> a_by_k;  // k -> a(k)
};

/// a(k) = (first s with a possibly nonzero cell in row k) - k - 1, minimised over 1 <= k <= d' + 1.
ConnectivityResult connectivity_oracle(const StabilityParams& p);

/// d(K) n r_min - 3 when d' >= 2, d(K) n r_min - 4 when d' = 1.
long long connectivity_closed_form(const StabilityParams& p);

}  // namespace toricq
