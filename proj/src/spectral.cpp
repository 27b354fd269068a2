#include "toricq/spectral.hpp"

#include "toricq/errors.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

namespace toricq {

namespace {

long long slope(const StabilityParams& p) { return static_cast<long long>(p.field_dim()) * p.n * p.r_min - 1; }

int checked_d_prime(const StabilityParams& p) {
    p.validate();
    const int dp = p.d_prime();
    if (dp < 1) throw RangeError("floor(d_min / n) must be >= 1");
    return dp;
}

}  // namespace

AuxDimensions aux_dimensions(const StabilityParams& p, int r, int k) {
    p.validate();
    if (r < p.r_min) throw InvalidInput("r must be >= r_min");
    if (k < 1 || k > p.d_prime()) throw RangeError("k must lie in 1..floor(d_min / n)");
    const long long dk = p.field_dim(), n = p.n, extra = r - p.r_min;
    AuxDimensions a;
    for (int d : p.degrees) a.big_n += d;
    a.dim_l = n * dk * extra;
    a.dim_c = k + dk * k * n * extra;
    a.rank_l = dk * (a.big_n - n * r * k) + k - 1;
    return a;
}

Cell e1_vanishing(const StabilityParams& p, int r, int k, int s) {
    p.validate();
    (void)r;
    const int dp = p.d_prime();
    if (k < 0 || k > dp + 1) return Cell::Zero;
    if (k == 0) return s == 0 ? Cell::PossiblyNonzero : Cell::Zero;
    const long long bound = k <= dp ? slope(p) * k - 1 : slope(p) * dp - 1;
    return s <= bound ? Cell::Zero : Cell::PossiblyNonzero;
}

E1Grid build_grid(const StabilityParams& p, int r, int max_s) {
    p.validate();
    E1Grid g;
    g.params = p;
    g.r = r;
    g.max_k = p.d_prime() + 1;
    g.max_s = max_s >= 0 ? max_s : static_cast<int>(slope(p) * std::max(p.d_prime(), 1) + 1);
    for (int k = 0; k <= g.max_k; ++k) {
        std::vector<Cell> row;
        for (int s = 0; s <= g.max_s; ++s) row.push_back(e1_vanishing(p, r, k, s));
        g.cells.push_back(std::move(row));
    }
    return g;
}

namespace {

const char* marker(int k, int s, Cell c) {
    if (c == Cell::Zero) return ".";
    return k == 0 && s == 0 ? "Z" : "*";
}

}  // namespace

std::string E1Grid::render_text() const {
    std::ostringstream os;
    os << "k\\s";
    for (int s = 0; s <= max_s; ++s) os << ' ' << s % 10;
    os << '\n';
    for (int k = 0; k <= max_k; ++k) {
        os << std::left << std::setw(3) << k << std::right;
        for (int s = 0; s <= max_s; ++s) os << ' ' << marker(k, s, cells[k][s]);
        os << '\n';
    }
    return os.str();
}

std::string E1Grid::render_csv() const {
    std::ostringstream os;
    os << "k,s,cell\n";
    for (int k = 0; k <= max_k; ++k)
        for (int s = 0; s <= max_s; ++s) os << k << ',' << s << ',' << marker(k, s, cells[k][s]) << '\n';
    return os.str();
}

FrontierResult stable_frontier_oracle(const StabilityParams& p) {
    const int dp = checked_d_prime(p);
    const long long c = slope(p) + 1;  // d(K) n r_min
    const int budget = dp + 1;
    FrontierResult out;

    // all strictly increasing tuples with entries >= 1 and sum <= budget
    std::vector<int> tuple;
    std::function<void(int, int)> walk = [&](int next, int sum) {
        if (!tuple.empty()) {
            ++out.tuples;
            const int t = static_cast<int>(tuple.size());
            const long long u = budget - sum;
            long long excess = 0;
            for (int l : tuple) excess += l - 1;
            const long long threshold = (c - 1) * dp - excess;
            // A_t collects (k, s) = (u, v) for v past the threshold; scan a window around it
            long long best = std::numeric_limits<long long>::max();
            for (long long v = threshold - 4; v <= threshold + 4; ++v) {
                if (v + excess < (c - 1) * dp) continue;
                best = std::min(best, v - u);
            }
            auto it = out.a_by_t.find(t);
            if (it == out.a_by_t.end() || best < it->second) out.a_by_t[t] = best;
        }
        for (int l = next; sum + l <= budget; ++l) {
            tuple.push_back(l);
            walk(l + 1, sum + l);
            tuple.pop_back();
        }
    };
    walk(1, 0);

    long long best = std::numeric_limits<long long>::max();
    for (const auto& [t, a] : out.a_by_t) best = std::min(best, a);
    out.value = best - 2;
    return out;
}

ConnectivityResult connectivity_oracle(const StabilityParams& p) {
    const int dp = checked_d_prime(p);
    ConnectivityResult out;
    const int limit = static_cast<int>(slope(p) * (dp + 1) + 2);
    long long best = std::numeric_limits<long long>::max();
    for (int k = 1; k <= dp + 1; ++k) {
        int s = 0;
        while (s <= limit && e1_vanishing(p, p.r_min, k, s) == Cell::Zero) ++s;
        if (s > limit) throw RangeError("no possibly nonzero cell in the scanned window");
        const long long a = static_cast<long long>(s) - k - 1;
        out.a_by_k[k] = a;
        best = std::min(best, a);
    }
    out.m0 = best;
    return out;
}

long long connectivity_closed_form(const StabilityParams& p) {
    const int dp = checked_d_prime(p);
    const long long c = slope(p) + 1;
    return dp >= 2 ? c - 3 : c - 4;
}

}  // namespace toricq
