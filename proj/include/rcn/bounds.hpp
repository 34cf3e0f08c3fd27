#ifndef RCN_BOUNDS_HPP
#define RCN_BOUNDS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcn/decomposition.hpp"
#include "rcn/digraph.hpp"
#include "rcn/kedges.hpp"
#include "rcn/numeric.hpp"

namespace rcn {

// Upper bound on the middle-level count N_{floor(n/2)} given the cumulative
// count through level floor(n/2) - 2. Exact integer floors throughout.
inline long long halving_upper_bound(int n, long long cumulative_two_below) {
    if (n < 4) throw std::invalid_argument("halving_upper_bound: need n >= 4");
    long long total = binom(n, 2);
    if (cumulative_two_below < 0 || cumulative_two_below > total)
        throw std::invalid_argument("halving_upper_bound: cumulative count out of range");
    if (n % 2 == 0) return floordiv(total - cumulative_two_below, 2);
    return floordiv(2 * total - 2 * cumulative_two_below + 1, 3);
}

// Lower bound on the cumulative count through level floor(n/2) - 1.
inline long long cumulative_lower_bound_nm1(int n) {
    if (n < 4) throw std::invalid_argument("cumulative_lower_bound_nm1: need n >= 4");
    long long total = binom(n, 2);
    if (n % 2 == 0) return total - floordiv(static_cast<long long>(n) * (n + 30) - 72, 24);
    return total - floordiv(static_cast<long long>(n - 3) * (n + 45) + 2, 18);
}

// Hypothetical distribution of transpositions over levels 1..n/2 (even n, the
// middle level counted once): levels 1..tight_upto sit at their cumulative
// lower bounds, the remaining levels are explicit.
struct Scenario {
    int n = 0;
    int tight_upto = 0;
    std::vector<long long> rest;  // N_j for j = tight_upto+1 .. n/2
};

// Expand to per-level counts N_1..N_{n/2}, validating the partition.
inline std::vector<long long> scenario_levels(const Scenario& sc) {
    const int n = sc.n;
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("scenario_levels: n must be even and >= 4");
    const int top = n / 2;
    if (sc.tight_upto < 0 || sc.tight_upto > top)
        throw std::invalid_argument("scenario_levels: tight_upto out of range");
    if (static_cast<int>(sc.rest.size()) != top - sc.tight_upto)
        throw std::invalid_argument("scenario_levels: need one explicit count per level above tight_upto");
    std::vector<long long> levels(top);
    long long sum = 0;
    long long prev = 0;
    for (int j = 1; j <= sc.tight_upto; ++j) {
        long long cum = lower_bound_leq_k(n, j - 1);
        levels[j - 1] = cum - prev;
        prev = cum;
        sum = cum;
    }
    for (size_t i = 0; i < sc.rest.size(); ++i) {
        if (sc.rest[i] < 0) throw std::invalid_argument("scenario_levels: negative level count");
        levels[sc.tight_upto + i] = sc.rest[i];
        sum += sc.rest[i];
    }
    if (sum != binom(n, 2))
        throw std::invalid_argument("scenario_levels: level counts must partition all pairs");
    return levels;
}

inline long long scenario_crossing(const Scenario& sc) {
    std::vector<long long> levels = scenario_levels(sc);
    EdgeVector ev{sc.n, levels};  // E_k = N_{k+1}
    return crossing_from_edges(ev);
}

inline Scenario k30_scenario(long long n14, long long n15) { return {30, 13, {n14, n15}}; }

struct SlackEntry {
    int level = 0;  // the one cumulative count exceeding its lower bound, by one unit
    long long crossing = 0;
};

// Minimum crossing value at n = 30 when exactly one cumulative count through
// levels 1..13 exceeds its lower bound. The remaining mass is pushed as high
// as the middle-level cap allows; larger excesses only increase the value
// (every coefficient involved is positive), so one unit is the worst case.
inline std::vector<SlackEntry> k30_slack_sweep() {
    std::vector<SlackEntry> out;
    for (int j0 = 1; j0 <= 13; ++j0) {
        std::vector<long long> levels(15);
        long long prev = 0;
        for (int j = 1; j <= 13; ++j) {
            long long cum = lower_bound_leq_k(30, j - 1) + (j == j0 ? 1 : 0);
            levels[j - 1] = cum - prev;
            prev = cum;
        }
        long long cap = halving_upper_bound(30, prev);
        long long cum14 = std::max(cumulative_lower_bound_nm1(30), binom(30, 2) - cap);
        levels[13] = cum14 - prev;
        levels[14] = binom(30, 2) - cum14;
        out.push_back({j0, scenario_crossing({30, 0, levels})});
    }
    return out;
}

inline long long k30_slack_minimum() {
    long long best = -1;
    for (const SlackEntry& e : k30_slack_sweep())
        if (best < 0 || e.crossing < best) best = e.crossing;
    return best;
}

struct K30Line {
    std::string label;
    long long computed = 0;
    long long stated = 0;
    bool ok = false;
};

struct K30Report {
    std::vector<K30Line> lines;
    bool all_ok() const {
        for (const K30Line& l : lines)
            if (!l.ok) return false;
        return true;
    }
    long long certified() const { return lines.empty() ? -1 : lines.back().computed; }
};

// The complete n = 30 bound chain. Every line recomputes one quantity from
// scratch and compares it with the value the chain needs. The per-class
// middle-level caps 19, 18, 17 enter as external inputs (outcomes of a case
// analysis over optimal sequences); everything else is derived here.
inline K30Report k30_report() {
    K30Report rep;
    auto push = [&rep](const std::string& label, long long computed, long long stated) {
        rep.lines.push_back({label, computed, stated, computed == stated});
    };

    const long long total = binom(30, 2);  // 435
    long long cum13 = lower_bound_leq_k(30, 12);
    push("cumulative lower bound through level 13", cum13, 291);
    push("cumulative lower bound through level 10", lower_bound_leq_k(30, 9), 165);
    push("pairs above level 13", total - cum13, 144);

    long long weighted = 0;
    for (int j = 1; j <= 13; ++j) weighted += (29 - 2 * j) * lower_bound_leq_k(30, j - 1);
    push("weighted tight cumulative sum, levels 1..13", weighted, 12405);
    long long offset = weighted - 3 * binom(30, 3) / 4 + cum13;
    push("crossing offset: crossing = offset + N14", offset, 9651);

    push("middle-level cap at the tight prefix", halving_upper_bound(30, cum13), 72);
    long long cum14_lb = cumulative_lower_bound_nm1(30);
    push("cumulative lower bound through level 14", cum14_lb, 363);
    push("N14 lower bound", cum14_lb - cum13, 72);
    push("baseline scenario crossing (N14 = 72, N15 = 72)",
         scenario_crossing(k30_scenario(72, 72)), 9723);
    push("minimum crossing with slack at some level <= 13", k30_slack_minimum(), 9727);
    push("N14 upper bound from the known drawing with 9726 crossings", 9726 - offset, 75);

    long long bi13 = bichromatic_closed_form(30, 13);
    long long bi14 = bichromatic_closed_form(30, 14);
    long long bi15 = bichromatic_closed_form(30, 15);
    push("bichromatic cumulative through level 13", bi13, 255);
    push("bichromatic cumulative through level 14", bi14, 285);
    push("bichromatic total", bi15, 300);
    push("bichromatic pairs above level 13", bi15 - bi13, 45);
    push("bichromatic middle-level count", bi15 - bi14, 15);
    push("monochromatic pairs above level 13", (total - cum13) - (bi15 - bi13), 99);

    Digraph d33 = build_D0(10, 3);
    push("max edges of a descending digraph, 10 vertices, surplus 3", d33.edge_count(), 33);
    push("per-class monochromatic count above level 13", 99 / 3, 33);
    push("slack between class cap and forced per-class count", d33.edge_count() - 99 / 3, 0);
    push("extremal digraph: top-4 block complete", top_block_complete(d33, 4) ? 1 : 0, 1);
    push("extremal digraph: edges leaving the top-4 block",
         d33.edge_count() - induced_bottom_edges(d33, 6) - 6, 12);
    push("extremal digraph: edges inside the bottom 6 vertices", induced_bottom_edges(d33, 6),
         15);
    push("max edges of a descending digraph, 6 vertices, surplus 3",
         build_D0(6, 3).edge_count(), 13);

    push("max edges of a descending digraph, 10 vertices, surplus 1",
         build_D0(10, 1).edge_count(), 20);
    push("per-class middle-level caps, first case total", 19 + 18 + 17, 54);
    push("per-class middle-level caps, second case total", 19 + 17 + 18, 54);
    push("monochromatic middle-level total cap", 54, 54);
    push("middle-level count in an optimal sequence", 54 + 15, 69);
    push("N14 in an optimal sequence", (total - cum13) - 69, 75);
    push("refined scenario crossing (N14 = 75, N15 = 69)",
         scenario_crossing(k30_scenario(75, 69)), 9726);
    push("certified crossing number of K30", offset + 75, 9726);
    return rep;
}

}  // namespace rcn

#endif
