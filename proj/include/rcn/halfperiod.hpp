#ifndef RCN_HALFPERIOD_HPP
#define RCN_HALFPERIOD_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/numeric.hpp"

namespace rcn {

// Half period of a circular (allowable) sequence: an initial permutation of n
// labels plus C(n,2) gates. Step t swaps the elements at 1-based positions
// (gates[t], gates[t]+1); after all steps the permutation is reversed and
// every unordered pair has swapped exactly once.
struct HalfPeriod {
    int n = 0;
    std::vector<int> initial;
    std::vector<int> gates;
    long long steps() const { return static_cast<long long>(gates.size()); }
};

inline long long pair_steps(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// Gate of full-period step j, 0 <= j < 2*C(n,2): the second half repeats the
// first half's swaps at mirrored gates g -> n-g.
inline int full_period_gate(const HalfPeriod& hp, long long j) {
    long long m = hp.steps();
    j %= 2 * m;
    return j < m ? hp.gates[j] : hp.n - hp.gates[j - m];
}

// Permutation after the first t full-period steps (t may exceed one half period).
inline std::vector<int> permutation_at(const HalfPeriod& hp, long long t) {
    std::vector<int> perm = hp.initial;
    for (long long j = 0; j < t; ++j) {
        int g = full_period_gate(hp, j);
        std::swap(perm[g - 1], perm[g]);
    }
    return perm;
}

struct ValidationResult {
    bool ok = true;
    std::string message;
};

inline ValidationResult validate(const HalfPeriod& hp) {
    auto fail = [](std::string m) { return ValidationResult{false, std::move(m)}; };
    const int n = hp.n;
    if (n < 2) return fail("n must be at least 2");
    if (static_cast<int>(hp.initial.size()) != n) return fail("initial permutation has wrong size");
    std::vector<int> sorted = hp.initial;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("initial permutation has repeated labels");
    if (hp.steps() != pair_steps(n)) return fail("step count is not C(n,2)");
    std::vector<int> perm = hp.initial;
    std::vector<std::vector<bool>> swapped(n, std::vector<bool>(n, false));
    auto slot = [&](int label) {
        return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), label) -
                                sorted.begin());
    };
    for (long long t = 0; t < hp.steps(); ++t) {
        int g = hp.gates[t];
        if (g < 1 || g > n - 1)
            return fail("gate out of range at step " + std::to_string(t));
        int a = slot(perm[g - 1]), b = slot(perm[g]);
        if (swapped[a][b])
            return fail("pair swaps twice, second time at step " + std::to_string(t));
        swapped[a][b] = swapped[b][a] = true;
        std::swap(perm[g - 1], perm[g]);
    }
    std::vector<int> rev(hp.initial.rbegin(), hp.initial.rend());
    if (perm != rev) return fail("final permutation is not the reverse of the initial one");
    return {};
}

// Circular sequence of a point set by exact rotational sweep. Point i carries
// label i+1. Pairs are ordered by the direction of their connecting line
// (angles taken in [0,pi), compared by cross products); parallel pairs are
// disjoint under general position and commute — they are emitted in ascending
// gate order. The start axis is chosen combinatorially, strictly before the
// first event angle, so the initial projection order has no ties.
inline HalfPeriod from_point_set(const PointSet& ps) {
    const int n = ps.n();
    if (n < 3) throw std::invalid_argument("from_point_set: n must be at least 3");
    struct PairDir {
        long long dx, dy;  // canonical: dy > 0, or dy == 0 and dx > 0
        int i, j;
    };
    std::vector<PairDir> pairs;
    pairs.reserve(pair_steps(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long dx = ps.points[j].x - ps.points[i].x;
            long long dy = ps.points[j].y - ps.points[i].y;
            if (dy < 0 || (dy == 0 && dx < 0)) { dx = -dx; dy = -dy; }
            if (dx == 0 && dy == 0) throw std::invalid_argument("from_point_set: duplicate points");
            pairs.push_back({dx, dy, i, j});
        }
    std::sort(pairs.begin(), pairs.end(), [](const PairDir& a, const PairDir& b) {
        __int128 c = cross(a.dx, a.dy, b.dx, b.dy);
        if (c != 0) return c > 0;
        return a.i != b.i ? a.i < b.i : a.j < b.j;  // deterministic within a parallel bundle
    });

    // start normal: angle 0 if no pair is horizontal, else strictly between
    // the largest pair angle and pi
    long long nx = 1, ny = 0;
    if (pairs.front().dy == 0) {
        const PairDir& top = pairs.back();
        nx = top.dx - 1;
        ny = top.dy;
    }
    // initial order: projections onto the axis perpendicular to the normal
    long long ux = ny, uy = -nx;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        __int128 pa = static_cast<__int128>(ps.points[a].x) * ux +
                      static_cast<__int128>(ps.points[a].y) * uy;
        __int128 pb = static_cast<__int128>(ps.points[b].x) * ux +
                      static_cast<__int128>(ps.points[b].y) * uy;
        if (pa != pb) return pa < pb;
        throw std::logic_error("from_point_set: tie in initial projection");
    });

    HalfPeriod hp{n, order, {}};
    hp.gates.reserve(pairs.size());
    std::vector<int> pos(n);  // label -> 1-based position
    for (int p = 0; p < n; ++p) pos[order[p]] = p + 1;
    std::vector<int> perm = order;
    size_t a = 0;
    while (a < pairs.size()) {
        size_t b = a + 1;
        while (b < pairs.size() &&
               cross(pairs[a].dx, pairs[a].dy, pairs[b].dx, pairs[b].dy) == 0)
            ++b;
        std::vector<std::pair<int, std::pair<int, int>>> bundle;  // (gate, (i,j))
        for (size_t t = a; t < b; ++t) {
            int pi = pos[pairs[t].i], pj = pos[pairs[t].j];
            if (pi > pj) std::swap(pi, pj);
            if (pj != pi + 1)
                throw std::logic_error("from_point_set: swapping pair is not adjacent");
            bundle.push_back({pi, {pairs[t].i, pairs[t].j}});
        }
        std::sort(bundle.begin(), bundle.end());
        for (auto& [gate, pr] : bundle) {
            hp.gates.push_back(gate);
            std::swap(perm[gate - 1], perm[gate]);
            pos[pr.first] = perm[gate - 1] == pr.first ? gate : gate + 1;
            pos[pr.second] = perm[gate - 1] == pr.second ? gate : gate + 1;
        }
        a = b;
    }
    for (int& label : hp.initial) ++label;  // expose points as labels 1..n
    return hp;
}

// Half period starting t full-period steps later, 0 <= t < 2*C(n,2).
inline HalfPeriod rotate(const HalfPeriod& hp, long long t) {
    long long m = hp.steps();
    if (t < 0 || t >= 2 * m) throw std::invalid_argument("rotate: t out of range");
    HalfPeriod out{hp.n, permutation_at(hp, t), {}};
    out.gates.reserve(m);
    for (long long j = t; j < t + m; ++j) out.gates.push_back(full_period_gate(hp, j));
    return out;
}

// Time reversal: starts at the final permutation and undoes the steps.
inline HalfPeriod reverse(const HalfPeriod& hp) {
    HalfPeriod out{hp.n, permutation_at(hp, hp.steps()),
                   std::vector<int>(hp.gates.rbegin(), hp.gates.rend())};
    return out;
}

// counts[k] = N_k, the number of steps at gate k or n-k (each step counted
// once, under k = min(g, n-g)), k = 1..floor(n/2).
struct CriticalProfile {
    int n = 0;
    std::vector<long long> counts;  // index 0 unused
    long long cumulative(int k) const {
        long long s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(counts.size()); ++i) s += counts[i];
        return s;
    }
    long long halving() const { return n % 2 == 0 ? counts[n / 2] : 0; }
};

inline CriticalProfile critical_profile(const HalfPeriod& hp) {
    CriticalProfile cp{hp.n, std::vector<long long>(hp.n / 2 + 1, 0)};
    for (int g : hp.gates) ++cp.counts[std::min(g, hp.n - g)];
    return cp;
}

// Serialization: line 1 n, line 2 the initial permutation, then one gate per line.
inline void write_half_period(std::ostream& os, const HalfPeriod& hp) {
    os << hp.n << "\n";
    for (int i = 0; i < hp.n; ++i) os << hp.initial[i] << (i + 1 == hp.n ? "" : " ");
    os << "\n";
    for (int g : hp.gates) os << g << "\n";
}

inline HalfPeriod read_half_period(std::istream& in) {
    HalfPeriod hp;
    if (!(in >> hp.n) || hp.n < 2) throw std::runtime_error("half period: bad n");
    hp.initial.resize(hp.n);
    for (int& v : hp.initial)
        if (!(in >> v)) throw std::runtime_error("half period: bad initial permutation");
    hp.gates.resize(pair_steps(hp.n));
    for (int& g : hp.gates)
        if (!(in >> g)) throw std::runtime_error("half period: bad gate list");
    ValidationResult vr = validate(hp);
    if (!vr.ok) throw std::runtime_error("half period: " + vr.message);
    return hp;
}

}  // namespace rcn

#endif
