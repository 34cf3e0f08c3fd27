#ifndef RCN_KEDGES_HPP
#define RCN_KEDGES_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/numeric.hpp"

namespace rcn {

// counts[k] = number of k-edges, k = 0..floor(n/2)-1; halving edges (even n)
// are counted once.
struct EdgeVector {
    int n = 0;
    std::vector<long long> counts;
    int levels() const { return n / 2; }
};

inline EdgeVector edge_vector(const PointSet& ps) {
    const int n = ps.n();
    if (n < 3) throw std::invalid_argument("edge_vector: n must be at least 3");
    EdgeVector ev{n, std::vector<long long>(n / 2, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int pos = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i || r == j) continue;
                int o = orientation(ps.points[i], ps.points[j], ps.points[r]);
                if (o == 0) throw std::invalid_argument("edge_vector: collinear input");
                if (o > 0) ++pos;
            }
            int k = std::min(pos, n - 2 - pos);
            ++ev.counts[k];
        }
    return ev;
}

inline long long cumulative(const EdgeVector& ev, int k) {
    if (k < 0) return 0;
    if (k >= ev.levels()) k = ev.levels() - 1;
    long long s = 0;
    for (int i = 0; i <= k; ++i) s += ev.counts[i];
    return s;
}

// Number of 4-point subsets in convex position == number of crossings in the
// straight-line drawing of K_n on ps.
inline long long crossing_brute(const PointSet& ps) {
    const int n = ps.n();
    long long cr = 0;
    auto crosses = [&](int a, int b, int c, int d) {
        return orientation(ps.points[a], ps.points[b], ps.points[c]) !=
                   orientation(ps.points[a], ps.points[b], ps.points[d]) &&
               orientation(ps.points[c], ps.points[d], ps.points[a]) !=
                   orientation(ps.points[c], ps.points[d], ps.points[b]);
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (crosses(a, b, c, d) || crosses(a, c, b, d) || crosses(a, d, b, c)) ++cr;
    return cr;
}

// cr = 3*C(n,4) - sum_k k(n-k-2) E_k
inline long long crossing_from_edges(const EdgeVector& ev) {
    long long s = 0;
    for (int k = 0; k < ev.levels(); ++k)
        s += static_cast<long long>(k) * (ev.n - k - 2) * ev.counts[k];
    return 3 * binom(ev.n, 4) - s;
}

// Cumulative form; the sum stops at floor(n/2)-2 (the top level would
// double-count halving edges for even n). Exact rational evaluation.
inline long long crossing_from_cumulative(const EdgeVector& ev) {
    const int n = ev.n;
    long long s = 0;
    for (int k = 0; k <= n / 2 - 2; ++k) s += (n - 2 * k - 3) * cumulative(ev, k);
    long long num = 4 * s - 3 * binom(n, 3) + (n % 2 == 1 ? binom(n, 2) : 0);
    if (num % 4 != 0) throw std::logic_error("crossing_from_cumulative: non-integral result");
    return num / 4;
}

// Cumulative lower bound; the closed form is clamped at C(n,2), the trivial
// ceiling every cumulative count attains at the top level.
inline long long lower_bound_leq_k(int n, int k) {
    if (n < 3 || k < 0 || k > n / 2 - 1)
        throw std::invalid_argument("lower_bound_leq_k: need n >= 3, 0 <= k <= floor(n/2)-1");
    long long third = n / 3;
    long long v = 3 * binom2(k + 2) + 3 * binom2(k + 2 - third) -
                  std::max(0LL, (k + 1 - third) * (n - 3 * third));
    return std::min(v, binom(n, 2));
}

// profile[k] == true iff the cumulative count meets the bound with equality.
inline std::vector<bool> tightness_profile(const EdgeVector& ev, int k_max) {
    std::vector<bool> profile;
    if (k_max < 0) return profile;
    if (k_max > ev.levels() - 1)
        throw std::invalid_argument("tightness_profile: k_max out of range");
    for (int k = 0; k <= k_max; ++k)
        profile.push_back(cumulative(ev, k) == lower_bound_leq_k(ev.n, k));
    return profile;
}

struct CrossingReport {
    long long brute = 0, from_edges = 0, from_cumulative = 0;
    bool agree() const { return brute == from_edges && brute == from_cumulative; }
};

inline CrossingReport crossing_report(const PointSet& ps) {
    EdgeVector ev = edge_vector(ps);
    return CrossingReport{crossing_brute(ps), crossing_from_edges(ev),
                          crossing_from_cumulative(ev)};
}

}  // namespace rcn

#endif
