#ifndef RCN_DIGRAPH_HPP
#define RCN_DIGRAPH_HPP

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcn/decomposition.hpp"
#include "rcn/halfperiod.hpp"

namespace rcn {

// Digraph on vertices v..1 whose edges (i, j) all point downward: i > j.
struct Digraph {
    int v = 0;
    std::vector<std::pair<int, int>> edges;  // kept in descending lexicographic order
    long long edge_count() const { return static_cast<long long>(edges.size()); }
};

inline void sort_edges(Digraph& g) {
    std::sort(g.edges.begin(), g.edges.end(), std::greater<>());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

inline std::vector<int> outdegrees(const Digraph& g) {
    std::vector<int> out(g.v + 1, 0);
    for (auto& [i, j] : g.edges) ++out[i];
    return out;
}

inline std::vector<int> indegrees(const Digraph& g) {
    std::vector<int> in(g.v + 1, 0);
    for (auto& [i, j] : g.edges) ++in[j];
    return in;
}

// Membership in the class D_{v,m}: outdeg(i) <= m + indeg(i) for every vertex.
inline bool in_class(const Digraph& g, int m) {
    std::vector<int> out = outdegrees(g), in = indegrees(g);
    for (int i = 1; i <= g.v; ++i)
        if (out[i] > m + in[i]) return false;
    return true;
}

// Extremal construction: process i = v down to 1; vertex i sends edges to the
// min(indeg(i) + m, i-1) immediately smaller vertices, where indeg(i) counts
// edges already received from larger vertices.
inline Digraph build_D0(int v, int m) {
    if (v < 1 || m < 0) throw std::invalid_argument("build_D0: need v >= 1, m >= 0");
    Digraph g{v, {}};
    std::vector<int> indeg(v + 2, 0);
    for (int i = v; i >= 1; --i) {
        int out = std::min(indeg[i] + m, i - 1);
        for (int d = 1; d <= out; ++d) {
            g.edges.push_back({i, i - d});
            ++indeg[i - d];
        }
    }
    return g;  // emitted in descending lexicographic order already
}

// Exhaustive maximum edge count over D_{v,m}; deliberately brute-force, so it
// is capped at the sizes where full enumeration is instant.
inline long long max_edges_oracle(int v, int m) {
    if (v < 1 || v > 6 || m < 0 || m > 3)
        throw std::invalid_argument("max_edges_oracle: supported range is v <= 6, m <= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = v; i >= 1; --i)
        for (int j = i - 1; j >= 1; --j) pairs.push_back({i, j});
    const int p = static_cast<int>(pairs.size());
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        int out[7] = {0}, in[7] = {0}, edges = 0;
        for (int b = 0; b < p; ++b)
            if (mask >> b & 1) {
                ++out[pairs[b].first];
                ++in[pairs[b].second];
                ++edges;
            }
        if (edges <= best) continue;
        bool ok = true;
        for (int i = 1; i <= v && ok; ++i) ok = out[i] <= m + in[i];
        if (ok) best = edges;
    }
    return best;
}

// All C(b,2) descending edges among the top b vertices v..v-b+1 present?
inline bool top_block_complete(const Digraph& g, int b) {
    if (b > g.v) throw std::invalid_argument("top_block_complete: block larger than graph");
    for (int i = g.v; i > g.v - b; --i)
        for (int j = i - 1; j > g.v - b; --j)
            if (!std::binary_search(g.edges.begin(), g.edges.end(), std::pair<int, int>{i, j},
                                    std::greater<>()))
                return false;
    return true;
}

inline long long induced_bottom_edges(const Digraph& g, int b) {
    long long count = 0;
    for (auto& [i, j] : g.edges)
        if (i <= b) ++count;
    return count;
}

namespace detail {

// Depth labeling of one block of a 3-decomposable sequence: the element that
// reaches position d (or n+1-d) but nothing deeper gets vertex index
// n/3 - d + 1. Fails if two elements of the block share a depth.
inline std::vector<std::pair<int, int>> depth_vertex_map(const HalfPeriod& rot,
                                                         const std::vector<int>& block) {
    const int n = rot.n;
    std::vector<int> perm = rot.initial;
    std::vector<int> best;  // per block element, min of min(pos, n+1-pos) over the trajectory
    std::unordered_map<int, int> idx;
    for (size_t i = 0; i < block.size(); ++i) idx[block[i]] = static_cast<int>(i);
    best.assign(block.size(), n);
    auto touch = [&](int label, int p) {
        auto it = idx.find(label);
        if (it != idx.end()) best[it->second] = std::min(best[it->second], std::min(p, n + 1 - p));
    };
    for (int p = 1; p <= n; ++p) touch(perm[p - 1], p);
    for (long long s = 0; s < rot.steps(); ++s) {
        int g = rot.gates[s];
        std::swap(perm[g - 1], perm[g]);
        touch(perm[g - 1], g);
        touch(perm[g], g + 1);
    }
    int third = static_cast<int>(block.size());
    std::vector<bool> used(third + 1, false);
    std::vector<std::pair<int, int>> vertex_of;  // (label, vertex index)
    for (size_t i = 0; i < block.size(); ++i) {
        int d = best[i];
        if (d < 1 || d > third || used[d])
            throw std::runtime_error("depth labeling inconsistent for the given block");
        used[d] = true;
        vertex_of.push_back({block[i], third - d + 1});
    }
    return vertex_of;
}

}  // namespace detail

// D_k of one class: vertices n/3..1 under the depth labeling; edge (i, j),
// i > j, iff the swap of x_i and x_j happens at a gate g with k < g < n-k.
// Edge count equals the class's window count N_{>k}^{xx}.
inline Digraph build_Dk(const HalfPeriod& hp, const ThreeDecomposition& dec, Block cls, int k) {
    if (k < 0) throw std::invalid_argument("build_Dk: k must be nonnegative");
    HalfPeriod rot = rotate(hp, dec.rotation);
    const std::vector<int>& block = cls == Block::A ? dec.A : cls == Block::B ? dec.B : dec.C;
    std::unordered_map<int, int> vertex;
    for (auto& [label, vx] : detail::depth_vertex_map(rot, block)) vertex[label] = vx;
    Digraph g{static_cast<int>(block.size()), {}};
    std::vector<int> perm = rot.initial;
    const int n = hp.n;
    for (long long s = 0; s < rot.steps(); ++s) {
        int gate = rot.gates[s];
        int x = perm[gate - 1], y = perm[gate];
        std::swap(perm[gate - 1], perm[gate]);
        auto ix = vertex.find(x), iy = vertex.find(y);
        if (ix == vertex.end() || iy == vertex.end()) continue;
        if (gate > k && gate < n - k)
            g.edges.push_back({std::max(ix->second, iy->second), std::min(ix->second, iy->second)});
    }
    sort_edges(g);
    return g;
}

// Halving counter: out-degree of vertex j in the D_{n/2-1} digraph of cls,
// i.e. the number of smaller-index same-class elements x_j swaps with at the
// halving gate n/2.
inline int hal(const HalfPeriod& hp, const ThreeDecomposition& dec, Block cls, int j) {
    if (hp.n % 2 != 0) throw std::invalid_argument("hal: n must be even");
    Digraph g = build_Dk(hp, dec, cls, hp.n / 2 - 1);
    if (j < 1 || j > g.v) throw std::invalid_argument("hal: vertex out of range");
    return outdegrees(g)[j];
}

// Serialization: "v m" then one "i j" line per edge, descending lexicographic.
inline void write_digraph(std::ostream& os, const Digraph& g, int m) {
    os << g.v << " " << m << "\n";
    for (auto& [i, j] : g.edges) os << i << " " << j << "\n";
}

}  // namespace rcn

#endif
