#ifndef RCN_DECOMPOSITION_HPP
#define RCN_DECOMPOSITION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/halfperiod.hpp"
#include "rcn/kedges.hpp"
#include "rcn/numeric.hpp"

namespace rcn {

enum class Block { A, B, C };

// A rotation r of a half period splits the rotated initial permutation into
// thirds A | B | C such that every A-B swap happens before every swap between
// C and A-or-B, and every A-C swap before every B-C swap. s and t are 0-based
// step indices of the last A-B and last A-C swap: the permutation right after
// step s reads (B, A, C) blockwise, right after step t it reads (B, C, A).
struct ThreeDecomposition {
    long long rotation = 0;
    std::vector<int> A, B, C;  // labels, in rotated initial order
    long long s = -1, t = -1;
};

struct DecompositionCheck {
    bool ok = false;
    ThreeDecomposition value;
    long long violating_step = -1;
    std::string reason;
};

namespace detail {

inline std::unordered_map<int, Block> block_map(const ThreeDecomposition& dec) {
    std::unordered_map<int, Block> m;
    for (int l : dec.A) m[l] = Block::A;
    for (int l : dec.B) m[l] = Block::B;
    for (int l : dec.C) m[l] = Block::C;
    return m;
}

// blockwise shape of a permutation, e.g. (B,A,C): every B label, then every A,
// then every C
inline bool shaped(const std::vector<int>& perm, const std::unordered_map<int, Block>& blocks,
                   Block first, Block second, Block third) {
    size_t third_size = perm.size() / 3;
    for (size_t p = 0; p < perm.size(); ++p) {
        Block want = p < third_size ? first : p < 2 * third_size ? second : third;
        if (blocks.at(perm[p]) != want) return false;
    }
    return true;
}

}  // namespace detail

inline DecompositionCheck check_sequence_decomposition(const HalfPeriod& hp, long long r) {
    if (hp.n % 3 != 0) throw std::invalid_argument("decomposition: n must be divisible by 3");
    const int third = hp.n / 3;
    HalfPeriod rot = rotate(hp, r);
    ThreeDecomposition dec;
    dec.rotation = r;
    dec.A.assign(rot.initial.begin(), rot.initial.begin() + third);
    dec.B.assign(rot.initial.begin() + third, rot.initial.begin() + 2 * third);
    dec.C.assign(rot.initial.begin() + 2 * third, rot.initial.end());
    auto blocks = detail::block_map(dec);

    // bichromatic phase progression AB < AC < BC; monochromatic steps are free
    std::vector<int> perm = rot.initial;
    int level = 0;  // 0 = AB, 1 = AC, 2 = BC
    long long last_ab = -1, last_ac = -1;
    for (long long step = 0; step < rot.steps(); ++step) {
        int g = rot.gates[step];
        Block bx = blocks.at(perm[g - 1]), by = blocks.at(perm[g]);
        std::swap(perm[g - 1], perm[g]);
        if (bx == by) continue;
        int cat = (bx != Block::C && by != Block::C) ? 0 : (bx != Block::B && by != Block::B ? 1 : 2);
        if (cat < level)
            return DecompositionCheck{false, {}, step,
                                      std::string(cat == 0 ? "A-B" : "A-C") +
                                          " swap after a later phase already started"};
        level = cat;
        if (cat == 0) last_ab = step;
        if (cat == 1) last_ac = step;
    }
    if (last_ab < 0 || last_ac < 0)
        return DecompositionCheck{false, {}, -1, "missing bichromatic phase"};
    dec.s = last_ab;
    dec.t = last_ac;
    if (!(dec.s < dec.t) ||
        !detail::shaped(permutation_at(rot, dec.s + 1), blocks, Block::B, Block::A, Block::C) ||
        !detail::shaped(permutation_at(rot, dec.t + 1), blocks, Block::B, Block::C, Block::A))
        return DecompositionCheck{false, {}, -1, "phase boundary shape violated"};
    DecompositionCheck out;
    out.ok = true;
    out.value = std::move(dec);
    return out;
}

// First accepted rotation (lowest index) among all 2*C(n,2) forward rotations.
inline std::optional<ThreeDecomposition> search_decomposition(const HalfPeriod& hp) {
    for (long long r = 0; r < 2 * hp.steps(); ++r) {
        DecompositionCheck c = check_sequence_decomposition(hp, r);
        if (c.ok) return c.value;
    }
    return std::nullopt;
}

// Geometric witness: an equipartition plus one exact integer direction per
// side; projecting onto side i must order the parts as three separated blocks
// with A (side 1), B (side 2), C (side 3) in the middle, in either traversal
// orientation.
struct GeometricWitness {
    std::vector<int> A, B, C;  // point indices
    Point d1, d2, d3;
};

struct WitnessCheck {
    bool ok = false;
    std::string reason;
};

inline WitnessCheck verify_geometric_witness(const PointSet& ps, const GeometricWitness& w) {
    const int n = ps.n();
    if (n % 3 != 0) return {false, "n not divisible by 3"};
    std::vector<int> seen(n, 0);
    for (const std::vector<int>* part : {&w.A, &w.B, &w.C}) {
        if (static_cast<int>(part->size()) != n / 3) return {false, "parts not of size n/3"};
        for (int i : *part) {
            if (i < 0 || i >= n) return {false, "point index out of range"};
            if (seen[i]++) return {false, "point in two parts"};
        }
    }
    const Point* dirs[3] = {&w.d1, &w.d2, &w.d3};
    for (int i = 0; i < 3; ++i) {
        if (dirs[i]->x == 0 && dirs[i]->y == 0) return {false, "zero direction"};
        for (int j = i + 1; j < 3; ++j)
            if (cross(dirs[i]->x, dirs[i]->y, dirs[j]->x, dirs[j]->y) == 0)
                return {false, "parallel directions"};
    }
    auto minmax_dot = [&](const std::vector<int>& part, const Point& d) {
        __int128 lo = 0, hi = 0;
        bool first = true;
        for (int i : part) {
            __int128 v = static_cast<__int128>(ps.points[i].x) * d.x +
                         static_cast<__int128>(ps.points[i].y) * d.y;
            if (first) { lo = hi = v; first = false; }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair<__int128, __int128>{lo, hi};
    };
    const std::vector<int>* mid[3] = {&w.A, &w.B, &w.C};
    const std::vector<int>* out1[3] = {&w.B, &w.C, &w.A};
    const std::vector<int>* out2[3] = {&w.C, &w.A, &w.B};
    for (int side = 0; side < 3; ++side) {
        auto [mlo, mhi] = minmax_dot(*mid[side], *dirs[side]);
        auto [alo, ahi] = minmax_dot(*out1[side], *dirs[side]);
        auto [blo, bhi] = minmax_dot(*out2[side], *dirs[side]);
        bool fwd = ahi < mlo && mhi < blo;
        bool rev = bhi < mlo && mhi < alo;
        if (!fwd && !rev)
            return {false, "side " + std::to_string(side + 1) + ": middle block not separated"};
    }
    return {true, {}};
}

// Tight cumulative counts for all k < n/3 force a 3-decomposable circular
// sequence; the verdict carries the found witness.
struct MainTheoremVerdict {
    bool hypothesis = false;
    int first_failing_k = -1;  // when hypothesis is false
    bool decomposable = false;
    std::optional<ThreeDecomposition> witness;
};

inline MainTheoremVerdict main_theorem_check(const PointSet& ps) {
    if (ps.n() % 3 != 0) throw std::invalid_argument("main theorem: n must be divisible by 3");
    MainTheoremVerdict v;
    EdgeVector ev = edge_vector(ps);
    v.hypothesis = true;
    for (int k = 0; k < ps.n() / 3; ++k)
        if (cumulative(ev, k) != 3 * binom2(k + 2)) {
            v.hypothesis = false;
            v.first_failing_k = k;
            return v;
        }
    v.witness = search_decomposition(from_point_set(ps));
    v.decomposable = v.witness.has_value();
    return v;
}

// Per-level critical counts of the rotated sequence split into monochromatic
// and bichromatic steps, plus per-class window counts center_xx[k] =
// number of same-class steps with gate k < g < n-k.
struct PhaseStats {
    int n = 0;
    std::vector<long long> level_bi, level_mono;  // index k = 1..n/2 (0 unused)
    std::vector<long long> center_aa, center_bb, center_cc;  // index k = 0..n/2
    long long cumulative_bi(int k) const {
        long long s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(level_bi.size()); ++i) s += level_bi[i];
        return s;
    }
    long long cumulative_mono(int k) const {
        long long s = 0;
        for (int i = 1; i <= k && i < static_cast<int>(level_mono.size()); ++i) s += level_mono[i];
        return s;
    }
};

inline PhaseStats phase_stats(const HalfPeriod& hp, const ThreeDecomposition& dec) {
    HalfPeriod rot = rotate(hp, dec.rotation);
    auto blocks = detail::block_map(dec);
    const int n = hp.n;
    PhaseStats st;
    st.n = n;
    st.level_bi.assign(n / 2 + 1, 0);
    st.level_mono.assign(n / 2 + 1, 0);
    st.center_aa.assign(n / 2 + 1, 0);
    st.center_bb.assign(n / 2 + 1, 0);
    st.center_cc.assign(n / 2 + 1, 0);
    std::vector<int> perm = rot.initial;
    for (long long step = 0; step < rot.steps(); ++step) {
        int g = rot.gates[step];
        Block bx = blocks.at(perm[g - 1]), by = blocks.at(perm[g]);
        std::swap(perm[g - 1], perm[g]);
        int level = std::min(g, n - g);
        if (bx != by) {
            ++st.level_bi[level];
            continue;
        }
        ++st.level_mono[level];
        auto& center = bx == Block::A ? st.center_aa : bx == Block::B ? st.center_bb : st.center_cc;
        for (int k = 0; k < level; ++k) ++center[k];  // k < g < n-k  <=>  k < min(g, n-g)
    }
    return st;
}

// Exact cumulative bichromatic count of a 3-decomposable sequence. For even n
// the top level k = n/2 is the total 3*(n/3)^2 (every cross-class pair swaps
// exactly once); the piecewise form below already telescopes to that total at
// k = (n-1)/2 for odd n.
inline long long bichromatic_closed_form(int n, int k) {
    if (n % 3 != 0 || n < 3) throw std::invalid_argument("bichromatic closed form: n % 3 != 0");
    if (k < 1 || k > n / 2)
        throw std::invalid_argument("bichromatic closed form: need 1 <= k <= floor(n/2)");
    long long third = n / 3;
    if (k <= third) return 3 * binom2(k + 1);
    if (n % 2 == 0 && k == n / 2) return n * static_cast<long long>(n) / 3;
    return 3 * binom2(third + 1) + (k - third) * static_cast<long long>(n);
}

// All monochromatic steps confined to gates n/3 < g < 2n/3.
inline bool middle_third_check(const HalfPeriod& hp, const ThreeDecomposition& dec) {
    HalfPeriod rot = rotate(hp, dec.rotation);
    auto blocks = detail::block_map(dec);
    std::vector<int> perm = rot.initial;
    for (long long step = 0; step < rot.steps(); ++step) {
        int g = rot.gates[step];
        Block bx = blocks.at(perm[g - 1]), by = blocks.at(perm[g]);
        std::swap(perm[g - 1], perm[g]);
        if (bx == by && (3 * g <= hp.n || 3 * g >= 2 * hp.n)) return false;
    }
    return true;
}

}  // namespace rcn

#endif
