#ifndef RCN_DISCOVERY_HPP
#define RCN_DISCOVERY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcn/halfperiod.hpp"

namespace rcn {

enum class Zone { A, B, C };
enum class ElemClass { a, b, c };

// Role of each label under the fixed-k labeling read off the initial
// permutation: positions 1..k hold a_k..a_1, the middle m = n-2k positions
// hold b_1..b_m, the last k positions hold c_1..c_k.
struct KLabeling {
    int n = 0, k = 0, m = 0;
    std::unordered_map<int, std::pair<ElemClass, int>> role;  // label -> (class, index)
};

inline KLabeling make_k_labeling(const HalfPeriod& hp, int k) {
    if (k < 1 || hp.n - 2 * k < 1)
        throw std::invalid_argument("k labeling: need 1 <= k and m = n-2k >= 1");
    KLabeling lab{hp.n, k, hp.n - 2 * k, {}};
    for (int p = 1; p <= hp.n; ++p) {
        int label = hp.initial[p - 1];
        if (p <= k)
            lab.role[label] = {ElemClass::a, k - p + 1};
        else if (p <= k + lab.m)
            lab.role[label] = {ElemClass::b, p - k};
        else
            lab.role[label] = {ElemClass::c, p - k - lab.m};
    }
    return lab;
}

// Per-step annotations. A step is (<=k)-critical iff its zone is A or C.
// Discovery: an element passes one of its compulsory gates for the first time
// (for a_j: exits through A-gates 1..j, enters through C-gates 1..j; for c_j
// the mirror image). A step is confined when both swapped elements are still
// confined: an a is confined until it first exits through A-gate 1, a c until
// it first exits through C-gate 1; b's are never confined.
struct StepTag {
    Zone zone = Zone::B;
    std::vector<int> discovered;  // labels this step is a discovery for (0..2)
    bool double_discovery = false;
    bool confined = false;
    bool critical() const { return zone != Zone::B; }
};

struct LiberationSequence {
    std::vector<int> order;  // a and c labels, in order of first liberation
};

struct StepClassification {
    KLabeling labeling;
    std::vector<StepTag> tags;
    LiberationSequence liberation;
    bool any_confined = false;

    // |T(x)| = number of opposite-class elements liberated strictly after x
    int t_size(int label) const {
        auto it = labeling.role.find(label);
        if (it == labeling.role.end() || it->second.first == ElemClass::b)
            throw std::invalid_argument("t_size: label is not an a or c element");
        ElemClass opposite = it->second.first == ElemClass::a ? ElemClass::c : ElemClass::a;
        int count = 0;
        bool seen = false;
        for (int l : liberation.order) {
            if (l == label) { seen = true; continue; }
            if (seen && labeling.role.at(l).first == opposite) ++count;
        }
        if (!seen) throw std::logic_error("t_size: label missing from liberation sequence");
        return count;
    }
};

inline StepClassification classify_steps(const HalfPeriod& hp, int k) {
    StepClassification out{make_k_labeling(hp, k), {}, {}, false};
    const int n = hp.n, m = out.labeling.m;
    std::vector<int> perm = hp.initial;
    // first-passage masks per label: bit i set once the element has passed its
    // i-th compulsory gate of that kind
    std::unordered_map<int, unsigned> first_exit, first_entry;
    std::unordered_map<int, bool> free_elem;
    for (auto& [label, role] : out.labeling.role)
        if (role.first != ElemClass::b) {
            first_exit[label] = first_entry[label] = 0;
            free_elem[label] = false;
        }
    out.tags.reserve(hp.gates.size());
    for (int g : hp.gates) {
        int x = perm[g - 1], y = perm[g];  // x moves right, y moves left
        StepTag tag;
        tag.zone = g <= k ? Zone::A : (g >= k + m ? Zone::C : Zone::B);
        auto confined = [&](int e) {
            auto it = out.labeling.role.find(e);
            return it->second.first != ElemClass::b && !free_elem[e];
        };
        tag.confined = confined(x) && confined(y);
        if (tag.zone == Zone::A) {
            int i = k - g + 1;  // shared A-gate index
            auto [xc, xi] = out.labeling.role.at(x);
            if (xc == ElemClass::a && xi >= i && !(first_exit[x] >> i & 1)) {
                first_exit[x] |= 1u << i;
                tag.discovered.push_back(x);
            }
            auto [yc, yi] = out.labeling.role.at(y);
            if (yc == ElemClass::c && yi >= i && !(first_entry[y] >> i & 1)) {
                first_entry[y] |= 1u << i;
                tag.discovered.push_back(y);
            }
        } else if (tag.zone == Zone::C) {
            int i = g + 1 - (k + m);  // shared C-gate index
            auto [xc, xi] = out.labeling.role.at(x);
            if (xc == ElemClass::a && xi >= i && !(first_entry[x] >> i & 1)) {
                first_entry[x] |= 1u << i;
                tag.discovered.push_back(x);
            }
            auto [yc, yi] = out.labeling.role.at(y);
            if (yc == ElemClass::c && yi >= i && !(first_exit[y] >> i & 1)) {
                first_exit[y] |= 1u << i;
                tag.discovered.push_back(y);
            }
        }
        tag.double_discovery = tag.discovered.size() == 2;
        out.any_confined = out.any_confined || tag.confined;
        // liberation: first exit through A-gate 1 (gate k, left element) or
        // through C-gate 1 (gate k+m, right element)
        if (g == k && out.labeling.role.at(x).first == ElemClass::a && !free_elem[x]) {
            free_elem[x] = true;
            out.liberation.order.push_back(x);
        }
        if (g == k + m && out.labeling.role.at(y).first == ElemClass::c && !free_elem[y]) {
            free_elem[y] = true;
            out.liberation.order.push_back(y);
        }
        out.tags.push_back(std::move(tag));
        std::swap(perm[g - 1], perm[g]);
    }
    return out;
}

inline bool consecutive_in_liberation(const StepClassification& sc, ElemClass cls) {
    int first = -1, last = -1, count = 0;
    for (int i = 0; i < static_cast<int>(sc.liberation.order.size()); ++i)
        if (sc.labeling.role.at(sc.liberation.order[i]).first == cls) {
            if (first < 0) first = i;
            last = i;
            ++count;
        }
    return count == 0 || last - first + 1 == count;
}

// Perfectness of a half period with respect to k. Undecided (refused) when
// confined steps are present; otherwise three clauses:
//   (a) every A-zone or C-zone step is a discovery step,
//   (b) a_i is in exactly min(i, |T(a_i)|) double discoveries in the C-zone,
//   (c) c_i is in exactly min(i, |T(c_i)|) double discoveries in the A-zone.
struct PerfectnessReport {
    bool confined_present = false;
    bool clause_a = false, clause_b = false, clause_c = false;
    std::string detail;
    bool decided() const { return !confined_present; }
    bool perfect() const { return decided() && clause_a && clause_b && clause_c; }
};

inline PerfectnessReport check_perfect(const StepClassification& sc) {
    PerfectnessReport rep;
    if (sc.any_confined) {
        rep.confined_present = true;
        rep.detail = "confined steps present; perfectness undecided";
        return rep;
    }
    rep.clause_a = true;
    for (size_t t = 0; t < sc.tags.size(); ++t)
        if (sc.tags[t].critical() && sc.tags[t].discovered.empty()) {
            rep.clause_a = false;
            rep.detail = "non-discovery critical step at index " + std::to_string(t);
            break;
        }
    auto doubles_in = [&](int label, Zone zone) {
        int count = 0;
        for (const StepTag& tag : sc.tags)
            if (tag.zone == zone && tag.double_discovery &&
                std::find(tag.discovered.begin(), tag.discovered.end(), label) !=
                    tag.discovered.end())
                ++count;
        return count;
    };
    rep.clause_b = rep.clause_c = true;
    for (auto& [label, role] : sc.labeling.role) {
        if (role.first == ElemClass::b) continue;
        int want = std::min(role.second, sc.t_size(label));
        if (role.first == ElemClass::a) {
            int got = doubles_in(label, Zone::C);
            if (got != want && rep.clause_b) {
                rep.clause_b = false;
                rep.detail += std::string(rep.detail.empty() ? "" : "; ") + "a_" +
                              std::to_string(role.second) + " has " + std::to_string(got) +
                              " C-zone doubles, expected " + std::to_string(want);
            }
        } else {
            int got = doubles_in(label, Zone::A);
            if (got != want && rep.clause_c) {
                rep.clause_c = false;
                rep.detail += std::string(rep.detail.empty() ? "" : "; ") + "c_" +
                              std::to_string(role.second) + " has " + std::to_string(got) +
                              " A-zone doubles, expected " + std::to_string(want);
            }
        }
    }
    return rep;
}

inline PerfectnessReport is_perfect(const HalfPeriod& hp, int k) {
    return check_perfect(classify_steps(hp, k));
}

// Permutation right after label x first moves into the window of positions
// k+1..n-k (the positions touched by steps whose gate g has k < g < n-k).
// step == -1 when x starts inside the window (the initial permutation is
// returned).
struct CenterEntry {
    long long step = -1;
    std::vector<int> permutation;
};

inline CenterEntry center_entry_permutation(const HalfPeriod& hp, int x, int k) {
    if (k < 0 || 2 * k >= hp.n)
        throw std::invalid_argument("center entry: need 0 <= k < n/2");
    std::vector<int> perm = hp.initial;
    auto pos_of = [&](int label) {
        auto it = std::find(perm.begin(), perm.end(), label);
        if (it == perm.end()) throw std::invalid_argument("center entry: label not in sequence");
        return static_cast<int>(it - perm.begin()) + 1;
    };
    auto inside = [&](int p) { return p >= k + 1 && p <= hp.n - k; };
    if (inside(pos_of(x))) return CenterEntry{-1, perm};
    for (long long t = 0; t < hp.steps(); ++t) {
        int g = hp.gates[t];
        std::swap(perm[g - 1], perm[g]);
        if ((perm[g - 1] == x || perm[g] == x) && inside(pos_of(x)))
            return CenterEntry{t, perm};
    }
    throw std::invalid_argument("center entry: label never enters the window");
}

}  // namespace rcn

#endif
