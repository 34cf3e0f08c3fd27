#ifndef RCN_TESTS_FIXTURES_HPP
#define RCN_TESTS_FIXTURES_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcn/rcn.hpp"

namespace fixtures {

inline rcn::PointSet unit_square() {
    return rcn::make_point_set({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

inline rcn::PointSet triangle_interior() {
    return rcn::make_point_set({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
}

inline rcn::PointSet convex_gon(int n) {
    std::vector<rcn::Point> pts;
    for (int i = 1; i <= n; ++i) pts.push_back({i, static_cast<long long>(i) * i});
    return rcn::make_point_set(std::move(pts));
}

// 300 generated sets: convex, random-disk and three-ray, 4 <= n <= 12.
inline const std::vector<rcn::PointSet>& corpus() {
    static const std::vector<rcn::PointSet> sets = [] {
        std::vector<rcn::PointSet> v;
        for (int n = 4; n <= 12; ++n)
            for (std::uint64_t s = 1; s <= 8; ++s)
                v.push_back(rcn::generate(rcn::GenKind::convex, n, s));
        for (int n = 4; n <= 12; ++n)
            for (std::uint64_t s = 1; s <= 20; ++s)
                v.push_back(rcn::generate(rcn::GenKind::random_disk, n, s));
        for (int n : {6, 9, 12})
            for (std::uint64_t s = 1; s <= 16; ++s)
                v.push_back(rcn::generate(rcn::GenKind::three_ray, n, s));
        return v;
    }();
    return sets;
}

// Three-ray set whose cumulative counts are at the lower bound for every
// k < n/3, confirmed against the edge-vector oracle; growth factors are tried
// until one works.
inline rcn::PointSet tuned_three_ray(int n) {
    for (long long growth : {8, 16, 4, 32, 2, 64, 128})
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            rcn::PointSet ps = rcn::generate(rcn::GenKind::three_ray, n, seed, growth);
            rcn::EdgeVector ev = rcn::edge_vector(ps);
            bool tight = true;
            for (int k = 0; k < n / 3 && tight; ++k)
                tight = rcn::cumulative(ev, k) == 3 * rcn::binom2(k + 2);
            if (tight) return ps;
        }
    throw std::runtime_error("no tight three-ray configuration found for n = " +
                             std::to_string(n));
}

// Every half-period with initial permutation 1..n: depth-first search over
// gates, allowing a swap only if that pair has not swapped yet.
inline std::vector<rcn::HalfPeriod> enumerate_half_periods(int n) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("enumerate_half_periods: supported n is 2..5");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    const std::vector<int> initial = perm;
    std::vector<int> gates;
    std::vector<rcn::HalfPeriod> out;
    const long long target = rcn::pair_steps(n);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long long>(gates.size()) == target) {
            out.push_back(rcn::HalfPeriod{n, initial, gates});
            return;
        }
        for (int g = 1; g < n; ++g)
            if (perm[g - 1] < perm[g]) {
                std::swap(perm[g - 1], perm[g]);
                gates.push_back(g);
                self(self);
                gates.pop_back();
                std::swap(perm[g - 1], perm[g]);
            }
    };
    rec(rec);
    return out;
}

}  // namespace fixtures

#endif
