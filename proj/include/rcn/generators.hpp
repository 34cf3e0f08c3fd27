#ifndef RCN_GENERATORS_HPP
#define RCN_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcn/geometry.hpp"
#include "rcn/numeric.hpp"

namespace rcn {

enum class GenKind { convex, random_disk, three_ray };

inline GenKind gen_kind_from_string(const std::string& s) {
    if (s == "convex") return GenKind::convex;
    if (s == "random-disk") return GenKind::random_disk;
    if (s == "three-ray") return GenKind::three_ray;
    throw std::invalid_argument("unknown generator kind: " + s);
}

inline const char* to_string(GenKind k) {
    switch (k) {
        case GenKind::convex: return "convex";
        case GenKind::random_disk: return "random-disk";
        default: return "three-ray";
    }
}

constexpr long long kCoordLimit = 1LL << 20;

namespace detail {

// n distinct abscissae on the parabola y = x^2: convex position, no three
// collinear, hull of size n — for any seed.
inline PointSet gen_convex(int n, std::uint64_t seed) {
    SplitMix rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    long long span = 3LL * n + 1;
    std::vector<bool> used(2 * span + 1, false);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        long long t = rng.range(-span, span);
        if (used[t + span]) continue;
        used[t + span] = true;
        pts.push_back({t, t * t});
    }
    return make_point_set(std::move(pts));
}

inline PointSet gen_random_disk(int n, std::uint64_t seed) {
    SplitMix rng(seed * 0x9e3779b97f4a7c15ULL + 2);
    const long long R = 1000;
    std::vector<Point> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > 200000) throw std::runtime_error("random-disk: rejection budget exhausted");
        Point p{rng.range(-R, R), rng.range(-R, R)};
        if (p.x * p.x + p.y * p.y > R * R) continue;
        bool ok = true;
        for (size_t i = 0; ok && i < pts.size(); ++i) {
            if (pts[i] == p) ok = false;
            for (size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], p) == 0) ok = false;
        }
        if (ok) pts.push_back(p);
    }
    return make_point_set(std::move(pts));
}

// n/3 points per ray at 90/210/330 degrees, radii in geometric progression,
// plus a tiny seeded jitter that breaks the exact collinearity along each ray.
inline PointSet gen_three_ray(int n, std::uint64_t seed, long long growth) {
    if (n % 3 != 0) throw std::invalid_argument("three-ray: n must be divisible by 3");
    if (growth < 2) throw std::invalid_argument("three-ray: growth must be >= 2");
    const int per = n / 3;
    const long long dir[3][2] = {{0, 256}, {-222, -128}, {222, -128}};
    std::vector<long long> radius(per, 1);
    for (int j = 1; j < per; ++j) {
        radius[j] = radius[j - 1] * growth;
        if (radius[j] > (kCoordLimit - 2) / 256)  // -2 leaves room for the jitter
            throw std::invalid_argument("three-ray: coordinates would exceed 2^20");
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        SplitMix rng(seed * 0x9e3779b97f4a7c15ULL + 3 + attempt);
        std::vector<Point> pts;
        for (int r = 0; r < 3; ++r)
            for (int j = 0; j < per; ++j)
                pts.push_back({dir[r][0] * radius[j] + rng.range(-2, 2),
                               dir[r][1] * radius[j] + rng.range(-2, 2)});
        if (in_general_position(pts)) return PointSet{std::move(pts)};
    }
    throw std::runtime_error("three-ray: perturbation retries exhausted");
}

}  // namespace detail

// Deterministic for fixed arguments; growth is only read by three-ray.
inline PointSet generate(GenKind kind, int n, std::uint64_t seed, long long growth = 8) {
    if (n < 3) throw std::invalid_argument("generate: n must be at least 3");
    switch (kind) {
        case GenKind::convex: return detail::gen_convex(n, seed);
        case GenKind::random_disk: return detail::gen_random_disk(n, seed);
        default: return detail::gen_three_ray(n, seed, growth);
    }
}

}  // namespace rcn

#endif
