#ifndef RCN_GEOMETRY_HPP
#define RCN_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcn {

// Integer coordinates; predicates are exact (intermediate products in 128 bits,
// so any |x|,|y| < 2^62 is safe — far beyond the 2^20 the generators emit).
struct Point {
    long long x = 0, y = 0;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// sign of det(q-p, r-p): +1 ccw, -1 cw, 0 collinear
inline int orientation(const Point& p, const Point& q, const Point& r) {
    __int128 d = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                 static_cast<__int128>(q.y - p.y) * (r.x - p.x);
    return d > 0 ? 1 : d < 0 ? -1 : 0;
}

inline __int128 cross(long long ax, long long ay, long long bx, long long by) {
    return static_cast<__int128>(ax) * by - static_cast<__int128>(ay) * bx;
}

struct PointSet {
    std::vector<Point> points;
    int n() const { return static_cast<int>(points.size()); }
};

// Empty string when valid; otherwise a description of the first violation.
inline std::string general_position_violation(const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j])
                return "duplicate points at indices " + std::to_string(i) + "," + std::to_string(j);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == 0)
                    return "collinear triple " + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k);
    return {};
}

inline bool in_general_position(const std::vector<Point>& pts) {
    return general_position_violation(pts).empty();
}

// Canonical constructor: rejects degenerate input.
inline PointSet make_point_set(std::vector<Point> pts) {
    if (pts.size() < 3) throw std::invalid_argument("point set needs at least 3 points");
    std::string why = general_position_violation(pts);
    if (!why.empty()) throw std::invalid_argument("general position violated: " + why);
    return PointSet{std::move(pts)};
}

// Monotone chain; assumes general position, so the hull has no collinear
// boundary points and its size equals the number of extreme points.
inline int convex_hull_size(const PointSet& ps) {
    std::vector<Point> p = ps.points;
    std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    int n = static_cast<int>(p.size());
    std::vector<Point> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (int i = n - 2, lo = k + 1; i >= 0; --i) {
        while (k >= lo && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    return k - 1;
}

}  // namespace rcn

#endif
