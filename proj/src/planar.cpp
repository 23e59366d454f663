#include "normalis/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace normalis {

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& x, double eps) {
    const Vec2 d = b - a;
    const double len = d.norm();
    if (len <= eps) return (x - a).norm() <= eps;
    if (std::abs(cross2(d, x - a)) > eps * len * len) return false;
    const double t = d.dot(x - a);
    return t >= -eps * len * len && t <= (1.0 + eps) * len * len;
}

bool in_segment_interior(const Vec2& a, const Vec2& b, const Vec2& x, double eps) {
    const Vec2 d = b - a;
    const double len2 = d.squaredNorm();
    if (len2 == 0.0) return false;
    if (std::abs(cross2(d, x - a)) > eps * len2) return false;
    const double t = d.dot(x - a);
    return t > eps * len2 && t < (1.0 - eps) * len2;
}

namespace {

// Orientation of c against the directed line ab: +1 left, -1 right, 0 within band.
int orient(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
    const double v = cross2(b - a, c - a);
    const double band = eps * segment_scale(a, b) * segment_scale(a, c);
    if (v > band) return 1;
    if (v < -band) return -1;
    return 0;
}

}  // namespace

bool segments_share_interior(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                             double eps) {
    const int o1 = orient(a, b, c, eps);
    const int o2 = orient(a, b, d, eps);
    const int o3 = orient(c, d, a, eps);
    const int o4 = orient(c, d, b, eps);
    // Proper crossing: strict straddle on both lines.
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    // Degenerate contacts: an interior point of one segment on the other.
    if (in_segment_interior(a, b, c, eps) || in_segment_interior(a, b, d, eps)) return true;
    if (in_segment_interior(c, d, a, eps) || in_segment_interior(c, d, b, eps)) return true;
    // Collinear overlap with shared interior but no endpoint inside the
    // other's interior happens only when the segments coincide.
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        const bool same = ((a - c).norm() <= eps && (b - d).norm() <= eps) ||
                          ((a - d).norm() <= eps && (b - c).norm() <= eps);
        if (same) return true;
    }
    return false;
}

std::vector<int> convex_hull_2d(const std::vector<Vec2>& pts, double eps) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (pts[i].x() != pts[j].x()) return pts[i].x() < pts[j].x();
        return pts[i].y() < pts[j].y();
    });
    if (n < 3) return idx;
    std::vector<int> hull(2 * n);
    int k = 0;
    for (int ii = 0; ii < n; ++ii) {
        const int i = idx[ii];
        while (k >= 2 && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i], eps) <= 0) --k;
        hull[k++] = i;
    }
    const int lower = k + 1;
    for (int ii = n - 2; ii >= 0; --ii) {
        const int i = idx[ii];
        while (k >= lower && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i], eps) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

bool in_convex_hull_2d(const std::vector<Vec2>& pts, const Vec2& x, double eps) {
    if (pts.empty()) return false;
    if (pts.size() == 1) return (x - pts[0]).norm() <= eps;
    const std::vector<int> hull = convex_hull_2d(pts, eps);
    if (hull.size() == 1) return (x - pts[hull[0]]).norm() <= eps;
    if (hull.size() == 2) return on_segment(pts[hull[0]], pts[hull[1]], x, eps);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2& a = pts[hull[i]];
        const Vec2& b = pts[hull[(i + 1) % hull.size()]];
        if (orient(a, b, x, eps) < 0) return false;
    }
    return true;
}

}  // namespace normalis
