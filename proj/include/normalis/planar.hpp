#pragma once

#include <Eigen/Core>

#include <vector>

#include "normalis/point_set.hpp"

namespace normalis {

inline double cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

/// Signed area scale used to normalize cross-product comparisons.
inline double segment_scale(const Vec2& a, const Vec2& b) {
    return std::max(1e-300, (b - a).norm());
}

/// True if x lies on the closed segment ab within eps (relative band).
bool on_segment(const Vec2& a, const Vec2& b, const Vec2& x, double eps);

/// True if x lies strictly inside the open segment ab within eps.
bool in_segment_interior(const Vec2& a, const Vec2& b, const Vec2& x, double eps);

/// True if the open segments ab and cd share at least one point
/// (a transversal crossing or a collinear overlap of interiors).
bool segments_share_interior(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                             double eps);

/// Indices of the convex hull of pts in counterclockwise order, corners
/// only (collinear boundary points are dropped).
std::vector<int> convex_hull_2d(const std::vector<Vec2>& pts, double eps);

/// True if x lies in the closed convex hull of pts.
bool in_convex_hull_2d(const std::vector<Vec2>& pts, const Vec2& x, double eps);

}  // namespace normalis
