#pragma once

#include <vector>

#include "normalis/point_set.hpp"

namespace normalis {

/// A facet of the merged hull: a planar convex polygon, vertex indices in
/// counterclockwise order as seen from outside, with outward unit normal
/// and plane offset (normal . x = offset for points x on the plane).
struct HullFace {
    std::vector<int> vertices;
    Vec3 normal = Vec3::Zero();
    double offset = 0.0;
};

struct Hull3 {
    std::vector<HullFace> faces;
    std::vector<int> vertices;          // indices into the input, sorted
    std::vector<std::pair<int, int>> edges;  // canonical pairs, sorted
};

/// Incremental convex hull in R^3 with coplanar facets merged into single
/// polygons (plane-distance tolerance tol.concyclic_eps, visibility band
/// tol.boundary_eps). Throws DegenerateHull for flat or tiny inputs.
Hull3 convex_hull_3d(const std::vector<Vec3>& pts, const Tolerance& tol = Tolerance{});

}  // namespace normalis
