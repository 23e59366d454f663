#pragma once

#include <map>
#include <vector>

#include "normalis/convex_hull.hpp"
#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Where the sphere centre sits relative to the convex hull of V. The
/// four cases decide how much of the sphere the Delaunay tiling covers.
enum class OriginCase { InteriorOfHull, InFaceRelint, InEdgeRelint, OutsideHull };

inline const char* to_string(OriginCase c) {
    switch (c) {
        case OriginCase::InteriorOfHull: return "interior_of_hull";
        case OriginCase::InFaceRelint: return "in_face_relint";
        case OriginCase::InEdgeRelint: return "in_edge_relint";
        case OriginCase::OutsideHull: return "outside_hull";
    }
    return "?";
}

/// Spherical Delaunay tiling: central projections of the outside faces
/// and edges of conv V. Faces are vertex cycles of spherical polygons.
struct Tiling {
    std::vector<std::vector<int>> faces;
    std::vector<Edge> edges;
    OriginCase origin_case = OriginCase::InteriorOfHull;
    bool origin_near_boundary = false;  // |offset| within band of some facet plane
    std::map<int, int> face_census;     // face size -> count
    Hull3 hull;

    /// Sum of spherical face areas (4*pi when the tiling covers S^2).
    double total_area(const PointSet& V) const;
};

Tiling delaunay_tiling(const PointSet& V);

/// Spherical area of the convex spherical polygon with the given vertex cycle.
double spherical_polygon_area(const std::vector<Vec3>& pts, const std::vector<int>& cycle);

}  // namespace normalis
