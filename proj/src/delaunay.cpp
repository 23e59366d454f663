#include "normalis/delaunay.hpp"

#include <cmath>
#include <set>

#include "normalis/predicates.hpp"

namespace normalis {

namespace {

/// Classify the origin against one facet polygon, inside its plane.
/// Returns 2 for relative interior, 1 for boundary, 0 for outside.
int origin_in_face(const std::vector<Vec3>& pts, const HullFace& face, double eps) {
    const std::size_t k = face.vertices.size();
    int on_edges = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec3& a = pts[face.vertices[i]];
        const Vec3& b = pts[face.vertices[(i + 1) % k]];
        // Inward side of the boundary edge ab within the facet plane.
        const double side = (b - a).cross(face.normal).dot(-a);
        const double scale = (b - a).norm();
        if (side > eps * scale) return 0;  // outward normal of edge points at o
        if (side >= -eps * scale) ++on_edges;
    }
    return on_edges > 0 ? 1 : 2;
}

}  // namespace

double spherical_polygon_area(const std::vector<Vec3>& pts, const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    double angle_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Vec3& v = pts[cycle[i]];
        const Vec3& u = pts[cycle[(i + k - 1) % k]];
        const Vec3& w = pts[cycle[(i + 1) % k]];
        const Vec3 tu = (u - u.dot(v) * v).normalized();
        const Vec3 tw = (w - w.dot(v) * v).normalized();
        angle_sum += std::atan2(tu.cross(tw).norm(), tu.dot(tw));
    }
    return angle_sum - (static_cast<double>(k) - 2.0) * M_PI;
}

double Tiling::total_area(const PointSet& V) const {
    double sum = 0.0;
    for (const auto& f : faces) sum += spherical_polygon_area(V.points(), f);
    return sum;
}

Tiling delaunay_tiling(const PointSet& V) {
    if (V.space() != Space::Sphere)
        throw Error(ErrorCode::WrongSpace, "Delaunay tiling needs sphere points");
    if (V.size() < 3) throw Error(ErrorCode::TooFewPoints, "need at least 3 points");

    Tiling tiling;
    tiling.hull = convex_hull_3d(V.points(), V.tol());
    const double eps = V.tol().boundary_eps;

    bool outside = false;
    std::vector<int> on_plane;
    for (std::size_t f = 0; f < tiling.hull.faces.size(); ++f) {
        const double c = tiling.hull.faces[f].offset;
        if (c < -eps) outside = true;
        if (std::abs(c) <= eps) on_plane.push_back(static_cast<int>(f));
    }
    if (!on_plane.empty()) tiling.origin_near_boundary = true;

    if (outside && on_plane.empty()) {
        tiling.origin_case = OriginCase::OutsideHull;
    } else if (on_plane.empty()) {
        tiling.origin_case = OriginCase::InteriorOfHull;
    } else {
        // o lies on at least one facet plane; resolve against the polygons.
        int relint_faces = 0, boundary_faces = 0;
        for (int f : on_plane) {
            const int c = origin_in_face(V.points(), tiling.hull.faces[f], eps);
            if (c == 2) ++relint_faces;
            if (c == 1) ++boundary_faces;
        }
        if (relint_faces >= 1 && !outside)
            tiling.origin_case = OriginCase::InFaceRelint;
        else if (boundary_faces >= 2 && !outside)
            tiling.origin_case = OriginCase::InEdgeRelint;
        else
            tiling.origin_case = OriginCase::OutsideHull;
    }

    // A face is outside iff its supporting plane has positive offset; an
    // edge is outside iff it belongs to such a face.
    std::set<Edge> outside_edges;
    for (const HullFace& face : tiling.hull.faces) {
        if (face.offset <= eps) continue;
        tiling.faces.push_back(face.vertices);
        ++tiling.face_census[static_cast<int>(face.vertices.size())];
        const std::size_t k = face.vertices.size();
        for (std::size_t i = 0; i < k; ++i)
            outside_edges.insert(
                make_edge(face.vertices[i], face.vertices[(i + 1) % k]));
    }
    tiling.edges.assign(outside_edges.begin(), outside_edges.end());
    if (tiling.faces.empty())
        throw Error(ErrorCode::DegenerateHull, "no outside faces: origin handling fell into an unsupported sub-case");
    return tiling;
}

}  // namespace normalis
