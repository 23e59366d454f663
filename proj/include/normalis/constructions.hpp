#pragma once

#include <optional>
#include <vector>

#include "normalis/point_set.hpp"

namespace normalis {

/// Parameters of the layered ring construction: a regular 2^i k-gon on
/// each of m latitude circles, all with one common chord length c, plus
/// the antipodal copy of everything.
struct LayeredParams {
    int k = 4;                  // base polygon size, even, >= 4
    int m = 1;                  // rings per hemisphere
    std::optional<double> c;    // common chord; auto-selected when absent
};

/// Unit-circumradius regular n-gon, first vertex at angle pi/n.
PointSet regular_polygon(int n, Tolerance tol = Tolerance{});

/// Regular (n-1)-gon plus its centroid; for n = 3 the plain triangle.
PointSet planar_odd_extremal(int n, Tolerance tol = Tolerance{});

/// The 2|angles| points {+-(cos a, sin a)}; angles in radians, distinct mod pi.
PointSet symmetric_circle_set(const std::vector<double>& angles, Tolerance tol = Tolerance{});

/// The fixed seven-point planar configuration with nine double-normal pairs.
PointSet fig2_seven_points(Tolerance tol = Tolerance{});

/// Expected edge list of fig2_seven_points' double-normal graph.
std::vector<std::pair<int, int>> fig2_expected_edges();

PointSet cube_vertices(Tolerance tol = Tolerance{});
PointSet rhombicuboctahedron_vertices(Tolerance tol = Tolerance{});

/// Three equidistant points on a great circle plus two points straddling
/// the third on the perpendicular great circle (offset in radians).
PointSet five_point_strict(double offset = 5.0 * M_PI / 180.0, Tolerance tol = Tolerance{});

PointSet layered_construction(const LayeredParams& params, Tolerance tol = Tolerance{});

/// Insert `count` points strictly inside one triangular face of the
/// Delaunay tiling of V, on a small spiral around the face centroid.
PointSet pad_with_interior_points(const PointSet& V, int count);

/// Layered construction with the asymptotic parameter choice
/// m = floor(log2(n)/2 - 1), k = 2*floor(n / (4(2^m - 1))), padded to n points.
PointSet near_extremal(int n, Tolerance tol = Tolerance{});

struct NearExtremalParams {
    int m = 0;
    int k = 0;
    int layered_size = 0;
    int padding = 0;
};
NearExtremalParams near_extremal_params(int n);

}  // namespace normalis
