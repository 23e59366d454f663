#pragma once

#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Weak Gabriel graph on S^2: join non-antipodal a, b iff no point of V
/// lies in the open minor cap with diameter ab.
GeoGraph weak_gabriel(const PointSet& V);

/// Strict variant: points on the cap boundary (other than a, b) also
/// exclude the edge.
GeoGraph strict_gabriel(const PointSet& V);

}  // namespace normalis
