#pragma once

#include <map>
#include <vector>

#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Partition of a weak Gabriel graph's arcs into crossing equivalence
/// classes. Classes of size >= 2 carry their crossing polygon: the cycle
/// of arc endpoints around the common midpoint, each arc a diagonal.
struct CrossingReport {
    std::vector<std::vector<Edge>> classes;
    std::vector<std::vector<int>> polygons;   // parallel to classes; empty for singletons
    std::map<int, int> g_census;              // polygon size -> count
    std::vector<std::string> claim_violations;  // vertex-or-edge intersection audit
};

/// Group the edges of G by the crossing relation and verify that each
/// class shares one arc length and one midpoint within concyclic_eps.
/// Throws NotAnEquivalence when that verification fails.
CrossingReport crossing_classes(const GeoGraph& G, const PointSet& V);

/// Replace each class of crossing arcs by its crossing polygon's boundary
/// edges. Re-verifies that the result is embedded (no crossings, no
/// vertex in an arc's relative interior).
GeoGraph reduce_to_gprime(const GeoGraph& G, const CrossingReport& report,
                          const PointSet& V);

}  // namespace normalis
