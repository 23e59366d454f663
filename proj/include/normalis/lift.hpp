#pragma once

#include <vector>

#include "normalis/double_normal.hpp"
#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Double-normal count of a sphere set computed two independent ways:
/// directly by slab enumeration, and through the antipodal lift
/// 2N = |E1| + |E2| + |V intersect V'|. The two must agree exactly.
struct LiftResult {
    int count = 0;                 // N(V)
    GeoGraph graph;                // double-normal graph on V
    PointSet lifted;               // V united with V'
    GeoGraph e1;                   // lift edges x y' on V united with V'
    GeoGraph e2;                   // induced subgraph of e1 on V intersect V'
    std::vector<int> self_antipodal;  // indices of V intersect V' within `lifted`
    LiftResult(GeoGraph g, PointSet w, GeoGraph g1, GeoGraph g2)
        : graph(std::move(g)), lifted(std::move(w)), e1(std::move(g1)), e2(std::move(g2)) {}
};

/// Throws LiftMismatch when the direct and lifted counts differ.
LiftResult sphere_double_normals(const PointSet& V, NormalMode mode);

}  // namespace normalis
