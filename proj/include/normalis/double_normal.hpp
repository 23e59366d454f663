#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

enum class NormalMode { Weak, Strict };

/// Double-normal graph of V: edge {p,q} iff every other point lies in the
/// closed slab of (p,q) (Weak), or strictly inside it (Strict). Sphere
/// sets are treated as subsets of R^3.
GeoGraph double_normal_graph(const PointSet& V, NormalMode mode,
                             bool hull_accelerator = false);

/// Pairs realizing the maximum pairwise distance (relative tolerance on
/// squared distances).
GeoGraph diameter_graph(const PointSet& V);

struct ClaimResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> witnesses;
    ClaimResult() = default;
    explicit ClaimResult(std::string n) : name(std::move(n)) {}
};

/// Audit outcome for the planar structural claims and the red/blue
/// decomposition. rightmost_edge[v] is set for every non-isolated v.
struct StructureReport {
    std::vector<ClaimResult> claim_results;
    std::vector<Edge> red_edges;
    std::vector<Edge> blue_edges;
    std::vector<std::optional<int>> rightmost_edge;  // per-vertex other endpoint
    bool all_pass() const {
        for (const ClaimResult& c : claim_results)
            if (!c.pass) return false;
        return true;
    }
    const ClaimResult* find(const std::string& name) const {
        for (const ClaimResult& c : claim_results)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Check the five basic structural properties of a planar double-normal
/// drawing: no two edges collinear, restricted degree for vertices in
/// edge interiors, disjoint edges spanning rectangles, no vertex inside
/// the hull of its neighbours, non-isolated vertices on the hull of V.
StructureReport audit_basic_claims(const PointSet& V, const GeoGraph& G);

/// Color the rightmost edge of each non-isolated vertex red and the rest
/// blue, then audit: blue edges form a matching, blue edges pairwise
/// cross, a blue and a red edge without a common endpoint cross, and
/// |E| = |R| + |B| <= n + n/2.
StructureReport red_blue_decomposition(const PointSet& V, GeoGraph& G);

}  // namespace normalis
