#pragma once

#include <map>
#include <optional>
#include <string>

#include "normalis/delaunay.hpp"
#include "normalis/double_normal.hpp"
#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Read a point-set document:
///   { "space": "plane"|"space3"|"sphere", "points": [[x,y(,z)], ...],
///     "tolerance": {...}?, "meta": {...}? }
/// Parse and validation errors carry a line/column position. An explicit
/// tolerance override wins over `base` (which carries e.g. the
/// environment override).
PointSet read_point_set(const std::string& text, const Tolerance& base = Tolerance{});
PointSet read_point_set_file(const std::string& path, const Tolerance& base = Tolerance{});

/// Serialize with 17 significant digits so the numeric payload
/// round-trips exactly.
std::string write_point_set(const PointSet& V, const std::string& meta = "");
void write_point_set_file(const std::string& path, const PointSet& V,
                          const std::string& meta = "");

/// Graph as JSON: vertices, edge index pairs, and whatever census fields
/// apply (face census and origin case for tilings, colors for planar
/// double-normal graphs).
struct GraphExtras {
    const Tiling* tiling = nullptr;
    const std::map<Edge, EdgeColor>* colors = nullptr;
    const std::map<int, int>* g_census = nullptr;  // crossing-polygon census
};
std::string graph_json(const PointSet& V, const GeoGraph& G, const std::string& kind,
                       const GraphExtras& extras = {});

/// OFF geometry of a Delaunay tiling (vertices + faces).
std::string tiling_off(const PointSet& V, const Tiling& tiling);

/// SVG drawing of a planar graph. Red edges dashed, blue solid, uncolored
/// edges solid black.
std::string planar_svg(const PointSet& V, const GeoGraph& G);

}  // namespace normalis
