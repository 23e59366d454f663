#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "normalis/types.hpp"

namespace normalis {

using Edge = std::pair<int, int>;  // canonical: first < second

inline Edge make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

enum class EdgeColor { Red, Blue };

/// Vertex-indexed undirected graph over a PointSet, kept in canonical
/// sorted order so identical edge sets compare equal structurally.
class GeoGraph {
public:
    GeoGraph(int n, Space space) : n_(n), space_(space) {}

    int vertex_count() const { return n_; }
    Space space() const { return space_; }

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    bool isolated(int v) const { return degree(v) == 0; }

    /// Connected components; isolated vertices count as singletons.
    int component_count() const;

    /// Components restricted to vertices with degree >= 1.
    int edge_component_count() const;

    bool is_subgraph_of(const GeoGraph& other) const;

    std::map<Edge, EdgeColor> colors;          // red/blue decomposition, when computed
    std::map<Edge, int> crossing_class;        // crossing-class id, when computed

private:
    int n_;
    Space space_;
    std::vector<Edge> edges_;
};

inline void GeoGraph::add_edge(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        throw Error(ErrorCode::BadParameter, "edge endpoints out of range");
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

inline bool GeoGraph::has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

inline int GeoGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.first == v) + (e.second == v);
    return d;
}

inline std::vector<int> GeoGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool GeoGraph::is_subgraph_of(const GeoGraph& other) const {
    return std::includes(other.edges().begin(), other.edges().end(), edges_.begin(),
                         edges_.end());
}

}  // namespace normalis
