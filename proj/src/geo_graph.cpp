#include "normalis/geo_graph.hpp"

#include <numeric>

namespace normalis {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int GeoGraph::component_count() const {
    UnionFind uf(n_);
    for (const Edge& e : edges_) uf.unite(e.first, e.second);
    int c = 0;
    for (int v = 0; v < n_; ++v) c += (uf.find(v) == v);
    return c;
}

int GeoGraph::edge_component_count() const {
    UnionFind uf(n_);
    std::vector<bool> touched(n_, false);
    for (const Edge& e : edges_) {
        uf.unite(e.first, e.second);
        touched[e.first] = touched[e.second] = true;
    }
    int c = 0;
    for (int v = 0; v < n_; ++v) c += (touched[v] && uf.find(v) == v);
    return c;
}

}  // namespace normalis
