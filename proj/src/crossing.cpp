#include "normalis/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "normalis/predicates.hpp"

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

std::string edge_str(const Edge& e) {
    std::ostringstream os;
    os << "{" << e.first << "," << e.second << "}";
    return os.str();
}

bool share_endpoint(const Edge& e, const Edge& f) {
    return e.first == f.first || e.first == f.second || e.second == f.first ||
           e.second == f.second;
}

/// Order the endpoints of a class of concurrent arcs angularly around the
/// shared midpoint, counterclockwise as seen from outside the sphere.
std::vector<int> polygon_cycle(const PointSet& V, const std::vector<Edge>& arcs,
                               const Vec3& mid) {
    std::set<int> vs;
    for (const Edge& e : arcs) {
        vs.insert(e.first);
        vs.insert(e.second);
    }
    Vec3 e1 = mid.unitOrthogonal();
    Vec3 e2 = mid.cross(e1);
    std::vector<std::pair<double, int>> order;
    for (int v : vs) {
        const Vec3 t = V[v] - V[v].dot(mid) * mid;
        order.emplace_back(std::atan2(t.dot(e2), t.dot(e1)), v);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> cycle;
    cycle.reserve(order.size());
    for (const auto& [angle, v] : order) cycle.push_back(v);
    return cycle;
}

/// Strict containment of x in the convex spherical polygon (CCW cycle).
bool inside_spherical_polygon(const PointSet& V, const std::vector<int>& cycle,
                              const Vec3& x, double eps) {
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Vec3& a = V[cycle[i]];
        const Vec3& b = V[cycle[(i + 1) % k]];
        const Vec3 n = a.cross(b);
        if (n.dot(x) <= eps * n.norm()) return false;
    }
    return true;
}

}  // namespace

CrossingReport crossing_classes(const GeoGraph& G, const PointSet& V) {
    const std::vector<Edge>& E = G.edges();
    const int m = static_cast<int>(E.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (share_endpoint(E[i], E[j])) continue;
            if (arc_cross(V[E[i].first], V[E[i].second], V[E[j].first], V[E[j].second],
                          V.tol()))
                uf.unite(i, j);
        }

    CrossingReport rep;
    std::map<int, int> root_to_class;
    for (int i = 0; i < m; ++i) {
        const int r = uf.find(i);
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            root_to_class[r] = static_cast<int>(rep.classes.size());
            rep.classes.push_back({E[i]});
        } else {
            rep.classes[it->second].push_back(E[i]);
        }
    }
    rep.polygons.resize(rep.classes.size());

    const double ceps = V.tol().concyclic_eps;
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        const std::vector<Edge>& arcs = rep.classes[c];
        if (arcs.size() < 2) continue;
        const Vec3 mid = arc_midpoint(V[arcs[0].first], V[arcs[0].second]);
        const double len = arc_length(V[arcs[0].first], V[arcs[0].second]);
        for (const Edge& e : arcs) {
            const Vec3 m2 = arc_midpoint(V[e.first], V[e.second]);
            const double l2 = arc_length(V[e.first], V[e.second]);
            if ((m2 - mid).norm() > ceps || std::abs(l2 - len) > ceps) {
                std::ostringstream os;
                os << "class " << c << ": arc " << edge_str(e)
                   << " disagrees in midpoint or length with " << edge_str(arcs[0]);
                throw Error(ErrorCode::NotAnEquivalence, os.str());
            }
        }
        rep.polygons[c] = polygon_cycle(V, arcs, mid);
        ++rep.g_census[static_cast<int>(rep.polygons[c].size())];
    }

    // Two crossing polygons may only meet in a single vertex or a common edge.
    const double eps = V.tol().boundary_eps;
    for (std::size_t c1 = 0; c1 < rep.classes.size(); ++c1) {
        if (rep.polygons[c1].empty()) continue;
        for (std::size_t c2 = c1 + 1; c2 < rep.classes.size(); ++c2) {
            if (rep.polygons[c2].empty()) continue;
            const std::vector<int>&P1 = rep.polygons[c1], &P2 = rep.polygons[c2];
            std::vector<int> shared;
            for (int v : P1)
                if (std::find(P2.begin(), P2.end(), v) != P2.end()) shared.push_back(v);
            bool ok = true;
            if (shared.size() > 2) ok = false;
            if (shared.size() == 2) {
                auto adjacent = [](const std::vector<int>& P, int a, int b) {
                    const std::size_t k = P.size();
                    for (std::size_t i = 0; i < k; ++i)
                        if ((P[i] == a && P[(i + 1) % k] == b) ||
                            (P[i] == b && P[(i + 1) % k] == a))
                            return true;
                    return false;
                };
                ok = adjacent(P1, shared[0], shared[1]) && adjacent(P2, shared[0], shared[1]);
            }
            if (ok) {
                // Boundary arcs of different polygons must not cross, and no
                // vertex of one polygon may lie strictly inside the other.
                auto boundary = [&](const std::vector<int>& P, std::vector<Edge>& out) {
                    for (std::size_t i = 0; i < P.size(); ++i)
                        out.push_back(make_edge(P[i], P[(i + 1) % P.size()]));
                };
                std::vector<Edge> B1, B2;
                boundary(P1, B1);
                boundary(P2, B2);
                for (const Edge& e : B1)
                    for (const Edge& f : B2) {
                        if (share_endpoint(e, f)) continue;
                        if (arc_cross(V[e.first], V[e.second], V[f.first], V[f.second],
                                      V.tol()))
                            ok = false;
                    }
                for (int v : P2)
                    if (inside_spherical_polygon(V, P1, V[v], eps)) ok = false;
                for (int v : P1)
                    if (inside_spherical_polygon(V, P2, V[v], eps)) ok = false;
            }
            if (!ok) {
                std::ostringstream os;
                os << "crossing polygons " << c1 << " and " << c2
                   << " intersect in more than a vertex or an edge";
                rep.claim_violations.push_back(os.str());
            }
        }
    }
    return rep;
}

GeoGraph reduce_to_gprime(const GeoGraph& G, const CrossingReport& report,
                          const PointSet& V) {
    GeoGraph Gp(G.vertex_count(), G.space());
    std::set<Edge> removed;
    for (std::size_t c = 0; c < report.classes.size(); ++c)
        if (report.classes[c].size() >= 2)
            removed.insert(report.classes[c].begin(), report.classes[c].end());
    for (const Edge& e : G.edges())
        if (!removed.count(e)) Gp.add_edge(e.first, e.second);
    for (const std::vector<int>& P : report.polygons)
        for (std::size_t i = 0; i < P.size(); ++i)
            Gp.add_edge(P[i], P[(i + 1) % P.size()]);

    // Post-verification: embedded drawing, no vertex interior to an arc.
    const std::vector<Edge>& E = Gp.edges();
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            if (share_endpoint(E[i], E[j])) continue;
            if (arc_cross(V[E[i].first], V[E[i].second], V[E[j].first], V[E[j].second],
                          V.tol()))
                throw Error(ErrorCode::ReductionInvariantViolated,
                            "G' arcs " + edge_str(E[i]) + " and " + edge_str(E[j]) +
                                " cross");
        }
    const double eps = V.tol().boundary_eps;
    for (const Edge& e : E) {
        const Vec3& a = V[e.first];
        const Vec3& b = V[e.second];
        const Vec3 n = a.cross(b);
        for (int x = 0; x < V.size(); ++x) {
            if (x == e.first || x == e.second) continue;
            if (std::abs(n.dot(V[x])) > eps * n.norm()) continue;
            if (detail::inside_minor_arc(a, b, n, V[x], eps))
                throw Error(ErrorCode::ReductionInvariantViolated,
                            "vertex " + std::to_string(x) + " interior to G' arc " +
                                edge_str(e));
        }
    }
    return Gp;
}

}  // namespace normalis
