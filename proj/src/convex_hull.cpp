#include "normalis/convex_hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace normalis {

namespace {

struct Tri {
    std::array<int, 3> v;
    Vec3 normal;   // unit, outward
    double offset;
    bool alive = true;
};

Vec3 tri_normal(const Vec3& a, const Vec3& b, const Vec3& c) {
    return (b - a).cross(c - a);
}

struct TriMesh {
    std::vector<Tri> tris;

    void add(const std::vector<Vec3>& pts, int a, int b, int c) {
        Tri t;
        t.v = {a, b, c};
        const Vec3 n = tri_normal(pts[a], pts[b], pts[c]);
        const double len = n.norm();
        t.normal = n / len;
        t.offset = t.normal.dot(pts[a]);
        tris.push_back(t);
    }
};

/// Greedily pick four points spanning a solid tetrahedron.
std::array<int, 4> initial_simplex(const std::vector<Vec3>& pts, double eps) {
    const int n = static_cast<int>(pts.size());
    int i0 = 0, i1 = 0;
    double best = -1.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double d = (pts[a] - pts[b]).squaredNorm();
            if (d > best) {
                best = d;
                i0 = a;
                i1 = b;
            }
        }
    if (best <= eps * eps) throw Error(ErrorCode::DegenerateHull, "all points coincide");
    const Vec3 dir = pts[i1] - pts[i0];
    int i2 = -1;
    best = -1.0;
    for (int a = 0; a < n; ++a) {
        const double d = dir.cross(pts[a] - pts[i0]).squaredNorm();
        if (d > best) {
            best = d;
            i2 = a;
        }
    }
    if (best <= eps * eps * dir.squaredNorm())
        throw Error(ErrorCode::DegenerateHull, "all points collinear");
    const Vec3 nrm = tri_normal(pts[i0], pts[i1], pts[i2]);
    int i3 = -1;
    best = -1.0;
    for (int a = 0; a < n; ++a) {
        const double d = std::abs(nrm.dot(pts[a] - pts[i0]));
        if (d > best) {
            best = d;
            i3 = a;
        }
    }
    if (best <= eps * nrm.norm())
        throw Error(ErrorCode::DegenerateHull, "all points coplanar");
    return {i0, i1, i2, i3};
}

/// Chain directed boundary edges into a single cycle.
std::vector<int> chain_cycle(const std::vector<std::pair<int, int>>& arcs) {
    std::map<int, int> next;
    for (const auto& [u, v] : arcs) {
        if (next.count(u)) throw Error(ErrorCode::DegenerateHull, "non-manifold facet boundary");
        next[u] = v;
    }
    std::vector<int> cycle;
    cycle.reserve(arcs.size());
    int start = arcs.front().first;
    int cur = start;
    do {
        cycle.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end())
            throw Error(ErrorCode::DegenerateHull, "open facet boundary");
        cur = it->second;
    } while (cur != start && cycle.size() <= arcs.size());
    if (cycle.size() != arcs.size())
        throw Error(ErrorCode::DegenerateHull, "facet boundary is not a single cycle");
    return cycle;
}

}  // namespace


Hull3 convex_hull_3d(const std::vector<Vec3>& pts, const Tolerance& tol) {
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw Error(ErrorCode::DegenerateHull, "need at least 4 points");
    double scale = 0.0;
    for (const Vec3& p : pts) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
    scale = std::max(scale, 1.0);
    const double eps_vis = tol.boundary_eps * scale;
    const double eps_merge = tol.concyclic_eps * scale;

    const std::array<int, 4> s = initial_simplex(pts, eps_vis);
    TriMesh mesh;
    {
        const Vec3 centroid = (pts[s[0]] + pts[s[1]] + pts[s[2]] + pts[s[3]]) / 4.0;
        const std::array<std::array<int, 3>, 4> faces = {{{s[0], s[1], s[2]},
                                                          {s[0], s[1], s[3]},
                                                          {s[0], s[2], s[3]},
                                                          {s[1], s[2], s[3]}}};
        for (const auto& f : faces) {
            const Vec3 nrm = tri_normal(pts[f[0]], pts[f[1]], pts[f[2]]);
            if (nrm.dot(centroid - pts[f[0]]) < 0.0)
                mesh.add(pts, f[0], f[1], f[2]);
            else
                mesh.add(pts, f[0], f[2], f[1]);
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int idx : order) {
        if (idx == s[0] || idx == s[1] || idx == s[2] || idx == s[3]) continue;
        const Vec3& p = pts[idx];
        std::vector<int> visible;
        for (std::size_t f = 0; f < mesh.tris.size(); ++f) {
            const Tri& t = mesh.tris[f];
            if (t.alive && t.normal.dot(p) - t.offset > eps_vis)
                visible.push_back(static_cast<int>(f));
        }
        if (visible.empty()) continue;  // inside or on the current hull
        std::set<std::pair<int, int>> visible_dir_edges;
        for (int f : visible) {
            const Tri& t = mesh.tris[f];
            for (int k = 0; k < 3; ++k)
                visible_dir_edges.insert({t.v[k], t.v[(k + 1) % 3]});
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& e : visible_dir_edges)
            if (!visible_dir_edges.count({e.second, e.first})) horizon.push_back(e);
        for (int f : visible) mesh.tris[f].alive = false;
        for (const auto& [u, v] : horizon) mesh.add(pts, u, v, idx);
    }

    // Merge coplanar neighbouring triangles into polygonal facets.
    std::vector<int> live;
    for (std::size_t f = 0; f < mesh.tris.size(); ++f)
        if (mesh.tris[f].alive) live.push_back(static_cast<int>(f));
    std::map<std::pair<int, int>, int> dir_edge_owner;
    for (int f : live) {
        const Tri& t = mesh.tris[f];
        for (int k = 0; k < 3; ++k) dir_edge_owner[{t.v[k], t.v[(k + 1) % 3]}] = f;
    }
    std::map<int, int> group_of;
    int group_count = 0;
    for (int f : live) {
        if (group_of.count(f)) continue;
        const int g = group_count++;
        std::vector<int> stack{f};
        group_of[f] = g;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const Tri& t = mesh.tris[cur];
            for (int k = 0; k < 3; ++k) {
                auto it = dir_edge_owner.find({t.v[(k + 1) % 3], t.v[k]});
                if (it == dir_edge_owner.end())
                    throw Error(ErrorCode::DegenerateHull, "open triangle mesh");
                const int nb = it->second;
                if (group_of.count(nb)) continue;
                const Tri& u = mesh.tris[nb];
                const bool coplanar = t.normal.dot(u.normal) > 0.0 &&
                                      std::abs(t.offset - u.offset) <= eps_merge &&
                                      (t.normal - u.normal).norm() <= tol.concyclic_eps * 8.0;
                if (coplanar) {
                    group_of[nb] = g;
                    stack.push_back(nb);
                }
            }
        }
    }

    Hull3 hull;
    hull.faces.resize(group_count);
    std::vector<std::vector<std::pair<int, int>>> boundaries(group_count);
    for (int f : live) {
        const int g = group_of[f];
        const Tri& t = mesh.tris[f];
        for (int k = 0; k < 3; ++k) {
            const std::pair<int, int> e{t.v[k], t.v[(k + 1) % 3]};
            const int nb = dir_edge_owner.at({e.second, e.first});
            if (group_of[nb] != g) boundaries[g].push_back(e);
        }
        hull.faces[g].normal += t.normal;
    }
    std::set<int> vset;
    std::set<std::pair<int, int>> eset;
    for (int g = 0; g < group_count; ++g) {
        HullFace& face = hull.faces[g];
        face.vertices = chain_cycle(boundaries[g]);
        face.normal.normalize();
        double off = 0.0;
        for (int v : face.vertices) off += face.normal.dot(pts[v]);
        face.offset = off / static_cast<double>(face.vertices.size());
        for (std::size_t k = 0; k < face.vertices.size(); ++k) {
            const int a = face.vertices[k];
            const int b = face.vertices[(k + 1) % face.vertices.size()];
            vset.insert(a);
            eset.insert({std::min(a, b), std::max(a, b)});
        }
    }
    hull.vertices.assign(vset.begin(), vset.end());
    hull.edges.assign(eset.begin(), eset.end());
    return hull;
}

}  // namespace normalis
