#include "normalis/double_normal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "normalis/convex_hull.hpp"
#include "normalis/planar.hpp"
#include "normalis/predicates.hpp"

namespace normalis {

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream os;
    os << "{" << e.first << "," << e.second << "}";
    return os.str();
}

bool pair_is_double_normal(const PointSet& V, int p, int q, NormalMode mode) {
    for (int x = 0; x < V.size(); ++x) {
        if (x == p || x == q) continue;
        const SlabRegion r = slab_classify(V[p], V[q], V[x], V.tol());
        if (r == SlabRegion::Outside) return false;
        if (mode == NormalMode::Strict && r == SlabRegion::OnBoundary) return false;
    }
    return true;
}

/// Candidate endpoints when the hull accelerator is on: only vertices of
/// conv V can carry a double-normal edge.
std::vector<int> hull_candidates(const PointSet& V) {
    const double eps = V.tol().boundary_eps;
    if (V.space() == Space::Plane) {
        std::vector<Vec2> pts;
        pts.reserve(V.size());
        for (int i = 0; i < V.size(); ++i) pts.push_back(V.xy(i));
        return convex_hull_2d(pts, eps);
    }
    const Hull3 hull = convex_hull_3d(V.points(), V.tol());
    return std::vector<int>(hull.vertices.begin(), hull.vertices.end());
}

}  // namespace

GeoGraph double_normal_graph(const PointSet& V, NormalMode mode, bool hull_accelerator) {
    if (V.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");
    GeoGraph G(V.size(), V.space());
    std::vector<int> candidates(V.size());
    for (int i = 0; i < V.size(); ++i) candidates[i] = i;
    if (hull_accelerator && V.size() >= 4) candidates = hull_candidates(V);
    for (std::size_t a = 0; a < candidates.size(); ++a)
        for (std::size_t b = a + 1; b < candidates.size(); ++b)
            if (pair_is_double_normal(V, candidates[a], candidates[b], mode))
                G.add_edge(candidates[a], candidates[b]);
    return G;
}

GeoGraph diameter_graph(const PointSet& V) {
    if (V.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");
    double max_d2 = 0.0;
    for (int i = 0; i < V.size(); ++i)
        for (int j = i + 1; j < V.size(); ++j)
            max_d2 = std::max(max_d2, (V[i] - V[j]).squaredNorm());
    GeoGraph G(V.size(), V.space());
    const double band = V.tol().boundary_eps * max_d2;
    for (int i = 0; i < V.size(); ++i)
        for (int j = i + 1; j < V.size(); ++j)
            if ((V[i] - V[j]).squaredNorm() >= max_d2 - band) G.add_edge(i, j);
    return G;
}

namespace {

bool collinear4(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double eps) {
    const Vec2 dir = b - a;
    const double s = dir.norm();
    auto off = [&](const Vec2& x) { return std::abs(cross2(dir, x - a)) / (s * s); };
    return off(c) <= eps && off(d) <= eps;
}

bool segments_disjoint(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                       double eps) {
    if (segments_share_interior(a, b, c, d, eps)) return false;
    // Endpoint contacts also make the closed segments non-disjoint.
    for (const Vec2& x : {c, d})
        if (on_segment(a, b, x, eps)) return false;
    for (const Vec2& x : {a, b})
        if (on_segment(c, d, x, eps)) return false;
    return true;
}

/// The unordered pairs {a,b},{c,d} are opposite edges of a rectangle:
/// some labeling has b-a = c-d with the connecting side perpendicular.
bool opposite_rectangle_edges(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d,
                              double eps) {
    const double scale = std::max({(b - a).norm(), (d - c).norm(), 1e-300});
    auto is_rect = [&](const Vec2& u, const Vec2& v) {
        // Quadrilateral a -> b -> u -> v with ab parallel-equal to vu.
        const Vec2 side = b - a;
        const Vec2 side2 = u - v;
        if ((side - side2).norm() > eps * scale) return false;
        return std::abs((v - a).dot(side)) <= eps * scale * scale;
    };
    return is_rect(c, d) || is_rect(d, c);
}

}  // namespace

StructureReport audit_basic_claims(const PointSet& V, const GeoGraph& G) {
    if (V.space() != Space::Plane)
        throw Error(ErrorCode::WrongSpace, "basic-claims audit is planar only");
    const double eps = V.tol().boundary_eps;
    const double ceps = V.tol().concyclic_eps;
    StructureReport rep;
    rep.rightmost_edge.assign(V.size(), std::nullopt);

    std::vector<Vec2> pts;
    pts.reserve(V.size());
    for (int i = 0; i < V.size(); ++i) pts.push_back(V.xy(i));
    const std::vector<Edge>& E = G.edges();

    ClaimResult no_collinear{"no_two_edges_collinear"};
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j)
            if (collinear4(pts[E[i].first], pts[E[i].second], pts[E[j].first],
                           pts[E[j].second], ceps)) {
                no_collinear.pass = false;
                no_collinear.witnesses.push_back(edge_str(E[i]) + " and " + edge_str(E[j]));
            }
    rep.claim_results.push_back(std::move(no_collinear));

    ClaimResult interior_degree{"vertex_in_edge_interior_has_degree_le_1"};
    for (const Edge& e : E)
        for (int x = 0; x < V.size(); ++x) {
            if (x == e.first || x == e.second) continue;
            if (!in_segment_interior(pts[e.first], pts[e.second], pts[x], eps)) continue;
            const std::vector<int> nb = G.neighbors(x);
            bool ok = nb.size() <= 1;
            if (ok && nb.size() == 1) {
                const Vec2 ev = pts[e.second] - pts[e.first];
                const Vec2 xv = pts[nb[0]] - pts[x];
                ok = std::abs(ev.dot(xv)) <= ceps * ev.norm() * xv.norm();
            }
            if (!ok) {
                interior_degree.pass = false;
                std::ostringstream os;
                os << "vertex " << x << " inside " << edge_str(e) << " with degree "
                   << nb.size();
                interior_degree.witnesses.push_back(os.str());
            }
        }
    rep.claim_results.push_back(std::move(interior_degree));

    ClaimResult disjoint_rect{"disjoint_edges_form_rectangle"};
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            const Vec2 &a = pts[E[i].first], &b = pts[E[i].second];
            const Vec2 &c = pts[E[j].first], &d = pts[E[j].second];
            if (!segments_disjoint(a, b, c, d, eps)) continue;
            if (!opposite_rectangle_edges(a, b, c, d, ceps)) {
                disjoint_rect.pass = false;
                disjoint_rect.witnesses.push_back(edge_str(E[i]) + " vs " + edge_str(E[j]));
            }
        }
    rep.claim_results.push_back(std::move(disjoint_rect));

    ClaimResult hull_of_neighbors{"no_vertex_in_hull_of_neighbours"};
    for (int v = 0; v < V.size(); ++v) {
        const std::vector<int> nb = G.neighbors(v);
        if (nb.empty()) continue;
        std::vector<Vec2> npts;
        npts.reserve(nb.size());
        for (int u : nb) npts.push_back(pts[u]);
        if (in_convex_hull_2d(npts, pts[v], eps)) {
            hull_of_neighbors.pass = false;
            hull_of_neighbors.witnesses.push_back("vertex " + std::to_string(v));
        }
    }
    rep.claim_results.push_back(std::move(hull_of_neighbors));

    ClaimResult on_hull{"non_isolated_vertices_on_hull"};
    for (int v = 0; v < V.size(); ++v) {
        if (G.isolated(v)) continue;
        std::vector<Vec2> others;
        others.reserve(V.size() - 1);
        for (int u = 0; u < V.size(); ++u)
            if (u != v) others.push_back(pts[u]);
        if (in_convex_hull_2d(others, pts[v], eps)) {
            on_hull.pass = false;
            on_hull.witnesses.push_back("vertex " + std::to_string(v));
        }
    }
    rep.claim_results.push_back(std::move(on_hull));

    return rep;
}

namespace {

/// Rightmost edge at x: the edge xy whose right open half-plane contains
/// no neighbour of x. Existence follows from the no-vertex-in-hull-of-
/// neighbours property, which keeps the edge fan at x inside an open
/// half-plane. Collinear ties go to the farther neighbour and are
/// reported as a diagnostic.
struct RightmostPick {
    std::optional<int> target;
    bool tie = false;
    int count = 0;
};

RightmostPick rightmost_at(const std::vector<Vec2>& pts, const std::vector<int>& nb, int x,
                           double eps) {
    RightmostPick pick;
    for (int y : nb) {
        const Vec2 dir = pts[y] - pts[x];
        bool clear = true;
        for (int z : nb) {
            if (z == y) continue;
            const double v = cross2(dir, pts[z] - pts[x]);
            const double band = eps * segment_scale(pts[x], pts[y]) *
                                segment_scale(pts[x], pts[z]);
            if (v < -band) {
                clear = false;
                break;
            }
        }
        if (!clear) continue;
        ++pick.count;
        if (!pick.target) {
            pick.target = y;
            continue;
        }
        // Two rightmost candidates must be collinear with x; keep the farther.
        pick.tie = true;
        const double cur = (pts[*pick.target] - pts[x]).norm();
        if ((pts[y] - pts[x]).norm() > cur) pick.target = y;
    }
    return pick;
}

}  // namespace

StructureReport red_blue_decomposition(const PointSet& V, GeoGraph& G) {
    if (V.space() != Space::Plane)
        throw Error(ErrorCode::WrongSpace, "red/blue decomposition is planar only");
    const double eps = V.tol().boundary_eps;
    const int n = V.size();
    StructureReport rep;
    rep.rightmost_edge.assign(n, std::nullopt);

    std::vector<Vec2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back(V.xy(i));

    ClaimResult rightmost_unique{"rightmost_edge_exists_and_unique"};
    std::set<Edge> red;
    for (int x = 0; x < n; ++x) {
        const std::vector<int> nb = G.neighbors(x);
        if (nb.empty()) continue;
        const RightmostPick pick = rightmost_at(pts, nb, x, eps);
        if (!pick.target) {
            rightmost_unique.pass = false;
            rightmost_unique.witnesses.push_back("no rightmost edge at vertex " +
                                                 std::to_string(x));
            continue;
        }
        if (pick.tie || pick.count > 1) {
            rightmost_unique.pass = false;
            rightmost_unique.witnesses.push_back("rightmost tie at vertex " +
                                                 std::to_string(x));
        }
        rep.rightmost_edge[x] = *pick.target;
        red.insert(make_edge(x, *pick.target));
    }
    rep.claim_results.push_back(std::move(rightmost_unique));

    G.colors.clear();
    for (const Edge& e : G.edges()) {
        const bool is_red = red.count(e) > 0;
        G.colors[e] = is_red ? EdgeColor::Red : EdgeColor::Blue;
        (is_red ? rep.red_edges : rep.blue_edges).push_back(e);
    }

    auto cross_open = [&](const Edge& e, const Edge& f) {
        return segments_share_interior(pts[e.first], pts[e.second], pts[f.first],
                                       pts[f.second], eps);
    };
    auto share_endpoint = [](const Edge& e, const Edge& f) {
        return e.first == f.first || e.first == f.second || e.second == f.first ||
               e.second == f.second;
    };

    ClaimResult matching{"blue_edges_form_matching"};
    ClaimResult pairwise{"blue_edges_pairwise_cross"};
    for (std::size_t i = 0; i < rep.blue_edges.size(); ++i)
        for (std::size_t j = i + 1; j < rep.blue_edges.size(); ++j) {
            const Edge &e = rep.blue_edges[i], &f = rep.blue_edges[j];
            if (share_endpoint(e, f)) {
                matching.pass = false;
                matching.witnesses.push_back(edge_str(e) + " and " + edge_str(f));
            } else if (!cross_open(e, f)) {
                pairwise.pass = false;
                pairwise.witnesses.push_back(edge_str(e) + " and " + edge_str(f));
            }
        }
    rep.claim_results.push_back(std::move(matching));
    rep.claim_results.push_back(std::move(pairwise));

    ClaimResult red_blue{"blue_red_disjoint_pairs_cross"};
    for (const Edge& b : rep.blue_edges)
        for (const Edge& r : rep.red_edges) {
            if (share_endpoint(b, r)) continue;
            if (!cross_open(b, r)) {
                red_blue.pass = false;
                red_blue.witnesses.push_back(edge_str(b) + " and " + edge_str(r));
            }
        }
    rep.claim_results.push_back(std::move(red_blue));

    ClaimResult counting{"edge_count_within_3n_over_2"};
    const int R = static_cast<int>(rep.red_edges.size());
    const int B = static_cast<int>(rep.blue_edges.size());
    if (R > n || 2 * B > n || 2 * G.edge_count() > 3 * n) {
        counting.pass = false;
        std::ostringstream os;
        os << "|R|=" << R << " |B|=" << B << " n=" << n;
        counting.witnesses.push_back(os.str());
    }
    rep.claim_results.push_back(std::move(counting));

    return rep;
}

}  // namespace normalis
