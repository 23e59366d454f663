#include "normalis/gabriel.hpp"

#include "normalis/predicates.hpp"

namespace normalis {

namespace {

GeoGraph gabriel_graph(const PointSet& V, bool strict) {
    if (V.space() != Space::Sphere)
        throw Error(ErrorCode::WrongSpace, "Gabriel graphs need sphere points");
    if (V.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");
    const double eps = V.tol().boundary_eps;
    GeoGraph G(V.size(), Space::Sphere);
    for (int a = 0; a < V.size(); ++a)
        for (int b = a + 1; b < V.size(); ++b) {
            if ((V[a] + V[b]).norm() <= eps) continue;  // antipodal pairs are never joined
            bool ok = true;
            for (int x = 0; x < V.size() && ok; ++x) {
                if (x == a || x == b) continue;
                const CapRegion r = minor_cap_classify(V[a], V[b], V[x], V.tol());
                if (r == CapRegion::InsideOpen) ok = false;
                if (strict && r == CapRegion::OnBoundary) ok = false;
            }
            if (ok) G.add_edge(a, b);
        }
    return G;
}

}  // namespace

GeoGraph weak_gabriel(const PointSet& V) { return gabriel_graph(V, false); }

GeoGraph strict_gabriel(const PointSet& V) { return gabriel_graph(V, true); }

}  // namespace normalis
