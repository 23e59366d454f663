#include "normalis/lift.hpp"

#include <algorithm>
#include <sstream>

namespace normalis {

LiftResult sphere_double_normals(const PointSet& V, NormalMode mode) {
    if (V.space() != Space::Sphere)
        throw Error(ErrorCode::WrongSpace, "antipodal lift needs sphere points");
    if (V.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");
    const int n = V.size();

    GeoGraph direct = double_normal_graph(V, mode);

    // Index map for V united with V': point i' is either an existing point
    // of V or a fresh vertex appended after the n originals.
    std::vector<int> antipode(n);
    std::vector<Vec3> lifted_pts = V.points();
    for (int i = 0; i < n; ++i) {
        if (auto j = V.antipode_index(i)) {
            antipode[i] = *j;
        } else {
            antipode[i] = static_cast<int>(lifted_pts.size());
            lifted_pts.push_back(-V[i]);
        }
    }
    PointSet lifted(Space::Sphere, std::move(lifted_pts), V.tol());

    GeoGraph e1(lifted.size(), Space::Sphere);
    for (const Edge& e : direct.edges()) {
        const int x = e.first, y = e.second;
        if (antipode[y] == x) continue;  // antipodal pairs are counted by |V cap V'|
        e1.add_edge(x, antipode[y]);
        e1.add_edge(antipode[x], y);
    }

    std::vector<int> self_antipodal;
    std::vector<bool> in_both(lifted.size(), false);
    for (int i = 0; i < n; ++i)
        if (antipode[i] < n) {
            in_both[i] = true;
            self_antipodal.push_back(i);
        }
    GeoGraph e2(lifted.size(), Space::Sphere);
    for (const Edge& e : e1.edges())
        if (in_both[e.first] && in_both[e.second]) e2.add_edge(e.first, e.second);

    const long long twice =
        e1.edge_count() + e2.edge_count() + static_cast<long long>(self_antipodal.size());
    if (twice != 2LL * direct.edge_count()) {
        std::ostringstream os;
        os << "direct N = " << direct.edge_count() << " but |E1| + |E2| + |V cap V'| = "
           << e1.edge_count() << " + " << e2.edge_count() << " + " << self_antipodal.size()
           << " = " << twice;
        throw Error(ErrorCode::LiftMismatch, os.str());
    }

    LiftResult result(std::move(direct), std::move(lifted), std::move(e1), std::move(e2));
    result.count = result.graph.edge_count();
    result.self_antipodal = std::move(self_antipodal);
    return result;
}

}  // namespace normalis
