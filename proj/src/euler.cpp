#include "normalis/euler.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace normalis {

namespace {

/// CCW cyclic order of the neighbours of v, by tangent direction of the
/// outgoing arcs, as seen from outside the sphere.
std::vector<int> rotation_at(const PointSet& V, int v, const std::vector<int>& nbs) {
    const Vec3& p = V[v];
    const Vec3 e1 = p.unitOrthogonal();
    const Vec3 e2 = p.cross(e1);
    std::vector<std::pair<double, int>> order;
    order.reserve(nbs.size());
    for (int u : nbs) {
        const Vec3 t = V[u] - V[u].dot(p) * p;
        if (t.norm() <= 1e-14)
            throw Error(ErrorCode::EmbeddingError,
                        "arc tangent undefined at vertex " + std::to_string(v));
        order.emplace_back(std::atan2(t.dot(e2), t.dot(e1)), u);
    }
    std::sort(order.begin(), order.end());
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i].first - order[i - 1].first <= 1e-14)
            throw Error(ErrorCode::EmbeddingError,
                        "coincident arc directions at vertex " + std::to_string(v));
    std::vector<int> out;
    out.reserve(order.size());
    for (const auto& [angle, u] : order) out.push_back(u);
    return out;
}

}  // namespace

EulerAudit euler_audit(const GeoGraph& Gp, const PointSet& V, const CrossingReport& report) {
    if (V.space() != Space::Sphere)
        throw Error(ErrorCode::WrongSpace, "euler_audit needs sphere points");
    EulerAudit audit;
    audit.edge_count = Gp.edge_count();
    audit.component_count = Gp.component_count();
    audit.edge_component_count = Gp.edge_component_count();

    // Rotation system: successor of u in the CCW order at v.
    std::map<int, std::vector<int>> rot;
    for (int v = 0; v < V.size(); ++v) {
        const std::vector<int> nbs = Gp.neighbors(v);
        if (!nbs.empty()) rot[v] = rotation_at(V, v, nbs);
    }
    auto next_around = [&](int v, int u) {
        const std::vector<int>& order = rot.at(v);
        const auto it = std::find(order.begin(), order.end(), u);
        const std::size_t i = static_cast<std::size_t>(it - order.begin());
        return order[(i + 1) % order.size()];
    };

    std::set<std::pair<int, int>> pending;
    for (const Edge& e : Gp.edges()) {
        pending.insert({e.first, e.second});
        pending.insert({e.second, e.first});
    }
    while (!pending.empty()) {
        const auto start = *pending.begin();
        auto cur = start;
        int size = 0;
        do {
            pending.erase(cur);
            ++size;
            cur = {cur.second, next_around(cur.second, cur.first)};
        } while (cur != start && size <= 4 * Gp.edge_count());
        if (cur != start)
            throw Error(ErrorCode::EmbeddingError, "face walk did not close");
        ++audit.f_census[size];
        ++audit.face_count;
    }

    long long weighted = 0, faces = 0;
    for (const auto& [size, count] : audit.f_census) {
        weighted += static_cast<long long>(size) * count;
        faces += count;
    }
    audit.handshake_ok = weighted == 2LL * audit.edge_count;

    const int isolated = audit.component_count - audit.edge_component_count;
    const long long traced_identity =
        static_cast<long long>(V.size()) - audit.edge_count + faces;
    if (audit.edge_count > 0 && traced_identity != 2LL * audit.edge_component_count + isolated)
        throw Error(ErrorCode::EmbeddingError,
                    "face walk census violates the per-component Euler identity "
                    "(drawing is not embedded?)");
    if (audit.edge_component_count <= 1) {
        audit.euler_ok = traced_identity == 1LL + audit.component_count;
    } else {
        audit.euler_ok = true;
        audit.notes.push_back("multiple edge components: faces counted per component");
    }

    long long reducible = 0;
    for (const auto& [size, count] : audit.f_census)
        if (size > 3) reducible += static_cast<long long>(size - 3) * count;
    audit.bound_slack = 3LL * V.size() - 6 - reducible - audit.edge_count;

    audit.g_dominated_slack = 0;
    bool first = true;
    for (const auto& [size, count] : report.g_census) {
        auto it = audit.f_census.find(size);
        const long long f = it == audit.f_census.end() ? 0 : it->second;
        if (first || f - count < audit.g_dominated_slack) audit.g_dominated_slack = f - count;
        first = false;
    }
    const auto g4 = report.g_census.find(4);
    audit.g4_slack4 = 3LL * V.size() - 4LL * (g4 == report.g_census.end() ? 0 : g4->second);
    return audit;
}

}  // namespace normalis
