#pragma once

#include <map>
#include <string>
#include <vector>

#include "normalis/crossing.hpp"
#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

/// Face census and Euler-formula audit of an embedded spherical graph.
/// Faces are traced as rotation-system cycles; a bridge arc is counted
/// twice by the face it borders on both sides.
struct EulerAudit {
    std::map<int, int> f_census;  // face size -> count
    int edge_count = 0;
    int face_count = 0;
    int component_count = 0;       // isolated vertices included
    int edge_component_count = 0;  // components carrying at least one edge
    bool handshake_ok = false;     // 2|E'| == sum i*f_i
    bool euler_ok = false;         // |V| - |E'| + sum f_i == 1 + c' (requires one edge component)
    long long bound_slack = 0;     // 3|V| - 6 - sum (i-3) f_i - |E'|
    long long g_dominated_slack = 0;   // min over i of f_i - g_i
    long long g4_slack4 = 0;           // 3|V| - 4*g_4 must stay nonnegative
    std::vector<std::string> notes;
    bool pass() const {
        return handshake_ok && euler_ok && bound_slack >= 0 && g_dominated_slack >= 0 &&
               g4_slack4 >= 0;
    }
};

/// Walk the faces of the embedded graph Gp (drawn with minor arcs on S^2)
/// and audit the counting identities of its census against the crossing
/// report. Throws EmbeddingError if the face walk is inconsistent.
EulerAudit euler_audit(const GeoGraph& Gp, const PointSet& V, const CrossingReport& report);

}  // namespace normalis
