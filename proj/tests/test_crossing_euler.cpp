#include <doctest.h>

#include <random>

#include "normalis/constructions.hpp"
#include "normalis/crossing.hpp"
#include "normalis/euler.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/predicates.hpp"

using namespace normalis;

namespace {

PointSet octahedron() {
    std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                             {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    return PointSet(Space::Sphere, pts, Tolerance{});
}

PointSet random_sphere_set(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        std::vector<Vec3> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        try {
            return PointSet(Space::Sphere, std::move(pts), Tolerance{});
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST_CASE("cube crossing classes: 6 quadrilateral crossing polygons") {
    const PointSet V = cube_vertices();
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    int pairs = 0, singletons = 0;
    for (const auto& cls : rep.classes) {
        if (cls.size() == 2) ++pairs;
        if (cls.size() == 1) ++singletons;
    }
    CHECK(pairs == 6);
    CHECK(singletons == 12);
    CHECK(rep.g_census.at(4) == 6);
    CHECK(rep.claim_violations.empty());
}

TEST_CASE("octahedron crossing classes are all singletons") {
    const PointSet V = octahedron();
    const CrossingReport rep = crossing_classes(weak_gabriel(V), V);
    CHECK(rep.classes.size() == 12);
    for (const auto& cls : rep.classes) CHECK(cls.size() == 1);
    CHECK(rep.g_census.empty());
}

TEST_CASE("single-edge graph yields one singleton class") {
    std::vector<Vec3> pts = {{1, 0, 0}, {0, 1, 0}};
    const PointSet V(Space::Sphere, pts, Tolerance{});
    const CrossingReport rep = crossing_classes(weak_gabriel(V), V);
    CHECK(rep.classes.size() == 1);
    CHECK(rep.classes[0].size() == 1);
}

TEST_CASE("cube reduction recovers exactly the 12 cube edges") {
    const PointSet V = cube_vertices();
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    const GeoGraph Gp = reduce_to_gprime(G, rep, V);
    CHECK(Gp.edge_count() == 12);
    for (const Edge& e : Gp.edges())
        CHECK((V[e.first] - V[e.second]).norm() ==
              doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("reduction is the identity when nothing crosses") {
    const PointSet V = octahedron();
    const GeoGraph G = weak_gabriel(V);
    const GeoGraph Gp = reduce_to_gprime(G, crossing_classes(G, V), V);
    CHECK(Gp.edges() == G.edges());
}

TEST_CASE("layered (k=4, m=1) reduces to a cube-like Delaunay graph") {
    const PointSet V = layered_construction({4, 1, std::nullopt});
    const GeoGraph G = weak_gabriel(V);
    const GeoGraph Gp = reduce_to_gprime(G, crossing_classes(G, V), V);
    CHECK(Gp.edge_count() == 12);
    const EulerAudit audit = euler_audit(Gp, V, crossing_classes(G, V));
    CHECK(audit.f_census.at(4) == 6);
    CHECK(audit.face_count == 6);
    for (int v = 0; v < V.size(); ++v) CHECK(Gp.degree(v) == 3);
}

TEST_CASE("euler audit of the reduced cube graph") {
    const PointSet V = cube_vertices();
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    const GeoGraph Gp = reduce_to_gprime(G, rep, V);
    const EulerAudit audit = euler_audit(Gp, V, rep);
    CHECK(audit.edge_count == 12);
    CHECK(audit.f_census.at(4) == 6);
    CHECK(audit.handshake_ok);
    CHECK(audit.euler_ok);
    CHECK(audit.g4_slack4 == 0);  // g_4 = 6 = 3n/4: tight at the cube
    CHECK(audit.g_dominated_slack == 0);
    CHECK(audit.pass());
}

TEST_CASE("euler audit of the octahedron") {
    const PointSet V = octahedron();
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    const EulerAudit audit = euler_audit(G, V, rep);
    CHECK(audit.f_census.at(3) == 8);
    CHECK(audit.euler_ok);
    CHECK(audit.handshake_ok);
    CHECK(audit.pass());
}

TEST_CASE("euler audit of the layered (k=6, m=3) reduced graph") {
    const PointSet V = layered_construction({6, 3, std::nullopt});
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    const GeoGraph Gp = reduce_to_gprime(G, rep, V);
    const EulerAudit audit = euler_audit(Gp, V, rep);
    CHECK(audit.edge_count == 180);
    int faces = 0;
    for (const auto& [size, count] : audit.f_census) faces += count;
    CHECK(faces == 98);
    CHECK(84 - 180 + 98 == 2);
    CHECK(audit.euler_ok);
    CHECK(audit.pass());
}

TEST_CASE("euler audit rejects drawings with crossings") {
    // The unreduced cube Gabriel graph still has its face diagonals; its
    // rotation system describes a higher-genus surface, which the
    // per-component Euler identity catches.
    const PointSet V = cube_vertices();
    const GeoGraph G = weak_gabriel(V);
    const CrossingReport rep = crossing_classes(G, V);
    CHECK_THROWS_AS(euler_audit(G, V, rep), Error);
}

TEST_CASE("crossing arcs of unequal length are rejected as non-Gabriel") {
    // Two crossing arcs of clearly different lengths cannot belong to a
    // weak Gabriel graph; the class verification must fail loudly.
    std::vector<Vec3> pts = {
        Vec3(1, 0, 0),
        Vec3(0, 1, 0),
        Vec3(1, 1, -0.2).normalized(),
        Vec3(0.8, 0.8, 1).normalized(),
    };
    const PointSet V(Space::Sphere, pts, Tolerance{});
    GeoGraph G(4, Space::Sphere);
    G.add_edge(0, 1);
    G.add_edge(2, 3);
    REQUIRE(arc_cross(V[0], V[1], V[2], V[3], V.tol()).has_value());
    CHECK_THROWS_AS(crossing_classes(G, V), Error);
}

TEST_CASE("reduction invariants hold on random weak Gabriel graphs") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 120; ++trial) {
        const PointSet V = random_sphere_set(rng, 5 + static_cast<int>(rng() % 8));
        const GeoGraph G = weak_gabriel(V);
        const CrossingReport rep = crossing_classes(G, V);
        CHECK(rep.claim_violations.empty());
        const GeoGraph Gp = reduce_to_gprime(G, rep, V);  // throws on violation
        for (const auto& [size, count] : rep.g_census) {
            CHECK(size % 2 == 0);
            CHECK(size >= 4);
        }
        const EulerAudit audit = euler_audit(Gp, V, rep);
        CHECK(audit.handshake_ok);
        CHECK(audit.bound_slack >= 0);
    }
}
