#include <doctest.h>

#include <random>

#include "normalis/constructions.hpp"
#include "normalis/double_normal.hpp"
#include "normalis/verify.hpp"

using namespace normalis;

namespace {

PointSet random_plane_set(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    while (true) {
        std::vector<Vec3> pts;
        for (int i = 0; i < n; ++i) pts.emplace_back(unif(rng), unif(rng), 0.0);
        try {
            return PointSet(Space::Plane, std::move(pts), Tolerance{});
        } catch (const Error&) {
        }
    }
}

PointSet random_convex_position(std::mt19937_64& rng, int n) {
    // Distinct angles on a circle with jittered radii close to 1.
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(2.0 * M_PI * (i + 0.2 + 0.6 * unif(rng)) / n);
    std::vector<Vec3> pts;
    for (double a : angles) pts.emplace_back(std::cos(a), std::sin(a), 0.0);
    return PointSet(Space::Plane, std::move(pts), Tolerance{});
}

}  // namespace

TEST_CASE("regular octagon has 12 double-normal pairs") {
    CHECK(double_normal_graph(regular_polygon(8), NormalMode::Weak).edge_count() == 12);
}

TEST_CASE("cube as a 3-space subset joins every pair") {
    CHECK(double_normal_graph(cube_vertices(), NormalMode::Weak).edge_count() == 28);
}

TEST_CASE("equilateral triangle: all pairs strict") {
    CHECK(double_normal_graph(regular_polygon(3), NormalMode::Strict).edge_count() == 3);
}

TEST_CASE("seven-point configuration has exactly its nine intended edges") {
    const PointSet V = fig2_seven_points();
    const GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    std::vector<Edge> expected;
    for (const auto& [a, b] : fig2_expected_edges()) expected.push_back(make_edge(a, b));
    std::sort(expected.begin(), expected.end());
    CHECK(G.edges() == expected);
    CHECK(G.edge_count() == 9);
}

TEST_CASE("diameter graphs of small regular polygons") {
    CHECK(diameter_graph(regular_polygon(3)).edge_count() == 3);
    CHECK(diameter_graph(regular_polygon(4)).edge_count() == 2);
    CHECK(diameter_graph(regular_polygon(5)).edge_count() == 5);
}

TEST_CASE("too few points raise") {
    std::vector<Vec3> one = {{0, 0, 0}};
    CHECK_THROWS_AS(double_normal_graph(PointSet(Space::Plane, one, Tolerance{}),
                                        NormalMode::Weak),
                    Error);
}

TEST_CASE("strict graph is contained in the weak graph; diameters are strict") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet V = random_plane_set(rng, 3 + static_cast<int>(rng() % 10));
        const GeoGraph weak = double_normal_graph(V, NormalMode::Weak);
        const GeoGraph strict = double_normal_graph(V, NormalMode::Strict);
        const GeoGraph diam = diameter_graph(V);
        CHECK(strict.is_subgraph_of(weak));
        CHECK(diam.is_subgraph_of(strict));
    }
}

TEST_CASE("edge sets are invariant under rigid motion plus scaling") {
    std::mt19937_64 rng(29);
    const PointSet V = random_plane_set(rng, 9);
    const GeoGraph before = double_normal_graph(V, NormalMode::Weak);
    const double angle = 0.83;
    Eigen::Matrix3d R;
    R << std::cos(angle), -std::sin(angle), 0, std::sin(angle), std::cos(angle), 0, 0, 0, 1;
    const PointSet W = V.transformed(R, 3.7, Vec3(0.4, -2.0, 0.0));
    const GeoGraph after = double_normal_graph(W, NormalMode::Weak);
    CHECK(before.edges() == after.edges());
}

TEST_CASE("hull-accelerated enumeration matches the naive oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const PointSet V = random_plane_set(rng, 3 + static_cast<int>(rng() % 12));
        const GeoGraph fast = double_normal_graph(V, NormalMode::Weak, true);
        const GeoGraph plain = double_normal_graph(V, NormalMode::Weak, false);
        const GeoGraph oracle = oracle_double_normals(V, NormalMode::Weak);
        CHECK(fast.edges() == oracle.edges());
        CHECK(plain.edges() == oracle.edges());
    }
}

TEST_CASE("hull accelerator also works for 3-space input") {
    std::mt19937_64 rng(33);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 10; ++i) pts.emplace_back(gauss(rng), gauss(rng), gauss(rng));
        const PointSet V(Space::Space3, pts, Tolerance{});
        CHECK(double_normal_graph(V, NormalMode::Weak, true).edges() ==
              oracle_double_normals(V, NormalMode::Weak).edges());
    }
    CHECK(double_normal_graph(cube_vertices(), NormalMode::Weak, true).edge_count() == 28);
}

TEST_CASE("planar bounds hold on random inputs") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        const PointSet V = random_plane_set(rng, n);
        CHECK(double_normal_graph(V, NormalMode::Weak).edge_count() <= 3 * (n / 2));
        CHECK(double_normal_graph(V, NormalMode::Strict).edge_count() <= n);
    }
}

TEST_CASE("basic claims hold on the octagon and the seven-point set") {
    for (const PointSet& V : {regular_polygon(8), fig2_seven_points()}) {
        const GeoGraph G = double_normal_graph(V, NormalMode::Weak);
        const StructureReport rep = audit_basic_claims(V, G);
        for (const ClaimResult& claim : rep.claim_results) {
            INFO(claim.name);
            CHECK(claim.pass);
        }
    }
}

TEST_CASE("basic claims hold on seeded random sets") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 1000; ++trial) {
        const PointSet V = random_plane_set(rng, 3 + static_cast<int>(rng() % 8));
        const GeoGraph G = double_normal_graph(V, NormalMode::Weak);
        const StructureReport rep = audit_basic_claims(V, G);
        INFO("trial ", trial);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("audits require planar input") {
    const PointSet V = cube_vertices();
    GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    CHECK_THROWS_AS(audit_basic_claims(V, G), Error);
    CHECK_THROWS_AS(red_blue_decomposition(V, G), Error);
}

TEST_CASE("red/blue decomposition of the octagon") {
    const PointSet V = regular_polygon(8);
    GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    const StructureReport rep = red_blue_decomposition(V, G);
    CHECK(rep.red_edges.size() == 8);
    CHECK(rep.blue_edges.size() == 4);
    CHECK(rep.all_pass());
    int with_rightmost = 0;
    for (const auto& r : rep.rightmost_edge) with_rightmost += r.has_value();
    CHECK(with_rightmost == 8);
}

TEST_CASE("red/blue decomposition of the triangle has no blue edges") {
    const PointSet V = regular_polygon(3);
    GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    const StructureReport rep = red_blue_decomposition(V, G);
    CHECK(rep.blue_edges.empty());
    CHECK(rep.red_edges.size() == 3);
    CHECK(rep.all_pass());
}

TEST_CASE("red/blue claims hold for convex-position sets") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const PointSet V = random_convex_position(rng, 8);
        GeoGraph G = double_normal_graph(V, NormalMode::Weak);
        const StructureReport rep = red_blue_decomposition(V, G);
        INFO("trial ", trial);
        CHECK(rep.all_pass());
    }
}
