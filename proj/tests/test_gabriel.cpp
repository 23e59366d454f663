#include <doctest.h>

#include <random>

#include "normalis/constructions.hpp"
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

TEST_CASE("octahedron weak Gabriel graph joins all non-antipodal pairs") {
    CHECK(weak_gabriel(octahedron()).edge_count() == 12);
    CHECK(strict_gabriel(octahedron()).edge_count() == 12);
}

TEST_CASE("cube weak Gabriel graph has 24 edges, strict only the 12 cube edges") {
    CHECK(weak_gabriel(cube_vertices()).edge_count() == 24);
    CHECK(strict_gabriel(cube_vertices()).edge_count() == 12);
}

TEST_CASE("two non-antipodal points are joined") {
    std::vector<Vec3> pts = {{1, 0, 0}, {0, 1, 0}};
    const PointSet V(Space::Sphere, pts, Tolerance{});
    CHECK(weak_gabriel(V).edge_count() == 1);
    CHECK(strict_gabriel(V).edge_count() == 1);
}

TEST_CASE("antipodal pairs are never joined") {
    std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}};
    const PointSet V(Space::Sphere, pts, Tolerance{});
    const GeoGraph G = weak_gabriel(V);
    CHECK_FALSE(G.has_edge(0, 1));
    CHECK(G.edge_count() == 2);
}

TEST_CASE("strict Gabriel is contained in weak Gabriel") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const PointSet V = random_sphere_set(rng, 2 + static_cast<int>(rng() % 12));
        CHECK(strict_gabriel(V).is_subgraph_of(weak_gabriel(V)));
    }
}

TEST_CASE("strict Gabriel drawings have no crossings") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        const PointSet V = random_sphere_set(rng, 4 + static_cast<int>(rng() % 9));
        const GeoGraph S = strict_gabriel(V);
        for (std::size_t i = 0; i < S.edges().size(); ++i)
            for (std::size_t j = i + 1; j < S.edges().size(); ++j) {
                const Edge &e = S.edges()[i], &f = S.edges()[j];
                if (e.first == f.first || e.first == f.second || e.second == f.first ||
                    e.second == f.second)
                    continue;
                CHECK_FALSE(
                    arc_cross(V[e.first], V[e.second], V[f.first], V[f.second], V.tol())
                        .has_value());
            }
    }
}

TEST_CASE("weak Gabriel edge count stays within 15n/4 - 6") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 13);
        const PointSet V = random_sphere_set(rng, n);
        CHECK(4 * weak_gabriel(V).edge_count() <= 15 * n - 24);
    }
}

TEST_CASE("rotation invariance of Gabriel edge counts") {
    std::mt19937_64 rng(61);
    const PointSet V = random_sphere_set(rng, 10);
    Eigen::Matrix3d R =
        Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
    const PointSet W = V.transformed(R);
    CHECK(weak_gabriel(V).edges() == weak_gabriel(W).edges());
    CHECK(strict_gabriel(V).edges() == strict_gabriel(W).edges());
}
