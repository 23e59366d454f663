#include <doctest.h>

#include <random>

#include "normalis/constructions.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/lift.hpp"

using namespace normalis;

namespace {

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

TEST_CASE("cube: N = 28 via both routes, fully self-antipodal") {
    const LiftResult r = sphere_double_normals(cube_vertices(), NormalMode::Weak);
    CHECK(r.count == 28);
    CHECK(r.self_antipodal.size() == 8);
    CHECK(r.lifted.size() == 8);  // V = V'
    CHECK(r.e1.edge_count() == 24);
    CHECK(r.e2.edge_count() == 24);
}

TEST_CASE("small rhombicuboctahedron: N = 96") {
    const LiftResult r = sphere_double_normals(rhombicuboctahedron_vertices(),
                                               NormalMode::Weak);
    CHECK(r.count == 96);
    CHECK(r.self_antipodal.size() == 24);
}

TEST_CASE("five-point configuration: 8 strict double-normal pairs") {
    const PointSet V = five_point_strict();
    const LiftResult strict = sphere_double_normals(V, NormalMode::Strict);
    CHECK(strict.count == 8);
    const LiftResult weak = sphere_double_normals(V, NormalMode::Weak);
    CHECK(weak.count >= 8);
    // All pairs except p3p4 and p3p5.
    CHECK_FALSE(strict.graph.has_edge(2, 3));
    CHECK_FALSE(strict.graph.has_edge(2, 4));
}

TEST_CASE("five-point configuration is robust to the offset choice") {
    for (double degrees : {1.0, 5.0, 9.0}) {
        const PointSet V = five_point_strict(degrees * M_PI / 180.0);
        CHECK(sphere_double_normals(V, NormalMode::Strict).count == 8);
    }
}

TEST_CASE("lift graphs live inside the Gabriel graphs of the lifted set") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        const PointSet V = random_sphere_set(rng, 2 + static_cast<int>(rng() % 11));
        const LiftResult weak = sphere_double_normals(V, NormalMode::Weak);
        CHECK(weak.e1.is_subgraph_of(weak_gabriel(weak.lifted)));
        const LiftResult strict = sphere_double_normals(V, NormalMode::Strict);
        CHECK(strict.e1.is_subgraph_of(strict_gabriel(strict.lifted)));
    }
}

TEST_CASE("lift handles sets with a partial antipodal overlap") {
    std::mt19937_64 rng(87);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Vec3> pts;
        const Vec3 x = Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized();
        pts.push_back(x);
        pts.push_back(-x);  // one antipodal pair, the rest generic
        for (int i = 0; i < 5; ++i)
            pts.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        const PointSet V(Space::Sphere, pts, Tolerance{});
        const LiftResult r = sphere_double_normals(V, NormalMode::Weak);
        CHECK(r.self_antipodal.size() == 2);
        CHECK(r.lifted.size() == 12);  // 7 originals + 5 fresh antipodes
    }
}

TEST_CASE("antipodal points have degree one in the strict graph") {
    std::mt19937_64 rng(73);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<Vec3> pts;
        const Vec3 x = Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized();
        pts.push_back(x);
        pts.push_back(-x);
        for (int i = 0; i < 6; ++i)
            pts.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        PointSet V(Space::Sphere, pts, Tolerance{});
        const GeoGraph strict = double_normal_graph(V, NormalMode::Strict);
        CHECK(strict.degree(0) == 1);
        CHECK(strict.degree(1) == 1);
        CHECK(strict.has_edge(0, 1));
    }
}

TEST_CASE("sphere bounds hold on random inputs") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 11);
        const PointSet V = random_sphere_set(rng, n);
        const int strict = sphere_double_normals(V, NormalMode::Strict).count;
        CHECK(strict <= 2 * n - 2);
        if (n >= 8) {
            const int weak = sphere_double_normals(V, NormalMode::Weak).count;
            CHECK(4 * weak <= 17 * n - 24);
        }
    }
}

TEST_CASE("rotation invariance of the double-normal count") {
    std::mt19937_64 rng(83);
    const PointSet V = random_sphere_set(rng, 11);
    const Eigen::Matrix3d R =
        Eigen::AngleAxisd(1.1, Vec3(3, -1, 2).normalized()).toRotationMatrix();
    const PointSet W = V.transformed(R);
    CHECK(sphere_double_normals(V, NormalMode::Weak).count ==
          sphere_double_normals(W, NormalMode::Weak).count);
}
