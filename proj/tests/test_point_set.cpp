#include <doctest.h>

#include "normalis/point_set.hpp"

using namespace normalis;

TEST_CASE("duplicate points are rejected at ingestion") {
    std::vector<Vec3> pts = {{0, 0, 0}, {1, 0, 0}, {1e-12, 0, 0}};
    CHECK_THROWS_AS(PointSet(Space::Plane, pts, Tolerance{}), Error);
    try {
        PointSet(Space::Plane, pts, Tolerance{});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicatePoint);
    }
}

TEST_CASE("sphere points are renormalized within unit_norm and rejected beyond") {
    std::vector<Vec3> near = {{1.0 + 1e-8, 0, 0}, {0, 1, 0}};
    const PointSet V(Space::Sphere, near, Tolerance{});
    CHECK(V[0].norm() == doctest::Approx(1.0).epsilon(1e-15));

    std::vector<Vec3> far = {{1.5, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(PointSet(Space::Sphere, far, Tolerance{}), Error);
}

TEST_CASE("planar sets require z = 0") {
    std::vector<Vec3> pts = {{0, 0, 0.1}, {1, 0, 0}};
    CHECK_THROWS_AS(PointSet(Space::Plane, pts, Tolerance{}), Error);
}

TEST_CASE("non-finite coordinates are rejected") {
    std::vector<Vec3> pts = {{std::numeric_limits<double>::quiet_NaN(), 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(PointSet(Space::Plane, pts, Tolerance{}), Error);
}

TEST_CASE("antipode lookup and antipodal closure") {
    std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}};
    const PointSet V(Space::Sphere, pts, Tolerance{});
    CHECK(V.antipode_index(0) == 1);
    CHECK(V.antipode_index(1) == 0);
    CHECK_FALSE(V.antipode_index(2).has_value());
    CHECK_FALSE(V.closed_under_antipody());
}
