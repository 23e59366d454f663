#include <doctest.h>

#include <random>

#include "normalis/constructions.hpp"
#include "normalis/verify.hpp"

using namespace normalis;

TEST_CASE("bound formulas at known reference points") {
    CHECK(bound_formula(Theorem::T1, 8) == Rational(12, 1));
    CHECK(bound_formula(Theorem::T1, 9) == Rational(12, 1));
    CHECK(bound_formula(Theorem::T3, 24) == Rational(96, 1));
    CHECK(bound_formula(Theorem::T3, 8) == Rational(28, 1));
    CHECK(bound_formula(Theorem::T2, 4) == Rational(6, 1));
    CHECK(bound_formula(Theorem::Gabriel154, 8) == Rational(24, 1));
    CHECK(bound_formula(Theorem::T3, 10) == Rational(146, 4));  // reduces to 73/2
    CHECK(bound_formula(Theorem::T3, 10).den == 2);
    CHECK_FALSE(in_stated_range(Theorem::T3, 7));
    CHECK(in_stated_range(Theorem::T2, 4));
}

TEST_CASE("octagon passes T1 with equality and characterization") {
    const BoundReport rep = check_bound(regular_polygon(8), Theorem::T1);
    CHECK(rep.pass);
    CHECK(rep.equality);
    CHECK(rep.characterization.applicable);
    CHECK(rep.characterization.holds);
}

TEST_CASE("odd extremal attains the floor bound without the even characterization") {
    const BoundReport rep = check_bound(planar_odd_extremal(9), Theorem::T1);
    CHECK(rep.pass);
    CHECK(rep.equality);
    CHECK_FALSE(rep.characterization.applicable);
}

TEST_CASE("cube passes T3 with equality and characterization") {
    const BoundReport rep = check_bound(cube_vertices(), Theorem::T3);
    CHECK(rep.pass);
    CHECK(rep.equality);
    CHECK(rep.observed == 28);
    CHECK(rep.characterization.applicable);
    CHECK(rep.characterization.holds);
}

TEST_CASE("rhombicuboctahedron and layered k=4 report T3 equality; k=6 does not") {
    const BoundReport rh = check_bound(rhombicuboctahedron_vertices(), Theorem::T3);
    CHECK(rh.equality);
    CHECK(rh.characterization.holds);  // 18 squares, 8 acute triangles, 3 squares each
    const BoundReport k4 = check_bound(layered_construction({4, 2, std::nullopt}),
                                       Theorem::T3);
    CHECK(k4.equality);
    CHECK(k4.characterization.holds);
    const BoundReport k6 = check_bound(layered_construction({6, 2, std::nullopt}),
                                       Theorem::T3);
    CHECK(k6.pass);
    CHECK_FALSE(k6.equality);
}

TEST_CASE("wrong-space inputs are rejected") {
    CHECK_THROWS_AS(check_bound(cube_vertices(), Theorem::T1), Error);
    CHECK_THROWS_AS(check_bound(regular_polygon(5), Theorem::T3), Error);
}

TEST_CASE("random planar reports pass T1 with mostly strict inequality") {
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 10; ++i) pts.emplace_back(unif(rng), unif(rng), 0.0);
        const PointSet V(Space::Plane, pts, Tolerance{});
        const BoundReport rep = check_bound(V, Theorem::T1);
        CHECK(rep.pass);
    }
}

TEST_CASE("bound soundness sweep across all five checks") {
    std::mt19937_64 rng(93);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec3> flat;
        const int np = 3 + static_cast<int>(rng() % 10);
        for (int i = 0; i < np; ++i) flat.emplace_back(unif(rng), unif(rng), 0.0);
        const PointSet P(Space::Plane, flat, Tolerance{});
        CHECK(check_bound(P, Theorem::T1).pass);
        CHECK(check_bound(P, Theorem::T1Strict).pass);

        std::vector<Vec3> round;
        const int ns = 8 + static_cast<int>(rng() % 7);
        for (int i = 0; i < ns; ++i)
            round.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        const PointSet S(Space::Sphere, round, Tolerance{});
        CHECK(check_bound(S, Theorem::T2).pass);
        CHECK(check_bound(S, Theorem::T3).pass);
        CHECK(check_bound(S, Theorem::Gabriel154).pass);
    }
    for (int n : {4, 6, 8, 12}) CHECK(check_bound(regular_polygon(n), Theorem::T1).pass);
    CHECK(check_bound(five_point_strict(), Theorem::T2).pass);
    CHECK(check_bound(layered_construction({6, 2, std::nullopt}), Theorem::T3).pass);
    CHECK(check_bound(near_extremal(16), Theorem::T3).pass);
}

TEST_CASE("equality detection matches exactly the predicted families") {
    CHECK(check_bound(regular_polygon(6), Theorem::T1).equality);
    const BoundReport odd_gon = check_bound(regular_polygon(7), Theorem::T1);
    CHECK(odd_gon.pass);
    CHECK_FALSE(odd_gon.equality);  // the bare odd polygon stays below 3*floor(n/2)
}

TEST_CASE("oracle agrees with itself on the named examples") {
    CHECK(oracle_double_normals(cube_vertices(), NormalMode::Weak).edge_count() == 28);
    CHECK(oracle_double_normals(regular_polygon(8), NormalMode::Weak).edge_count() == 12);
}

TEST_CASE("search is reproducible bit for bit") {
    SearchParams p;
    p.space = Space::Plane;
    p.n = 6;
    p.budget = 1500;
    p.seed = 42;
    const SearchState a = random_search(p);
    const SearchState b = random_search(p);
    CHECK(a.best_count == b.best_count);
    CHECK(a.accepted == b.accepted);
    REQUIRE(a.best.size() == b.best.size());
    for (int i = 0; i < a.best.size(); ++i) {
        CHECK(a.best[i].x() == b.best[i].x());
        CHECK(a.best[i].y() == b.best[i].y());
        CHECK(a.best[i].z() == b.best[i].z());
    }
}

TEST_CASE("searches never report bound violations on honest runs") {
    for (std::uint64_t seed : {2, 3, 4}) {
        SearchParams p;
        p.space = Space::Plane;
        p.n = 7;
        p.budget = 3000;
        p.seed = seed;
        const SearchState s = random_search(p);
        CHECK_FALSE(s.bound_violation);
        CHECK(s.best_count <= 9);
    }
}

TEST_CASE("plane search with a tiny instance lands on the triangle optimum") {
    SearchParams p;
    p.space = Space::Plane;
    p.n = 3;
    p.budget = 300;
    p.seed = 1;
    const SearchState s = random_search(p);
    CHECK(s.best_count == 3);
}

TEST_CASE("search parameter validation") {
    SearchParams p;
    p.n = 2;
    CHECK_THROWS_AS(random_search(p), Error);
    p.n = 5;
    p.budget = 0;
    CHECK_THROWS_AS(random_search(p), Error);
}
