#include <doctest.h>

#include <random>
#include <sstream>

#include "normalis/constructions.hpp"
#include "normalis/delaunay.hpp"
#include "normalis/double_normal.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/io.hpp"

using namespace normalis;

TEST_CASE("point-set files round-trip the numeric payload exactly") {
    std::mt19937_64 rng(97);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec3> pts;
        for (int i = 0; i < 9; ++i)
            pts.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        const PointSet V(Space::Sphere, pts, Tolerance{});
        const PointSet W = read_point_set(write_point_set(V));
        REQUIRE(W.size() == V.size());
        for (int i = 0; i < V.size(); ++i) {
            CHECK(V[i].x() == W[i].x());
            CHECK(V[i].y() == W[i].y());
            CHECK(V[i].z() == W[i].z());
        }
        CHECK(write_point_set(V) == write_point_set(W));  // byte-identical rewrite
    }
}

TEST_CASE("planar files carry two coordinates") {
    const PointSet V = regular_polygon(5);
    const std::string text = write_point_set(V);
    const PointSet W = read_point_set(text);
    CHECK(W.space() == Space::Plane);
    CHECK(W.size() == 5);
}

TEST_CASE("parse errors carry line and column positions") {
    const std::string broken = "{\n  \"space\": \"plane\",\n  \"points\": [[0, 0], [1,]\n}";
    try {
        read_point_set(broken);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
}

TEST_CASE("schema violations are reported") {
    CHECK_THROWS_AS(read_point_set("{\"points\": [[0,0]]}"), Error);
    CHECK_THROWS_AS(read_point_set("{\"space\": \"moon\", \"points\": []}"), Error);
    CHECK_THROWS_AS(read_point_set("{\"space\": \"plane\", \"points\": [[0,0,0]]}"), Error);
    CHECK_THROWS_AS(read_point_set("{\"space\": \"plane\", \"points\": [[0,\"x\"]]}"), Error);
}

TEST_CASE("tolerance overrides in the file are honored") {
    const std::string text =
        "{\"space\": \"plane\", \"points\": [[0,0],[1,0],[0,1]], "
        "\"tolerance\": {\"boundary_eps\": 1e-6}}";
    const PointSet V = read_point_set(text);
    CHECK(V.tol().boundary_eps == 1e-6);
}

TEST_CASE("graph json counts match the graph") {
    const PointSet V = regular_polygon(8);
    const GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    const std::string json = graph_json(V, G, "dn");
    CHECK(json.find("\"edge_count\": 12") != std::string::npos);
}

TEST_CASE("svg line count equals the edge count, red dashed and blue solid") {
    const PointSet V = regular_polygon(8);
    GeoGraph G = double_normal_graph(V, NormalMode::Weak);
    red_blue_decomposition(V, G);
    const std::string svg = planar_svg(V, G);
    std::size_t lines = 0, dashed = 0, blue = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("stroke-dasharray", pos)) != std::string::npos) {
        ++dashed;
        ++pos;
    }
    pos = 0;
    while ((pos = svg.find("stroke=\"blue\"", pos)) != std::string::npos) {
        ++blue;
        ++pos;
    }
    CHECK(lines == 12);
    CHECK(dashed == 8);
    CHECK(blue == 4);
}

TEST_CASE("svg export rejects sphere inputs") {
    const PointSet V = cube_vertices();
    const GeoGraph G = weak_gabriel(V);
    CHECK_THROWS_AS(planar_svg(V, G), Error);
}

TEST_CASE("off export lists vertices and faces of the tiling") {
    const PointSet V = cube_vertices();
    const Tiling tiling = delaunay_tiling(V);
    const std::string off = tiling_off(V, tiling);
    std::istringstream in(off);
    std::string header;
    int nv = 0, nf = 0, ne = 0;
    in >> header >> nv >> nf >> ne;
    CHECK(header == "OFF");
    CHECK(nv == 8);
    CHECK(nf == 6);
    CHECK(ne == 12);
}
