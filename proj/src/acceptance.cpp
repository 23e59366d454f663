#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>

#include "normalis/constructions.hpp"
#include "normalis/predicates.hpp"
#include "normalis/crossing.hpp"
#include "normalis/delaunay.hpp"
#include "normalis/euler.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/lift.hpp"
#include "normalis/verify.hpp"

namespace normalis {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

PointSet random_plane_set(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    while (true) {
        std::vector<Vec3> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) pts.emplace_back(unif(rng), unif(rng), 0.0);
        try {
            return PointSet(Space::Plane, std::move(pts), Tolerance{});
        } catch (const Error&) {
            continue;  // duplicate draw; redraw deterministically
        }
    }
}

PointSet random_sphere_set(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        std::vector<Vec3> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i)
            pts.push_back(Vec3(gauss(rng), gauss(rng), gauss(rng)).normalized());
        try {
            return PointSet(Space::Sphere, std::move(pts), Tolerance{});
        } catch (const Error&) {
            continue;
        }
    }
}

bool same_edges(const GeoGraph& a, const GeoGraph& b) { return a.edges() == b.edges(); }

struct Criterion {
    std::ostream& out;
    bool all_pass = true;
    void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
        out << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!pass) all_pass = false;
    }
};

}  // namespace

bool run_acceptance_suite(std::ostream& out) {
    Criterion c{out};

    {  // 1. Planar even extremal families.
        const auto start = Clock::now();
        bool ok = true;
        std::string detail;
        for (int n : {4, 6, 8, 12, 20, 50}) {
            const int N = double_normal_graph(regular_polygon(n), NormalMode::Weak).edge_count();
            if (N != 3 * n / 2) {
                ok = false;
                detail = "n=" + std::to_string(n) + " gave N=" + std::to_string(N);
            }
        }
        const double secs = seconds_since(start);
        if (secs >= 1.0) {
            ok = false;
            detail = "took " + std::to_string(secs) + "s";
        }
        c.report(1, "regular n-gon has 3n/2 double-normal pairs", ok, detail);
    }

    {  // 2. Planar odd extremal families and the seven-point example.
        bool ok = true;
        std::string detail;
        for (int n : {5, 7, 9, 21}) {
            const int N =
                double_normal_graph(planar_odd_extremal(n), NormalMode::Weak).edge_count();
            if (N != 3 * (n / 2)) {
                ok = false;
                detail = "odd n=" + std::to_string(n) + " gave N=" + std::to_string(N);
            }
        }
        const PointSet fig2 = fig2_seven_points();
        const GeoGraph G = double_normal_graph(fig2, NormalMode::Weak);
        std::vector<Edge> expected;
        for (const auto& [a, b] : fig2_expected_edges()) expected.push_back(make_edge(a, b));
        std::sort(expected.begin(), expected.end());
        if (G.edges() != expected) {
            ok = false;
            detail = "seven-point set has " + std::to_string(G.edge_count()) + " edges";
        }
        c.report(2, "odd extremal sets and the seven-point configuration", ok, detail);
    }

    {  // 3. Planar bound sweep with oracle equivalence.
        std::mt19937_64 rng(301);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 12);  // 3..14
            const PointSet V = random_plane_set(rng, n);
            const GeoGraph weak = double_normal_graph(V, NormalMode::Weak);
            const GeoGraph strict = double_normal_graph(V, NormalMode::Strict);
            if (weak.edge_count() > 3 * (n / 2) || strict.edge_count() > n) {
                ok = false;
                detail = "bound violated at trial " + std::to_string(trial);
            }
            if (!same_edges(weak, oracle_double_normals(V, NormalMode::Weak)) ||
                !same_edges(strict, oracle_double_normals(V, NormalMode::Strict)) ||
                !same_edges(weak, double_normal_graph(V, NormalMode::Weak, true))) {
                ok = false;
                detail = "oracle mismatch at trial " + std::to_string(trial);
            }
        }
        c.report(3, "random planar sweep within bounds, oracle-identical", ok, detail);
    }

    {  // 4. Sphere strict bound and the five-point configuration.
        std::mt19937_64 rng(401);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 11);  // 4..14
            const PointSet V = random_sphere_set(rng, n);
            const int N = sphere_double_normals(V, NormalMode::Strict).count;
            if (N > 2 * n - 2) {
                ok = false;
                detail = "strict bound violated at trial " + std::to_string(trial);
            }
        }
        const int five = sphere_double_normals(five_point_strict(), NormalMode::Strict).count;
        if (five != 8) {
            ok = false;
            detail = "five-point configuration gave " + std::to_string(five);
        }
        c.report(4, "sphere strict bound 2n-2; five-point set has 8", ok, detail);
    }

    {  // 5. Sphere weak bound, equality cases.
        bool ok = true;
        std::string detail;
        const BoundReport cube = check_bound(cube_vertices(), Theorem::T3);
        const BoundReport rh = check_bound(rhombicuboctahedron_vertices(), Theorem::T3);
        if (!(cube.observed == 28 && cube.equality && cube.characterization.holds)) {
            ok = false;
            detail = "cube: " + cube.summary();
        }
        if (!(rh.observed == 96 && rh.equality)) {
            ok = false;
            detail = "rhombicuboctahedron: " + rh.summary();
        }
        std::mt19937_64 rng(501);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            const int n = 8 + static_cast<int>(rng() % 7);  // 8..14
            const PointSet V = random_sphere_set(rng, n);
            const int N = sphere_double_normals(V, NormalMode::Weak).count;
            if (4 * N > 17 * n - 24) {
                ok = false;
                detail = "weak bound violated at trial " + std::to_string(trial);
            }
        }
        c.report(5, "sphere weak bound 17n/4-6 with cube/rhombicuboctahedron equality", ok,
                 detail);
    }

    {  // 6. Gabriel bound on generated and random sets.
        bool ok = true;
        std::string detail;
        const int cube_edges = weak_gabriel(cube_vertices()).edge_count();
        if (cube_edges != 24) {
            ok = false;
            detail = "cube Gabriel count " + std::to_string(cube_edges);
        }
        std::vector<PointSet> generated;
        generated.push_back(cube_vertices());
        generated.push_back(rhombicuboctahedron_vertices());
        generated.push_back(five_point_strict());
        generated.push_back(layered_construction({4, 2, std::nullopt}));
        generated.push_back(layered_construction({6, 2, std::nullopt}));
        std::mt19937_64 rng(601);
        for (int trial = 0; trial < 300; ++trial)
            generated.push_back(random_sphere_set(rng, 2 + static_cast<int>(rng() % 13)));
        for (const PointSet& V : generated) {
            const int E = weak_gabriel(V).edge_count();
            if (4 * E > 15 * V.size() - 24) {
                ok = false;
                detail = "Gabriel bound violated at n=" + std::to_string(V.size());
            }
        }
        c.report(6, "weak Gabriel graphs within 15n/4-6; cube has exactly 24", ok, detail);
    }

    {  // 7. Layered construction counts, census, Euler identity.
        const auto start = Clock::now();
        bool ok = true;
        std::string detail;
        for (const auto& [k, m] : std::vector<std::pair<int, int>>{
                 {4, 1}, {4, 2}, {4, 3}, {6, 2}, {6, 3}, {8, 2}}) {
            const PointSet V = layered_construction({k, m, std::nullopt});
            const int expect_size = 2 * ((1 << m) - 1) * k;
            if (V.size() != expect_size) {
                ok = false;
                detail = "size mismatch at k=" + std::to_string(k);
                continue;
            }
            const int N = oracle_double_normals(V, NormalMode::Weak).edge_count();
            if (4 * N != 17 * V.size() - 6 * k) {
                ok = false;
                detail = "count mismatch at k=" + std::to_string(k) +
                         " m=" + std::to_string(m) + ": N=" + std::to_string(N);
            }
            if (k > 4) {
                const Tiling tiling = delaunay_tiling(V);
                const int f3 = 2 * ((1 << (m - 1)) - 1) * k;
                const int f4 = ((1 << m) + (1 << (m - 1)) - 2) * k;
                const int e = k * ((1 << (m + 2)) + (1 << (m - 1)) - 6);
                auto census = tiling.face_census;
                const int got3 = census.count(3) ? census[3] : 0;
                const int got4 = census.count(4) ? census[4] : 0;
                const int gotk = census.count(k) ? census[k] : 0;
                int total_faces = 0;
                for (const auto& [size, count] : census) total_faces += count;
                if (got3 != f3 || got4 != f4 || gotk != 2 ||
                    static_cast<int>(tiling.edges.size()) != e ||
                    V.size() - e + total_faces != 2) {
                    ok = false;
                    detail = "census mismatch at k=" + std::to_string(k) +
                             " m=" + std::to_string(m);
                }
            }
        }
        const double secs = seconds_since(start);
        if (secs >= 30.0) {
            ok = false;
            detail = "took " + std::to_string(secs) + "s";
        }
        c.report(7, "layered construction sizes, counts, face census", ok, detail);
    }

    {  // 8. Padding and the near-extremal parameter schedule.
        bool ok = true;
        std::string detail;
        const PointSet base = layered_construction({4, 2, std::nullopt});
        for (int pad = 1; pad <= 4; ++pad) {
            const PointSet padded = pad_with_interior_points(base, pad);
            const int N = oracle_double_normals(padded, NormalMode::Weak).edge_count();
            if (N < 96 - 6) {
                ok = false;
                detail = "padding " + std::to_string(pad) + " dropped N to " +
                         std::to_string(N);
            }
        }
        for (int n : {16, 24, 100}) {
            const NearExtremalParams p = near_extremal_params(n);
            const int expect_m =
                static_cast<int>(std::floor(0.5 * std::log2(static_cast<double>(n)) - 1.0));
            const int expect_k = 2 * (n / (4 * ((1 << expect_m) - 1)));
            if (p.m != expect_m || p.k != expect_k ||
                n - p.layered_size >= 2.0 * std::sqrt(static_cast<double>(n))) {
                ok = false;
                detail = "parameters off at n=" + std::to_string(n);
                continue;
            }
            const PointSet V = near_extremal(n);
            const int N = oracle_double_normals(V, NormalMode::Weak).edge_count();
            const double floor_bound = 17.0 / 4.0 * p.layered_size - 1.5 * p.k - 6.0;
            if (V.size() != n || N < floor_bound) {
                ok = false;
                detail = "near-extremal n=" + std::to_string(n) + " gave N=" +
                         std::to_string(N);
            }
        }
        c.report(8, "padding keeps N within 6 of the layered count; near-extremal schedule",
                 ok, detail);
    }

    {  // 9. Structural invariant suites.
        bool ok = true;
        std::string detail;
        std::mt19937_64 rng(901);

        // Strict Gabriel drawings are crossing-free.
        for (int trial = 0; trial < 60 && ok; ++trial) {
            const PointSet V = random_sphere_set(rng, 4 + static_cast<int>(rng() % 9));
            const GeoGraph S = strict_gabriel(V);
            const auto& E = S.edges();
            for (std::size_t i = 0; i < E.size() && ok; ++i)
                for (std::size_t j = i + 1; j < E.size() && ok; ++j) {
                    const Edge &e = E[i], &f = E[j];
                    if (e.first == f.first || e.first == f.second || e.second == f.first ||
                        e.second == f.second)
                        continue;
                    if (arc_cross(V[e.first], V[e.second], V[f.first], V[f.second], V.tol())) {
                        ok = false;
                        detail = "strict Gabriel crossing at trial " + std::to_string(trial);
                    }
                }
        }

        // Crossing classes share midpoint and length; Gabriel edges never
        // cross Delaunay edges.
        for (int trial = 0; trial < 60 && ok; ++trial) {
            const PointSet V = random_sphere_set(rng, 5 + static_cast<int>(rng() % 8));
            const GeoGraph G = weak_gabriel(V);
            try {
                crossing_classes(G, V);  // throws NotAnEquivalence on violation
            } catch (const Error& err) {
                ok = false;
                detail = err.what();
            }
            const Tiling tiling = delaunay_tiling(V);
            for (const Edge& ge : G.edges())
                for (const Edge& de : tiling.edges) {
                    if (ge.first == de.first || ge.first == de.second ||
                        ge.second == de.first || ge.second == de.second)
                        continue;
                    if (arc_cross(V[ge.first], V[ge.second], V[de.first], V[de.second],
                                  V.tol())) {
                        ok = false;
                        detail = "Gabriel-Delaunay crossing at trial " + std::to_string(trial);
                    }
                }
        }

        // Blue edges form a pairwise-crossing matching on planar inputs.
        std::vector<PointSet> planar_inputs;
        for (int n : {4, 6, 8, 12}) planar_inputs.push_back(regular_polygon(n));
        for (int n : {5, 7, 9}) planar_inputs.push_back(planar_odd_extremal(n));
        planar_inputs.push_back(fig2_seven_points());
        for (int trial = 0; trial < 200; ++trial)
            planar_inputs.push_back(random_plane_set(rng, 3 + static_cast<int>(rng() % 12)));
        for (const PointSet& V : planar_inputs) {
            GeoGraph G = double_normal_graph(V, NormalMode::Weak);
            const StructureReport rep = red_blue_decomposition(V, G);
            const auto* matching = rep.find("blue_edges_form_matching");
            const auto* crossing = rep.find("blue_edges_pairwise_cross");
            if (!matching || !matching->pass || !crossing || !crossing->pass) {
                ok = false;
                detail = "red/blue audit failed on n=" + std::to_string(V.size());
            }
        }

        // Lift identity is exact on every sphere input (throws otherwise).
        std::vector<PointSet> sphere_inputs;
        sphere_inputs.push_back(cube_vertices());
        sphere_inputs.push_back(rhombicuboctahedron_vertices());
        sphere_inputs.push_back(five_point_strict());
        sphere_inputs.push_back(layered_construction({4, 2, std::nullopt}));
        for (int trial = 0; trial < 200; ++trial)
            sphere_inputs.push_back(random_sphere_set(rng, 2 + static_cast<int>(rng() % 13)));
        for (const PointSet& V : sphere_inputs) {
            try {
                sphere_double_normals(V, NormalMode::Weak);
                sphere_double_normals(V, NormalMode::Strict);
            } catch (const Error& err) {
                ok = false;
                detail = err.what();
            }
        }

        c.report(9, "structural invariants (crossings, classes, red/blue, lift)", ok, detail);
    }

    {  // 10. Search sanity.
        bool ok = true;
        std::string detail;
        SearchParams plane_params;
        plane_params.space = Space::Plane;
        plane_params.n = 8;
        plane_params.budget = 20000;
        plane_params.seed = 1;
        const SearchState plane_run = random_search(plane_params);
        if (plane_run.best_count != 12 || plane_run.bound_violation) {
            ok = false;
            detail = "plane search found " + std::to_string(plane_run.best_count);
        }
        SearchParams sphere_params;
        sphere_params.space = Space::Sphere;
        sphere_params.n = 8;
        sphere_params.budget = 50000;
        sphere_params.seed = 1;
        const SearchState sphere_run = random_search(sphere_params);
        if (sphere_run.best_count != 28 || sphere_run.bound_violation) {
            ok = false;
            detail = "sphere search found " + std::to_string(sphere_run.best_count);
        }
        for (int seed = 1; seed <= 50 && ok; ++seed) {
            for (Space space : {Space::Plane, Space::Sphere}) {
                SearchParams p;
                p.space = space;
                p.n = 8;
                p.budget = 2000;
                p.seed = static_cast<std::uint64_t>(seed);
                const SearchState s = random_search(p);
                if (s.bound_violation) {
                    ok = false;
                    detail = s.violation_note;
                }
            }
        }
        c.report(10, "annealing attains 12 (plane) and 28 (sphere); no violations", ok,
                 detail);
    }

    out << (c.all_pass ? "acceptance: ALL PASS\n" : "acceptance: FAILURES PRESENT\n");
    return c.all_pass;
}

}  // namespace normalis
