#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "normalis/constructions.hpp"
#include "normalis/crossing.hpp"
#include "normalis/delaunay.hpp"
#include "normalis/double_normal.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/io.hpp"
#include "normalis/lift.hpp"
#include "normalis/verify.hpp"

namespace {

using namespace normalis;

constexpr int kExitBadParams = 2;
constexpr int kExitWrongSpace = 3;

Tolerance base_tolerance() {
    Tolerance tol;
    if (const char* env = std::getenv("NORMALIS_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || v <= 0.0) {
            std::cerr << "invalid NORMALIS_TOL value\n";
            std::exit(kExitBadParams);
        }
        tol.boundary_eps = v;
    }
    return tol;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open " << out_path << " for writing\n";
        std::exit(kExitBadParams);
    }
    out << payload;
}

std::vector<double> parse_angle_list(const std::string& csv) {
    std::vector<double> angles;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        angles.push_back(std::stod(item) * M_PI / 180.0);
    }
    return angles;
}

int run_generate(const std::string& kind, int n, int k, int m, double chord,
                 const std::string& angles_csv, const std::string& out_path) {
    const Tolerance tol = base_tolerance();
    try {
        PointSet V = [&]() -> PointSet {
            if (kind == "regular-polygon") return regular_polygon(n, tol);
            if (kind == "odd-extremal") return planar_odd_extremal(n, tol);
            if (kind == "symmetric-circle")
                return symmetric_circle_set(parse_angle_list(angles_csv), tol);
            if (kind == "cube") return cube_vertices(tol);
            if (kind == "rhombicuboctahedron") return rhombicuboctahedron_vertices(tol);
            if (kind == "five-point") return five_point_strict(5.0 * M_PI / 180.0, tol);
            if (kind == "fig2") return fig2_seven_points(tol);
            if (kind == "layered") {
                LayeredParams p;
                p.k = k;
                p.m = m;
                if (chord > 0.0) p.c = chord;
                return layered_construction(p, tol);
            }
            if (kind == "near-extremal") return near_extremal(n, tol);
            throw Error(ErrorCode::BadParameter, "unknown generator kind " + kind);
        }();
        emit(out_path, write_point_set(V, "{\"generator\": \"" + kind + "\"}"));
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitBadParams;
    }
}

int run_analyze(const std::string& in_path, const std::string& graph_kind,
                const std::string& format, const std::string& out_path) {
    Tolerance tol = base_tolerance();
    PointSet V = [&]() {
        try {
            return read_point_set_file(in_path, tol);
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            std::exit(kExitBadParams);
        }
    }();
    try {
        if (graph_kind == "delaunay") {
            const Tiling tiling = delaunay_tiling(V);
            GeoGraph G(V.size(), V.space());
            for (const Edge& e : tiling.edges) G.add_edge(e.first, e.second);
            if (format == "off") {
                emit(out_path, tiling_off(V, tiling));
            } else if (format == "json") {
                GraphExtras extras;
                extras.tiling = &tiling;
                emit(out_path, graph_json(V, G, graph_kind, extras));
            } else {
                std::cerr << "delaunay output supports json and off\n";
                return kExitBadParams;
            }
            return 0;
        }

        GeoGraph G = [&]() {
            if (graph_kind == "dn") return double_normal_graph(V, NormalMode::Weak);
            if (graph_kind == "dn-strict") return double_normal_graph(V, NormalMode::Strict);
            if (graph_kind == "diameter") return diameter_graph(V);
            if (graph_kind == "gabriel") return weak_gabriel(V);
            if (graph_kind == "gabriel-strict") return strict_gabriel(V);
            throw Error(ErrorCode::BadParameter, "unknown graph kind " + graph_kind);
        }();
        if ((graph_kind == "dn" || graph_kind == "dn-strict") && V.space() == Space::Plane)
            red_blue_decomposition(V, G);

        if (format == "json") {
            GraphExtras extras;
            if (!G.colors.empty()) extras.colors = &G.colors;
            std::optional<CrossingReport> crossings;
            if (graph_kind == "gabriel" || graph_kind == "gabriel-strict") {
                crossings = crossing_classes(G, V);
                extras.g_census = &crossings->g_census;
            }
            emit(out_path, graph_json(V, G, graph_kind, extras));
        } else if (format == "svg") {
            emit(out_path, planar_svg(V, G));
        } else {
            std::cerr << "format " << format << " not supported for " << graph_kind << "\n";
            return kExitBadParams;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::WrongSpace ? kExitWrongSpace : kExitBadParams;
    }
}

std::string bound_report_json(const BoundReport& rep) {
    std::ostringstream os;
    os << "{\"theorem\": \"" << to_string(rep.theorem) << "\", \"n\": " << rep.n
       << ", \"bound\": \"" << rep.bound.str() << "\", \"observed\": " << rep.observed
       << ", \"pass\": " << (rep.pass ? "true" : "false")
       << ", \"equality\": " << (rep.equality ? "true" : "false")
       << ", \"in_stated_range\": " << (rep.in_range ? "true" : "false");
    if (rep.characterization.applicable)
        os << ", \"characterization\": " << (rep.characterization.holds ? "true" : "false");
    os << "}\n";
    return os.str();
}

int run_verify(const std::string& in_path, const std::string& theorem_name, bool as_json,
               bool suite) {
    if (suite) return run_acceptance_suite(std::cout) ? 0 : 1;
    const Tolerance tol = base_tolerance();
    const auto thm = theorem_from_string(theorem_name);
    if (!thm) {
        std::cerr << "unknown theorem " << theorem_name << "\n";
        return kExitBadParams;
    }
    PointSet V = [&]() {
        try {
            return read_point_set_file(in_path, tol);
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            std::exit(kExitBadParams);
        }
    }();
    try {
        const BoundReport rep = check_bound(V, *thm);
        std::cout << (as_json ? bound_report_json(rep) : rep.summary() + "\n");
        if (rep.characterization.applicable && !as_json)
            for (const std::string& d : rep.characterization.details)
                std::cout << "  " << d << "\n";
        if (!rep.pass) {
            // A violated bound is the headline result: dump the witness.
            PointSet witness(V.space(), rep.witness, V.tol());
            std::cerr << write_point_set(witness, "{\"bound_violation\": \"" +
                                                      std::string(to_string(*thm)) + "\"}");
        }
        return rep.pass ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::WrongSpace ? kExitWrongSpace : kExitBadParams;
    }
}

int run_search(const std::string& space_name, int n, int budget, std::uint64_t seed,
               const std::string& out_path) {
    SearchParams params;
    if (space_name == "plane")
        params.space = Space::Plane;
    else if (space_name == "sphere")
        params.space = Space::Sphere;
    else {
        std::cerr << "search space must be plane or sphere\n";
        return kExitBadParams;
    }
    params.n = n;
    params.budget = budget;
    params.seed = seed;
    params.tol = base_tolerance();
    try {
        const SearchState s = random_search(params);
        std::cout << "space=" << space_name << " n=" << n << " seed=" << seed
                  << " budget=" << budget << " best_N=" << s.best_count
                  << " accepted=" << s.accepted << "\n";
        if (s.bound_violation) {
            std::cout << s.violation_note << "\n";
            emit(out_path, write_point_set(s.best, "{\"search\": \"violation-witness\"}"));
            return 1;
        }
        if (!out_path.empty())
            emit(out_path, write_point_set(s.best, "{\"search\": \"best\"}"));
        return 0;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitBadParams;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double-normal and spherical Gabriel/Delaunay graph toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "generate a named point configuration");
    std::string kind, angles_csv, out_path;
    int n = 8, k = 4, m = 1;
    double chord = 0.0;
    gen->add_option("kind", kind,
                    "regular-polygon|odd-extremal|symmetric-circle|cube|"
                    "rhombicuboctahedron|five-point|layered|near-extremal|fig2")
        ->required();
    gen->add_option("--n", n, "point count (regular-polygon, odd-extremal, near-extremal)");
    gen->add_option("--k", k, "layered base polygon size (even, >= 4)");
    gen->add_option("--m", m, "layered rings per hemisphere");
    gen->add_option("--c", chord, "layered chord length (auto-selected when omitted)");
    gen->add_option("--angles", angles_csv, "comma-separated degrees (symmetric-circle)");
    gen->add_option("--out,-o", out_path, "output file (stdout when omitted)");

    auto* analyze = app.add_subcommand("analyze", "compute a graph of a point-set file");
    std::string in_path, graph_kind = "dn", format = "json";
    analyze->add_option("input", in_path, "point-set JSON file")->required();
    analyze->add_option("--graph", graph_kind, "dn|dn-strict|diameter|gabriel|gabriel-strict|delaunay");
    analyze->add_option("--format", format, "json|off|svg");
    analyze->add_option("--out,-o", out_path, "output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "check a theorem bound on an input");
    std::string theorem_name = "t1";
    bool as_json = false, suite = false;
    verify->add_option("input", in_path, "point-set JSON file");
    verify->add_option("--theorem", theorem_name, "t1|t1s|t2|t3|gabriel");
    verify->add_flag("--json", as_json, "emit the report as JSON");
    verify->add_flag("--suite", suite, "run the full acceptance battery");

    auto* search = app.add_subcommand("search", "simulated-annealing configuration search");
    std::string space_name = "plane";
    int budget = 20000;
    std::uint64_t seed = 1;
    search->add_option("--space", space_name, "plane|sphere")->required();
    search->add_option("--n", n, "point count")->required();
    search->add_option("--budget", budget, "iteration budget");
    search->add_option("--seed", seed, "random seed");
    search->add_option("--out,-o", out_path, "write the best configuration here");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) return run_generate(kind, n, k, m, chord, angles_csv, out_path);
    if (analyze->parsed()) return run_analyze(in_path, graph_kind, format, out_path);
    if (verify->parsed()) {
        if (!suite && in_path.empty()) {
            std::cerr << "verify needs an input file or --suite\n";
            return kExitBadParams;
        }
        return run_verify(in_path, theorem_name, as_json, suite);
    }
    if (search->parsed()) return run_search(space_name, n, budget, seed, out_path);
    return kExitBadParams;
}
