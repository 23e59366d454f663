#include "normalis/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace normalis {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Translate a byte offset from nlohmann's parse_error into line/column.
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte,
                             const std::string& what) {
    const auto [line, col] = line_col(text, byte);
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << what;
    throw Error(ErrorCode::ParseError, os.str());
}

}  // namespace

PointSet read_point_set(const std::string& text, const Tolerance& base) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Keep only the reason; the position is reported by parse_fail.
        std::string what = e.what();
        if (const auto cut = what.find("] "); cut != std::string::npos)
            what = what.substr(cut + 2);
        if (what.rfind("parse error", 0) == 0) {
            if (const auto colon = what.find(": "); colon != std::string::npos)
                what = what.substr(colon + 2);
        }
        parse_fail(text, e.byte, what);
    }
    if (!doc.is_object()) parse_fail(text, 1, "top-level value must be an object");
    if (!doc.contains("space") || !doc["space"].is_string())
        parse_fail(text, 1, "missing string field \"space\"");
    const std::string space_str = doc["space"].get<std::string>();
    Space space;
    if (space_str == "plane")
        space = Space::Plane;
    else if (space_str == "space3")
        space = Space::Space3;
    else if (space_str == "sphere")
        space = Space::Sphere;
    else
        parse_fail(text, 1, "unknown space \"" + space_str + "\"");

    Tolerance tol = base;
    if (doc.contains("tolerance")) {
        const json& t = doc["tolerance"];
        if (!t.is_object()) parse_fail(text, 1, "\"tolerance\" must be an object");
        if (t.contains("boundary_eps")) tol.boundary_eps = t["boundary_eps"].get<double>();
        if (t.contains("unit_norm")) tol.unit_norm = t["unit_norm"].get<double>();
        if (t.contains("concyclic_eps")) tol.concyclic_eps = t["concyclic_eps"].get<double>();
    }

    if (!doc.contains("points") || !doc["points"].is_array())
        parse_fail(text, 1, "missing array field \"points\"");
    std::vector<Vec3> pts;
    const std::size_t want = space == Space::Plane ? 2 : 3;
    for (std::size_t i = 0; i < doc["points"].size(); ++i) {
        const json& row = doc["points"][i];
        if (!row.is_array() || row.size() != want) {
            std::ostringstream os;
            os << "point " << i << " must be an array of " << want << " numbers";
            parse_fail(text, 1, os.str());
        }
        Vec3 p = Vec3::Zero();
        for (std::size_t k = 0; k < want; ++k) {
            if (!row[k].is_number()) parse_fail(text, 1, "non-numeric coordinate");
            p[static_cast<int>(k)] = row[k].get<double>();
        }
        pts.push_back(p);
    }
    return PointSet(space, std::move(pts), tol);
}

PointSet read_point_set_file(const std::string& path, const Tolerance& base) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return read_point_set(buf.str(), base);
}

std::string write_point_set(const PointSet& V, const std::string& meta) {
    std::ostringstream os;
    os << "{\n  \"space\": \"" << to_string(V.space()) << "\",\n  \"points\": [\n";
    const int dims = V.space() == Space::Plane ? 2 : 3;
    for (int i = 0; i < V.size(); ++i) {
        os << "    [";
        for (int k = 0; k < dims; ++k) os << (k ? ", " : "") << fmt17(V[i][k]);
        os << "]" << (i + 1 < V.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"tolerance\": {\"boundary_eps\": " << fmt17(V.tol().boundary_eps)
       << ", \"unit_norm\": " << fmt17(V.tol().unit_norm)
       << ", \"concyclic_eps\": " << fmt17(V.tol().concyclic_eps) << "}";
    if (!meta.empty()) os << ",\n  \"meta\": " << meta;
    os << "\n}\n";
    return os.str();
}

void write_point_set_file(const std::string& path, const PointSet& V,
                          const std::string& meta) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << write_point_set(V, meta);
}

std::string graph_json(const PointSet& V, const GeoGraph& G, const std::string& kind,
                       const GraphExtras& extras) {
    std::ostringstream os;
    os << "{\n  \"kind\": \"" << kind << "\",\n  \"space\": \"" << to_string(V.space())
       << "\",\n  \"vertex_count\": " << V.size() << ",\n  \"edge_count\": "
       << G.edge_count() << ",\n  \"vertices\": [\n";
    const int dims = V.space() == Space::Plane ? 2 : 3;
    for (int i = 0; i < V.size(); ++i) {
        os << "    [";
        for (int k = 0; k < dims; ++k) os << (k ? ", " : "") << fmt17(V[i][k]);
        os << "]" << (i + 1 < V.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"edges\": [";
    for (std::size_t i = 0; i < G.edges().size(); ++i) {
        const Edge& e = G.edges()[i];
        os << (i ? ", " : "") << "[" << e.first << ", " << e.second << "]";
    }
    os << "]";
    if (extras.colors && !extras.colors->empty()) {
        os << ",\n  \"colors\": [";
        for (std::size_t i = 0; i < G.edges().size(); ++i) {
            const auto it = extras.colors->find(G.edges()[i]);
            const char* c = it == extras.colors->end()
                                ? "none"
                                : (it->second == EdgeColor::Red ? "red" : "blue");
            os << (i ? ", " : "") << "\"" << c << "\"";
        }
        os << "]";
    }
    if (extras.g_census) {
        os << ",\n  \"crossing_polygon_census\": {";
        bool first = true;
        for (const auto& [size, count] : *extras.g_census) {
            os << (first ? "" : ", ") << "\"" << size << "\": " << count;
            first = false;
        }
        os << "}";
    }
    if (extras.tiling) {
        os << ",\n  \"origin_case\": \"" << to_string(extras.tiling->origin_case)
           << "\",\n  \"face_census\": {";
        bool first = true;
        for (const auto& [size, count] : extras.tiling->face_census) {
            os << (first ? "" : ", ") << "\"" << size << "\": " << count;
            first = false;
        }
        os << "},\n  \"faces\": [";
        for (std::size_t i = 0; i < extras.tiling->faces.size(); ++i) {
            os << (i ? ", " : "") << "[";
            const auto& f = extras.tiling->faces[i];
            for (std::size_t k = 0; k < f.size(); ++k) os << (k ? ", " : "") << f[k];
            os << "]";
        }
        os << "]";
    }
    os << "\n}\n";
    return os.str();
}

std::string tiling_off(const PointSet& V, const Tiling& tiling) {
    std::ostringstream os;
    os << "OFF\n" << V.size() << " " << tiling.faces.size() << " " << tiling.edges.size()
       << "\n";
    for (int i = 0; i < V.size(); ++i)
        os << fmt17(V[i].x()) << " " << fmt17(V[i].y()) << " " << fmt17(V[i].z()) << "\n";
    for (const auto& f : tiling.faces) {
        os << f.size();
        for (int v : f) os << " " << v;
        os << "\n";
    }
    return os.str();
}

std::string planar_svg(const PointSet& V, const GeoGraph& G) {
    if (V.space() != Space::Plane)
        throw Error(ErrorCode::WrongSpace, "SVG drawings are planar only");
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    for (int i = 0; i < V.size(); ++i) {
        const Vec2 p = V.xy(i);
        if (i == 0) {
            min_x = max_x = p.x();
            min_y = max_y = p.y();
        }
        min_x = std::min(min_x, p.x());
        max_x = std::max(max_x, p.x());
        min_y = std::min(min_y, p.y());
        max_y = std::max(max_y, p.y());
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double view = 640.0, margin = 40.0;
    const double s = (view - 2 * margin) / span;
    auto X = [&](double x) { return margin + (x - min_x) * s; };
    auto Y = [&](double y) { return view - margin - (y - min_y) * s; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view << "\" height=\""
       << view << "\" viewBox=\"0 0 " << view << " " << view << "\">\n";
    for (const Edge& e : G.edges()) {
        const Vec2 a = V.xy(e.first), b = V.xy(e.second);
        const auto it = G.colors.find(e);
        std::string style = "stroke=\"black\"";
        if (it != G.colors.end())
            style = it->second == EdgeColor::Red
                        ? "stroke=\"red\" stroke-dasharray=\"8 5\""
                        : "stroke=\"blue\"";
        os << "  <line x1=\"" << X(a.x()) << "\" y1=\"" << Y(a.y()) << "\" x2=\"" << X(b.x())
           << "\" y2=\"" << Y(b.y()) << "\" " << style << " stroke-width=\"2\"/>\n";
    }
    for (int i = 0; i < V.size(); ++i) {
        const Vec2 p = V.xy(i);
        os << "  <circle cx=\"" << X(p.x()) << "\" cy=\"" << Y(p.y())
           << "\" r=\"4\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace normalis
