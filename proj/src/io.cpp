#include "polycycle/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace polycycle {

namespace {

using json = nlohmann::json;

// Per-vertex edge ids, each list rotated to start at its smallest id.
std::vector<std::vector<EdgeEnd>> normalized_rotations(const PlanarMap& m) {
    std::vector<std::vector<EdgeEnd>> rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (Dart d : m.vertex_darts(v)) rot[v].push_back(edge_of(d));
        std::rotate(rot[v].begin(), std::min_element(rot[v].begin(), rot[v].end()), rot[v].end());
    }
    return rot;
}

// The dart of edge e leaving vertex v (edges are never loops).
Dart dart_from(const PlanarMap& m, int e, int v) { return m.tail(2 * e) == v ? 2 * e : 2 * e + 1; }

// P re-expressed on build_map(normalized rotations), whose numbering is what
// a reader reconstructs.
Polycycle normalized(const Polycycle& p) {
    const auto& m = p.map();
    PlanarMap nm = build_map(normalized_rotations(m));
    FaceLabeling labels(nm.face_count(), FaceKind::proper);
    for (Dart d = 0; d < nm.dart_count(); ++d)
        labels[nm.face_of(d)] = p.labels()[m.face_of(dart_from(m, edge_of(d), nm.tail(d)))];
    return validate(std::move(nm), std::move(labels), p.params());
}

[[noreturn]] void parse_error(const std::string& what) { throw PolycycleError(ErrorKind::parse_error, what); }

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

}  // namespace

std::string write_json(const Polycycle& p0) {
    const Polycycle p = normalized(p0);
    const auto& m = p.map();
    json doc;
    doc["format"] = json_format_tag;
    doc["q"] = p.params().q;
    doc["R"] = p.params().gon_sizes;
    doc["vertex_count"] = m.vertex_count();
    json edges = json::array();
    for (int e = 0; e < m.edge_count(); ++e) edges.push_back({m.tail(2 * e), m.head(2 * e)});
    doc["edges"] = edges;
    doc["rotations"] = normalized_rotations(m);
    doc["holes"] = p.holes();
    return doc.dump() + "\n";
}

Polycycle read_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
    if (!doc.is_object()) parse_error("document is not an object");
    if (!doc.contains("format") || !doc["format"].is_string()) parse_error("missing format tag");
    if (doc["format"] != json_format_tag)
        throw PolycycleError(ErrorKind::unknown_format_tag, doc["format"].get<std::string>());
    int q = 0, vertex_count = 0;
    std::vector<int> gon_sizes, holes;
    std::vector<std::vector<int>> edges, rotations;
    try {
        q = doc.at("q").get<int>();
        gon_sizes = doc.at("R").get<std::vector<int>>();
        vertex_count = doc.at("vertex_count").get<int>();
        edges = doc.at("edges").get<std::vector<std::vector<int>>>();
        rotations = doc.at("rotations").get<std::vector<std::vector<int>>>();
        holes = doc.at("holes").get<std::vector<int>>();
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
    try {
        if (static_cast<int>(rotations.size()) != vertex_count)
            throw PolycycleError(ErrorKind::disconnected, "vertex_count does not match rotations");
        // every edge must sit in the rotations of exactly its two endpoints
        std::vector<std::vector<int>> seen(edges.size());
        for (int v = 0; v < vertex_count; ++v)
            for (int e : rotations[v]) {
                if (e < 0 || e >= static_cast<int>(edges.size()))
                    throw PolycycleError(ErrorKind::non_involutive_alpha, "edge id " + std::to_string(e));
                seen[e].push_back(v);
            }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].size() != 2) throw PolycycleError(ErrorKind::non_involutive_alpha, "edge " + std::to_string(e));
            auto ends = seen[e];
            auto listed = edges[e];
            std::sort(ends.begin(), ends.end());
            std::sort(listed.begin(), listed.end());
            if (ends != listed)
                throw PolycycleError(ErrorKind::non_involutive_alpha, "edge " + std::to_string(e) + " endpoints");
        }
        PlanarMap m = build_map(rotations);
        FaceLabeling labels(m.face_count(), FaceKind::proper);
        for (int h : holes) {
            if (h < 0 || h >= m.face_count()) throw PolycycleError(ErrorKind::not_a_hole, "face " + std::to_string(h));
            labels[h] = FaceKind::hole;
        }
        return validate(std::move(m), std::move(labels), PolycycleParams::make(gon_sizes, q));
    } catch (const WrappedError&) {
        throw;
    } catch (const PolycycleError& e) {
        throw WrappedError(ErrorKind::validation_error, e);
    }
}

std::string write_planar_code(const Polycycle& p) {
    const auto& m = p.map();
    if (m.vertex_count() > 255)
        throw PolycycleError(ErrorKind::too_large, std::to_string(m.vertex_count()) + " vertices");
    std::string out = ">>planar_code<<";
    out.push_back(static_cast<char>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) {
        // the format lists neighbours clockwise; our rotations are counterclockwise
        std::vector<int> nb;
        for (Dart d : m.vertex_darts(v)) nb.push_back(m.head(d) + 1);
        std::reverse(nb.begin(), nb.end());
        std::rotate(nb.begin(), std::min_element(nb.begin(), nb.end()), nb.end());
        for (int w : nb) out.push_back(static_cast<char>(w));
        out.push_back('\0');
    }
    return out;
}

PlanarMap read_planar_code(const std::string& bytes) {
    const std::string header = ">>planar_code<<";
    if (bytes.compare(0, header.size(), header) != 0) parse_error("missing planar_code header");
    std::size_t pos = header.size();
    if (pos >= bytes.size()) parse_error("truncated planar_code");
    const int n = static_cast<unsigned char>(bytes[pos++]);
    std::vector<std::vector<int>> nb(n);
    for (int v = 0; v < n; ++v) {
        for (;;) {
            if (pos >= bytes.size()) parse_error("truncated planar_code");
            const int w = static_cast<unsigned char>(bytes[pos++]);
            if (w == 0) break;
            if (w > n) parse_error("neighbour out of range");
            nb[v].push_back(w - 1);
        }
        std::reverse(nb[v].begin(), nb[v].end());
    }
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::vector<EdgeEnd>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int w : nb[v]) {
            const auto key = std::minmax(v, w);
            if (v < w && ids.count(key)) parse_error("parallel edges are not representable");
            const auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
            (void)fresh;
            rot[v].push_back(it->second);
        }
    return build_map(rot);
}

std::string write_dot(const Polycycle& p) {
    const auto& m = p.map();
    std::ostringstream o;
    o << "graph polycycle {\n";
    for (int v = 0; v < m.vertex_count(); ++v)
        o << "  v" << v << (p.on_boundary(v) ? " [shape=circle]" : " [shape=point]") << ";\n";
    for (int e = 0; e < m.edge_count(); ++e) {
        const bool boundary = p.is_hole_dart(2 * e) || p.is_hole_dart(2 * e + 1);
        o << "  v" << m.tail(2 * e) << " -- v" << m.head(2 * e) << " [id=e" << e;
        if (boundary) o << ", style=bold";
        o << "];\n";
    }
    o << "}\n";
    return o.str();
}

std::vector<std::pair<double, double>> tutte_layout(const Polycycle& p) {
    const auto& m = p.map();
    const int n = m.vertex_count();
    int outer = -1;
    for (int h : p.holes())
        if (outer < 0 || m.face_size(h) > m.face_size(outer)) outer = h;
    std::vector<std::pair<double, double>> xy(n, {0.0, 0.0});
    std::vector<char> pinned(n, 0);
    const auto& ring = m.face_darts(outer);
    const int k = static_cast<int>(ring.size());
    const double pi = std::acos(-1.0);
    for (int i = 0; i < k; ++i) {
        const int v = m.tail(ring[i]);
        // a 2-gon boundary pins to the two ends of a lens
        const double a = pi / 2 + 2 * pi * i / k;
        xy[v] = {std::cos(a), std::sin(a)};
        pinned[v] = 1;
    }
    for (double delta = 1.0; delta > 1e-9;) {
        delta = 0.0;
        for (int v = 0; v < n; ++v) {
            if (pinned[v]) continue;
            double x = 0, y = 0;
            for (Dart d : m.vertex_darts(v)) {
                x += xy[m.head(d)].first;
                y += xy[m.head(d)].second;
            }
            x /= m.degree(v);
            y /= m.degree(v);
            delta = std::max({delta, std::abs(x - xy[v].first), std::abs(y - xy[v].second)});
            xy[v] = {x, y};
        }
    }
    return xy;
}

std::string render_svg(const Polycycle& p, const SvgOptions& options) {
    const auto& m = p.map();
    const auto unit = tutte_layout(p);
    const double half = options.size / 2;
    const double radius = half - options.margin;
    std::vector<std::pair<double, double>> xy(unit.size());
    for (std::size_t v = 0; v < unit.size(); ++v)
        xy[v] = {std::round((half + radius * unit[v].first) * 1e6) / 1e6,
                 std::round((half - radius * unit[v].second) * 1e6) / 1e6};
    // parallel edges bend symmetrically around the straight segment
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < m.edge_count(); ++e) bundles[std::minmax(m.tail(2 * e), m.head(2 * e))].push_back(e);
    std::vector<std::optional<std::pair<double, double>>> control(m.edge_count());
    for (const auto& [ends, ids] : bundles) {
        if (ids.size() < 2) continue;
        const auto [ax, ay] = xy[ends.first];
        const auto [bx, by] = xy[ends.second];
        const double len = std::hypot(bx - ax, by - ay);
        const double nx = len > 0 ? -(by - ay) / len : 0.0, ny = len > 0 ? (bx - ax) / len : 1.0;
        const double spread = std::max(len, 1.0) * 0.35;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const double off = (static_cast<double>(i) - (ids.size() - 1) / 2.0) * spread;
            control[ids[i]] = std::pair{std::round(((ax + bx) / 2 + nx * off) * 1e6) / 1e6,
                                        std::round(((ay + by) / 2 + ny * off) * 1e6) / 1e6};
        }
    }
    auto point = [&](double x, double y) { return fixed6(x) + " " + fixed6(y); };
    auto segment = [&](Dart d) {
        const auto [x, y] = xy[m.head(d)];
        if (const auto& c = control[edge_of(d)]) return "Q " + point(c->first, c->second) + " " + point(x, y);
        return "L " + point(x, y);
    };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(options.size) << "\" height=\""
      << fixed6(options.size) << "\" viewBox=\"0 0 " << fixed6(options.size) << " " << fixed6(options.size)
      << "\">\n";
    for (int f : p.proper_faces()) {
        const auto& darts = m.face_darts(f);
        const auto [x0, y0] = xy[m.tail(darts.front())];
        o << "<path class=\"face\" fill=\"#dde6f2\" stroke=\"none\" d=\"M " << point(x0, y0);
        for (Dart d : darts) o << " " << segment(d);
        o << " Z\"/>\n";
    }
    for (int e = 0; e < m.edge_count(); ++e) {
        const bool boundary = p.is_hole_dart(2 * e) || p.is_hole_dart(2 * e + 1);
        const auto [x0, y0] = xy[m.tail(2 * e)];
        o << "<path class=\"edge\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << (boundary ? "2" : "1")
          << "\" d=\"M " << point(x0, y0) << " " << segment(2 * e) << "\"/>\n";
    }
    for (int v = 0; v < m.vertex_count(); ++v)
        o << "<circle cx=\"" << fixed6(xy[v].first) << "\" cy=\"" << fixed6(xy[v].second) << "\" r=\"3\"/>\n";
    o << "</svg>\n";
    return o.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PolycycleError(ErrorKind::io_error, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << bytes)) throw PolycycleError(ErrorKind::io_error, "cannot write " + path);
}

}  // namespace polycycle
