#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <functional>
#include <sstream>
#include <regex>

#include <json.hpp>

#include "polycycle/enumerate.hpp"
#include "polycycle/io.hpp"

using namespace polycycle;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const PolycycleError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::io_error;
}

}  // namespace

TEST_CASE("2-gon document") {
    const json doc = json::parse(write_json(monocycle(2)));
    CHECK(doc["format"] == json_format_tag);
    CHECK(doc["vertex_count"] == 2);
    CHECK(doc["rotations"] == json::parse("[[0,1],[0,1]]"));
    CHECK(doc["holes"] == json::parse("[1]"));
    CHECK(doc["edges"] == json::parse("[[0,1],[0,1]]"));
    CHECK(doc["q"] == 3);
    CHECK(doc["R"] == json::parse("[2]"));
}

TEST_CASE("json round trip is byte stable and keeps the code") {
    const auto cat = enumerate_elementary({PolycycleParams::make({2, 3}, 5), 14});
    for (const auto& e : cat) {
        const std::string text = write_json(e.polycycle);
        const Polycycle back = read_json(text);
        CHECK(canonical_code(back) == e.code);
        CHECK(write_json(back) == text);
        CHECK(back.params() == e.polycycle.params());
    }
    // a relabelled copy writes the same edge structure up to numbering, same code
    const Polycycle b = barrel(4);
    CHECK(write_json(read_json(write_json(b))) == write_json(b));
}

TEST_CASE("json errors") {
    CHECK(kind_of([] { read_json("{not json"); }) == ErrorKind::parse_error);
    json doc = json::parse(write_json(monocycle(3)));
    doc["format"] = "something-else/9";
    CHECK(kind_of([&] { read_json(doc.dump()); }) == ErrorKind::unknown_format_tag);

    doc = json::parse(write_json(monocycle(3)));
    doc.erase("rotations");
    CHECK(kind_of([&] { read_json(doc.dump()); }) == ErrorKind::parse_error);

    // both faces of the 2-gon marked as holes: the holes share both vertices
    doc = json::parse(write_json(monocycle(2)));
    doc["holes"] = json::parse("[0,1]");
    try {
        read_json(doc.dump());
        FAIL("accepted");
    } catch (const WrappedError& e) {
        CHECK(e.kind() == ErrorKind::validation_error);
        CHECK((e.inner() == ErrorKind::holes_share_vertex || e.inner() == ErrorKind::empty_partition));
    }

    // a triangle read with R = {4}
    doc = json::parse(write_json(monocycle(3)));
    doc["q"] = 3;
    doc["R"] = json::parse("[4]");
    try {
        read_json(doc.dump());
        FAIL("accepted");
    } catch (const WrappedError& e) {
        CHECK(e.inner() == ErrorKind::bad_gon_size);
    }
}

TEST_CASE("planar code") {
    const std::string header = ">>planar_code<<";
    const std::string tri = write_planar_code(with_params(monocycle(3), PolycycleParams::make({3}, 3)));
    REQUIRE(tri.size() == header.size() + 1 + 9);
    CHECK(tri.substr(0, header.size()) == header);
    const std::string body = tri.substr(header.size());
    CHECK(body == std::string("\x03\x02\x03\x00\x01\x03\x00\x01\x02\x00", 10));

    const std::string b2 = write_planar_code(barrel(2));
    const std::string records = b2.substr(header.size() + 1);
    CHECK(static_cast<unsigned char>(b2[header.size()]) == 8);
    CHECK(records.size() == 8 * 4);

    // barrel(2) has parallel edges and cannot be read back; barrel(3) can
    CHECK(kind_of([&] { read_planar_code(b2); }) == ErrorKind::parse_error);
    const PlanarMap back = read_planar_code(write_planar_code(barrel(3)));
    CHECK(back.vertex_count() == 12);
    CHECK(back.edge_count() == 18);
    CHECK(graph_code(barrel(3)) == canonical_code(back, FaceLabeling(back.face_count(), FaceKind::proper)));

    // the 2-gon repeats its neighbour
    const std::string two = write_planar_code(monocycle(2));
    CHECK(two.substr(header.size()) == std::string("\x02\x02\x02\x00\x01\x01\x00", 7));
}

TEST_CASE("dot output") {
    const std::string dot = write_dot(barrel(2));
    CHECK(dot.rfind("graph", 0) == 0);
    const std::regex edge_re(" -- ");
    const std::regex node_re(R"(^\s*v\d+ \[)");
    int edges = 0, nodes = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        if (std::regex_search(line, edge_re)) ++edges;
        else if (std::regex_search(line, node_re)) ++nodes;
    }
    CHECK(edges == 12);
    CHECK(nodes == 8);
    CHECK(write_dot(barrel(2)) == dot);
}

TEST_CASE("svg drawing") {
    const auto pos = tutte_layout(monocycle(5));
    REQUIRE(pos.size() == 5);
    for (const auto& [x, y] : pos) CHECK(std::hypot(x, y) == doctest::Approx(1.0).epsilon(1e-9));

    // barrel interior vertices sit strictly inside the pinned outer hole
    const Polycycle b = barrel(5);
    const auto bp = tutte_layout(b);
    int inside = 0;
    for (const auto& [x, y] : bp)
        if (std::hypot(x, y) < 1.0 - 1e-6) ++inside;
    CHECK(inside == 15);

    const std::string svg = render_svg(b);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(render_svg(b) == svg);

    const std::string lens = render_svg(monocycle(2));
    CHECK(lens.find(" Q") != std::string::npos);
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "polycycle_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "x.json").string();
    write_file(path, write_json(barrel(3)));
    CHECK(is_isomorphic(read_json(read_file(path)), barrel(3)));
    CHECK(kind_of([&] { read_file((dir / "missing.json").string()); }) == ErrorKind::io_error);
    std::filesystem::remove_all(dir);
}
