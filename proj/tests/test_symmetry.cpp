#include <doctest.h>

#include "polycycle/enumerate.hpp"
#include "polycycle/symmetry.hpp"

using namespace polycycle;

TEST_CASE("point group names") {
    CHECK(point_group_name(1, 1, 1, 0) == "C1");
    CHECK(point_group_name(2, 1, 1, 1) == "Cs");
    CHECK(point_group_name(2, 1, 1, 0) == "Ci");
    CHECK(point_group_name(2, 2, 2, 0) == "C2");
    CHECK(point_group_name(4, 2, 2, 2) == "C2v");
    CHECK(point_group_name(4, 2, 2, 1) == "C2h");
    CHECK(point_group_name(4, 2, 2, 0) == "S4");
    CHECK(point_group_name(8, 4, 2, 3) == "D2h");
    CHECK(point_group_name(8, 4, 2, 2) == "D2d");
    CHECK(point_group_name(8, 4, 4, 4) == "C4v");
    CHECK(point_group_name(24, 12, 3, 6) == "Td");
    CHECK(point_group_name(24, 12, 3, 3) == "Th");
    CHECK(point_group_name(48, 24, 4, 9) == "Oh");
    CHECK(point_group_name(120, 60, 5, 15) == "Ih");
    CHECK(point_group_name(60, 60, 5, 0) == "I");
    CHECK_FALSE(point_group_name(6, 4, 2, 0).has_value());
}

TEST_CASE("family symmetry names") {
    const auto tri = with_params(monocycle(3), PolycycleParams::make({3}, 3));
    CHECK(symmetry_of_polycycle(tri).name == "C3v");
    CHECK(symmetry_of_graph(tri).name == "D3h");
    CHECK(symmetry_of_polycycle(monocycle(2)).name == "C2v");
    CHECK(symmetry_of_graph(monocycle(2)).name == "D2h");
    CHECK(symmetry_of_polycycle(monocycle(5)).name == "C5v");
    CHECK(symmetry_of_graph(monocycle(5)).name == "D5h");
    CHECK(symmetry_of_polycycle(gon_triple(3, 3, 3)).name == "C3v");
    CHECK(symmetry_of_graph(gon_triple(3, 3, 3)).name == "Td");
    for (int m = 2; m <= 6; ++m) {
        const std::string dmd = "D" + std::to_string(m) + "d";
        CHECK(symmetry_of_polycycle(barrel(m)).name == dmd);
        CHECK(symmetry_of_polycycle(barrel(m)).order == 4 * m);
        CHECK(symmetry_of_polycycle(snub_antiprism(m)).name == dmd);
        CHECK(symmetry_of_polycycle(snub_antiprism(m)).order == 4 * m);
    }
    CHECK(symmetry_of_graph(barrel(5)).name == "Ih");
    CHECK(symmetry_of_graph(snub_antiprism(3)).name == "Ih");
}

TEST_CASE("signature fields") {
    const SymmetryInfo s = symmetry_of_graph(barrel(5));
    CHECK(s.order == 120);
    CHECK(s.op_order == 60);
    CHECK(s.max_rotation == 5);
    CHECK(s.has_reflection);
    CHECK(s.mirrors == 15);

    const SymmetryInfo c = symmetry_of_polycycle(series_member(5, "ag", 2));
    CHECK(c.order == 1);
    CHECK_FALSE(c.has_reflection);
    CHECK(c.name == "C1");
}

TEST_CASE("({2,3},4) catalog: Aut(P) divides Aut(G)") {
    const auto cat = enumerate_elementary({PolycycleParams::make({2, 3}, 4), 20});
    for (const auto& e : cat) {
        CHECK(e.aut_p_order == symmetry_of_polycycle(e.polycycle).order);
        CHECK(e.aut_g_order == symmetry_of_graph(e.polycycle).order);
        CHECK(e.aut_g_order % e.aut_p_order == 0);
    }
}
