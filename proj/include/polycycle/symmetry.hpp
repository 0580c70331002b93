#pragma once

#include <optional>
#include <string>

#include "polycycle/polycycle.hpp"

namespace polycycle {

struct SymmetryInfo {
    int order = 1;
    int op_order = 1;      // orientation-preserving subgroup
    int max_rotation = 1;  // largest order of an orientation-preserving element
    bool has_reflection = false;  // any orientation-reversing element
    int mirrors = 0;              // reflections fixing a curve (a mirror plane)
    std::optional<std::string> name;  // Schoenflies symbol
};

// Aut(P): automorphisms keeping the proper/hole partition.
SymmetryInfo symmetry_of_polycycle(const Polycycle& p);
// Aut(G): the sphere map with every face treated alike; face sizes are part
// of the map and so are kept.
SymmetryInfo symmetry_of_graph(const Polycycle& p);

SymmetryInfo symmetry_of(const PlanarMap& map, const FaceLabeling& labels);

// Point-group name from the signature, when it identifies a single group.
std::optional<std::string> point_group_name(int order, int op_order, int max_rotation, int mirrors);

}  // namespace polycycle
