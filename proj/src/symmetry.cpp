#include "polycycle/symmetry.hpp"

#include <numeric>

namespace polycycle {

namespace {

int permutation_order(const std::vector<Dart>& image) {
    std::vector<char> seen(image.size(), 0);
    int order = 1;
    for (std::size_t d = 0; d < image.size(); ++d) {
        if (seen[d]) continue;
        int len = 0;
        for (std::size_t x = d; !seen[x]; x = static_cast<std::size_t>(image[x])) {
            seen[x] = 1;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

// Orientation-reversing involutions are mirrors or the antipodal map; only a
// mirror fixes a point, and its curve meets some vertex or edge.
bool is_mirror(const PlanarMap& map, const MapAutomorphism& a) {
    if (a.orientation_preserving) return false;
    const Dart n = static_cast<Dart>(a.image.size());
    for (Dart d = 0; d < n; ++d)
        if (a.image[a.image[d]] != d) return false;
    for (Dart d = 0; d < n; ++d)
        if (edge_of(a.image[d]) == edge_of(d) || map.tail(a.image[d]) == map.tail(d)) return true;
    return false;
}

}  // namespace

std::optional<std::string> point_group_name(int order, int op_order, int max_rotation, int mirrors) {
    const int n = max_rotation;
    const std::string ns = std::to_string(n);
    enum class Rot { cyclic, dihedral, tetrahedral, octahedral, icosahedral, unknown };
    Rot rot = Rot::unknown;
    if (op_order == n) rot = Rot::cyclic;
    else if (op_order == 2 * n) rot = Rot::dihedral;
    else if (op_order == 12 && n == 3) rot = Rot::tetrahedral;
    else if (op_order == 24 && n == 4) rot = Rot::octahedral;
    else if (op_order == 60 && n == 5) rot = Rot::icosahedral;
    if (rot == Rot::unknown) return std::nullopt;

    if (order == op_order) {
        switch (rot) {
            case Rot::cyclic: return "C" + ns;
            case Rot::dihedral: return "D" + ns;
            case Rot::tetrahedral: return "T";
            case Rot::octahedral: return "O";
            case Rot::icosahedral: return "I";
            default: return std::nullopt;
        }
    }
    if (order != 2 * op_order) return std::nullopt;
    switch (rot) {
        case Rot::cyclic:
            if (n == 1) return mirrors == 1 ? std::optional<std::string>("Cs") : "Ci";
            if (mirrors == n) return "C" + ns + "v";
            if (mirrors == 1) return "C" + ns + "h";
            if (mirrors == 0) return "S" + std::to_string(2 * n);
            return std::nullopt;
        case Rot::dihedral:
            if (mirrors == n + 1) return "D" + ns + "h";
            if (mirrors == n) return "D" + ns + "d";
            return std::nullopt;
        case Rot::tetrahedral:
            if (mirrors == 6) return "Td";
            if (mirrors == 3) return "Th";
            return std::nullopt;
        case Rot::octahedral: return mirrors == 9 ? std::optional<std::string>("Oh") : std::nullopt;
        case Rot::icosahedral: return mirrors == 15 ? std::optional<std::string>("Ih") : std::nullopt;
        default: return std::nullopt;
    }
}

SymmetryInfo symmetry_of(const PlanarMap& map, const FaceLabeling& labels) {
    SymmetryInfo info;
    const auto autos = automorphisms(map, labels);
    info.order = static_cast<int>(autos.size());
    info.op_order = 0;
    for (const auto& a : autos) {
        if (a.orientation_preserving) {
            ++info.op_order;
            info.max_rotation = std::max(info.max_rotation, permutation_order(a.image));
        } else {
            info.has_reflection = true;
            if (is_mirror(map, a)) ++info.mirrors;
        }
    }
    info.name = point_group_name(info.order, info.op_order, info.max_rotation, info.mirrors);
    return info;
}

SymmetryInfo symmetry_of_polycycle(const Polycycle& p) { return symmetry_of(p.map(), p.labels()); }

SymmetryInfo symmetry_of_graph(const Polycycle& p) {
    return symmetry_of(p.map(), FaceLabeling(p.map().face_count(), FaceKind::proper));
}

}  // namespace polycycle
