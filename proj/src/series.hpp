#pragma once

// Band surgery behind the series generators.

#include <optional>

#include "polycycle/families.hpp"

namespace polycycle::detail {

// Shortest path across the pentagon (q = 3) or triangle (q = 5) band: both
// ends on a hole, internal vertices interior, no hole edges.
struct Transversal {
    std::vector<int> vertices;
    std::vector<Dart> darts;
};

// Faces between two transversals one translation period apart.
struct Slab {
    Transversal first;
    Transversal second;
    std::vector<int> faces;
};

int band_gon(int q);
int band_period(int q);
int transversal_length(int q);

std::vector<Transversal> transversals(const Polycycle& p);
std::vector<char> left_side(const Polycycle& p, const Transversal& t);
std::vector<Slab> slabs(const Polycycle& p);

// Insert a second copy of the slab right after the first one.
std::optional<Polycycle> duplicate_slab(const Polycycle& p, const Slab& s);

}  // namespace polycycle::detail
