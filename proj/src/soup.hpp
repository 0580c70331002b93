#pragma once

// Mutable dart-level workspace for surgery on polycycles. Unlike PlanarMap the
// edge involution is explicit, darts may die, and the structure may be
// disconnected while an operation is in progress.

#include <vector>

#include "polycycle/polycycle.hpp"

namespace polycycle::detail {

struct Soup {
    std::vector<Dart> sigma;
    std::vector<Dart> alpha;
    std::vector<char> hole;
    std::vector<char> alive;

    static Soup from(const Polycycle& p);
    // Disjoint union; darts of b are shifted by a.size().
    static Soup join(const Soup& a, const Soup& b);

    int size() const { return static_cast<int>(sigma.size()); }
    Dart phi(Dart d) const { return sigma[alpha[d]]; }
    Dart sigma_pred(Dart d) const;

    // Appends an edge; returns its first dart (second is +1).
    Dart new_edge(bool hole_first, bool hole_second);
    void kill_from_rotation(Dart d);

    // Reflect: reverse rotations and move face labels across edges.
    void mirror();

    // Cut the rotation of every vertex with two or more hole corners into one
    // vertex per proper fan.
    void split_hole_corners();

    // Rebuild sigma from a full face permutation on live darts.
    void set_phi(const std::vector<Dart>& phi);

    // Connected components of live darts (each sorted ascending).
    std::vector<std::vector<Dart>> components() const;

    struct Compacted {
        PlanarMap map;
        FaceLabeling labels;
        std::vector<Dart> dart_map;  // soup dart -> map dart, -1 outside the component
    };
    Compacted compact(const std::vector<Dart>& component) const;
    Compacted compact_all() const;
};

}  // namespace polycycle::detail
