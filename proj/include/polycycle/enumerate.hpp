#pragma once

#include <functional>
#include <optional>

#include "polycycle/families.hpp"

namespace polycycle {

enum class EnumerationMode { elementary, totally_elementary };

struct EnumerationTask {
    PolycycleParams params;
    int max_faces = 12;
    EnumerationMode mode = EnumerationMode::elementary;
    int threads = 1;
};

struct CatalogEntry {
    Polycycle polycycle;
    CanonicalCode code;
    int face_count = 0;
    int hole_count = 0;
    int aut_p_order = 0;
    int aut_g_order = 0;
    bool extensible = false;
    FamilyTag family;
};

// Default face bound per valency: 12 for q = 3, 20 for q = 4 and q = 5.
int default_max_faces(int q);

// Isomorph-free list of elementary polycycles with at most max_faces proper
// faces, sorted by (face count, canonical code). Errors: NotElliptic,
// BoundTooSmall.
std::vector<CatalogEntry> enumerate_elementary(const EnumerationTask& task);
// q = 3 only (WrongValence otherwise).
std::vector<CatalogEntry> enumerate_totally_elementary(const EnumerationTask& task);

// Every polycycle with at most max_faces proper faces reachable by single
// face additions from isolated gons, filtered to elementary. Exponential;
// meant as an independent check at small bounds.
std::vector<CatalogEntry> brute_force_elementary(const PolycycleParams& params, int max_faces);

// Family of P by canonical-code match against the generators.
FamilyTag family_of(const Polycycle& p);

struct Classification {
    FamilyTag family;
    int index = -1;  // position in the catalog
};

// Errors: NotInCatalog.
Classification classify(const Polycycle& p, const std::vector<CatalogEntry>& catalog);

// Groups (as catalog indices) of at least two entries sharing the underlying
// sphere map with all face sizes kept.
std::vector<std::vector<int>> coincidence_classes(const std::vector<CatalogEntry>& catalog);

bool is_sporadic(const FamilyTag& tag);
bool contains_gon(const Polycycle& p, int size);

}  // namespace polycycle
