#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polycycle/error.hpp"

namespace polycycle {

// Darts are the two directed sides of an edge. Edge k owns darts 2k and 2k+1,
// so the edge involution is d ^ 1 and never needs to be stored.
using Dart = std::int32_t;

constexpr Dart opposite(Dart d) noexcept { return d ^ 1; }
constexpr int edge_of(Dart d) noexcept { return d >> 1; }

enum class FaceKind : std::uint8_t { proper = 0, hole = 1 };

// One label per face, indexed by face id (discovery order of PlanarMap::faces()).
using FaceLabeling = std::vector<FaceKind>;

// Label-invariant identifier of a labeled map up to (possibly orientation
// reversing) isomorphism. Stored as fixed-width big-endian 16-bit words so that
// byte-wise ordering equals the ordering of the underlying integer sequence.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }
    std::string hex() const;

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

private:
    std::string bytes_;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        return std::hash<std::string>{}(c.bytes());
    }
};

// One end of an edge as it appears in a vertex rotation.
using EdgeEnd = int;

// Connected sphere map given as a rotation system over darts.
//
// sigma(d) is the counterclockwise successor of d around its tail vertex and
// phi = sigma o alpha walks the darts of a face. Vertices and faces are the
// orbits of sigma and phi, numbered in the order they are discovered while
// scanning darts upwards (unless explicit vertex ids were given to build_map).
class PlanarMap {
public:
    PlanarMap() = default;

    // Build from a full sigma permutation. Throws Disconnected if the darts do
    // not form a single orbit under <sigma, alpha>.
    static PlanarMap from_sigma(std::vector<Dart> sigma);

    int dart_count() const noexcept { return static_cast<int>(sigma_.size()); }
    int edge_count() const noexcept { return dart_count() / 2; }
    int vertex_count() const noexcept { return static_cast<int>(vertex_darts_.size()); }
    int face_count() const noexcept { return static_cast<int>(face_darts_.size()); }

    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart phi(Dart d) const { return phi_[d]; }
    Dart alpha(Dart d) const { return opposite(d); }

    int tail(Dart d) const { return vertex_of_[d]; }
    int head(Dart d) const { return vertex_of_[opposite(d)]; }
    int face_of(Dart d) const { return face_of_[d]; }
    int degree(int v) const { return static_cast<int>(vertex_darts_[v].size()); }
    int face_size(int f) const { return static_cast<int>(face_darts_[f].size()); }

    // Darts leaving v in counterclockwise order.
    const std::vector<Dart>& vertex_darts(int v) const { return vertex_darts_[v]; }
    // Darts of face f in phi order, starting at the smallest dart.
    const std::vector<Dart>& face_darts(int f) const { return face_darts_[f]; }
    const std::vector<std::vector<Dart>>& faces() const { return face_darts_; }

    const std::vector<Dart>& sigma_permutation() const { return sigma_; }

    int euler_characteristic() const { return vertex_count() - edge_count() + face_count(); }

private:
    friend PlanarMap build_map(const std::vector<std::vector<EdgeEnd>>&);
    void derive(std::vector<int> vertex_of, int vertex_count);

    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    std::vector<Dart> phi_;
    std::vector<int> vertex_of_;
    std::vector<int> face_of_;
    std::vector<std::vector<Dart>> vertex_darts_;
    std::vector<std::vector<Dart>> face_darts_;
};

// vertex_rotations[v] lists the edge ids incident to v in counterclockwise
// order. The first occurrence of edge k (scanning vertices in order) becomes
// dart 2k, the second dart 2k+1.
PlanarMap build_map(const std::vector<std::vector<EdgeEnd>>& vertex_rotations);

// True iff V - E + F = 2.
bool euler_genus_check(const PlanarMap& map);

// Orientation of a flag: +1 uses sigma, -1 uses sigma^-1 (mirror image).
struct Flag {
    Dart dart;
    int orientation;
};

CanonicalCode canonical_code(const PlanarMap& map, const FaceLabeling& labels);

// A map automorphism as a dart permutation; orientation_preserving is false
// for reflections.
struct MapAutomorphism {
    std::vector<Dart> image;
    bool orientation_preserving;
};

// All label-preserving automorphisms, reflections included, identity first.
std::vector<MapAutomorphism> automorphisms(const PlanarMap& map, const FaceLabeling& labels);

// Canonical code together with the number of flags attaining it (= group order).
struct CanonicalForm {
    CanonicalCode code;
    std::vector<Flag> minimal_flags;
};
CanonicalForm canonical_form(const PlanarMap& map, const FaceLabeling& labels);

// Relabel darts through a random edge permutation and random edge reversal.
// Used by property tests; seed makes it reproducible.
PlanarMap relabel_darts(const PlanarMap& map, std::span<const Dart> dart_image);

}  // namespace polycycle
