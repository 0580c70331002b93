#pragma once

#include <optional>
#include <vector>

#include "polycycle/planar_map.hpp"

namespace polycycle {

enum class Ellipticity { elliptic, parabolic, hyperbolic };

std::string_view to_string(Ellipticity e) noexcept;

// Allowed gon sizes R and maximal valency q.
struct PolycycleParams {
    std::vector<int> gon_sizes;  // sorted, unique, all >= 2
    int q = 3;

    // Throws BadParams unless R is nonempty with members >= 2 and q >= 3.
    static PolycycleParams make(std::vector<int> gon_sizes, int q);

    int r() const { return gon_sizes.back(); }
    bool allows(int size) const;
    // 1/q + 1/r - 1/2 as an exact fraction numerator / denominator (denominator > 0).
    std::pair<int, int> ellipticity_value() const;

    bool operator==(const PolycycleParams&) const = default;
};

Ellipticity ellipticity(const PolycycleParams& params);

// A plane graph with its faces split into proper faces and holes, satisfying
// the polycycle axioms. Only obtainable through validate() or operations that
// revalidate, so every instance is valid.
class Polycycle {
public:
    const PlanarMap& map() const noexcept { return map_; }
    const PolycycleParams& params() const noexcept { return params_; }
    const FaceLabeling& labels() const noexcept { return labels_; }

    bool is_hole(int face) const { return labels_[face] == FaceKind::hole; }
    bool is_hole_dart(Dart d) const { return is_hole(map_.face_of(d)); }
    std::vector<int> holes() const;
    std::vector<int> proper_faces() const;
    int proper_face_count() const;
    int hole_count() const { return map_.face_count() - proper_face_count(); }

    // Vertex lies on the boundary of some hole.
    bool on_boundary(int v) const { return boundary_[v]; }
    // The unique hole dart entering v, or -1 for interior vertices.
    Dart hole_dart_into(int v) const { return hole_in_[v]; }

private:
    friend Polycycle validate(PlanarMap map, FaceLabeling labels, PolycycleParams params);

    PlanarMap map_;
    PolycycleParams params_;
    FaceLabeling labels_;
    std::vector<char> boundary_;
    std::vector<Dart> hole_in_;
};

// Checks the polycycle axioms. Errors: BadGonSize, HolesShareVertex,
// DegreeTooHigh, InteriorNotQValent, EmptyPartition, NotTwoConnected,
// NotSpherical.
Polycycle validate(PlanarMap map, FaceLabeling labels, PolycycleParams params);

// Same map and labels checked against other parameters.
Polycycle with_params(const Polycycle& p, PolycycleParams params);

enum class EdgeClass { boundary, bridge, interior };

struct EdgeClassification {
    std::vector<EdgeClass> kind;  // per edge id
    std::vector<char> open;       // per edge id; only boundary edges can be open

    int count(EdgeClass c) const;
};

EdgeClassification classify_edges(const Polycycle& p);
bool is_elementary(const Polycycle& p);
std::vector<int> open_edges(const Polycycle& p);
std::vector<int> bridges(const Polycycle& p);

struct BoundarySequence {
    int hole = -1;
    std::vector<int> degrees;  // lexicographically least over rotations and reversal

    bool operator==(const BoundarySequence&) const = default;
};

BoundarySequence boundary_sequence(const Polycycle& p, int hole);
// Canonical (least rotation / reflection) form of a cyclic sequence.
std::vector<int> canonical_cyclic(std::vector<int> seq);
// True iff b occurs in the cyclic sequence a read forwards or backwards.
// Requires b.size() < a.size(); returns false otherwise.
bool is_pattern(std::span<const int> b, std::span<const int> a);

// Gluing instruction for a new face. Runs are consecutive hole darts (phi
// order) of one hole, listed in the order the hole visits them; free_after[j]
// new edges follow run j before the face meets run j+1. A zero free length
// merges the end vertex of run j with the start vertex of run j+1.
struct GluedRun {
    Dart first;
    int length;
};

struct Attachment {
    int gon_size = 0;
    std::vector<GluedRun> runs;
    std::vector<int> free_after;

    // A run of `length` hole darts starting at `first`, closed by new edges.
    static Attachment along_run(Dart first, int length, int gon_size);
};

struct AttachResult {
    Polycycle polycycle;
    std::vector<Dart> dart_map;  // old dart -> new dart, -1 if it disappeared
    int new_face = -1;
};

// Errors: SizeNotInR, BadRun, HoleCollision, DegreeOverflow, ResultViolatesAxioms.
Polycycle add_face(const Polycycle& p, const Attachment& a);
AttachResult attach_face(const Polycycle& p, const Attachment& a);

// Visit every structurally possible attachment of a gon_size-face into `hole`
// whose runs include `anchor` (pass -1 for no constraint). Degree bounds are
// pre-checked; the callback still has to build and validate the result.
// Return false from the callback to stop early.
template <typename F>
void for_each_attachment(const Polycycle& p, int hole, int gon_size, Dart anchor, F&& callback);

// Turn a proper face into hole content, splitting vertices and dropping edges
// as needed. Errors: LastProperFace, NotAProperFace, ResultNotTwoConnected,
// ResultViolatesAxioms (with inner cause).
Polycycle remove_face(const Polycycle& p, int face);

// Identify an open edge of p1 with an open edge of p2; flip glues the mirror
// image of p2. Errors: NotOpen, DegreeOverflow, ResultViolatesAxioms.
Polycycle agglomerate(const Polycycle& p1, int edge1, const Polycycle& p2, int edge2, bool flip);
// Glue two distinct open edges of the same polycycle.
Polycycle agglomerate_self(const Polycycle& p, int edge1, int edge2);

// One cut bridge: the two copies of the edge as (piece index, proper dart).
struct Seam {
    int piece_a;
    Dart dart_a;
    int piece_b;
    Dart dart_b;
};

struct Decomposition {
    std::vector<Polycycle> pieces;  // elementary, ordered by canonical code
    std::vector<Seam> seams;
};

Decomposition decompose(const Polycycle& p);
// Glue the pieces back along the recorded seams.
Polycycle reassemble(const Decomposition& d);

// Only defined for q = 3 (WrongValence otherwise).
bool is_totally_elementary(const Polycycle& p);
bool is_extensible(const Polycycle& p);

CanonicalCode canonical_code(const Polycycle& p);
// Partition-blind code: holes and proper faces indistinguishable, sizes kept.
CanonicalCode graph_code(const Polycycle& p);
bool is_isomorphic(const Polycycle& a, const Polycycle& b);
// The isomorphic copy rebuilt from its canonical code, so equal codes give
// identical dart numberings.
Polycycle canonical_polycycle(const Polycycle& p);

// Mirror image (orientation reversed).
Polycycle mirror(const Polycycle& p);
// Random dart relabelling, used by property tests.
Polycycle relabel(const Polycycle& p, std::span<const Dart> dart_image);

}  // namespace polycycle

#include "polycycle/detail/attachments.hpp"
