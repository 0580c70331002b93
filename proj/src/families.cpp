#include "polycycle/families.hpp"

#include <algorithm>
#include <array>

namespace polycycle {

std::string FamilyTag::to_string() const {
    switch (kind) {
        case FamilyKind::sporadic: return "sporadic";
        case FamilyKind::monocycle: return "monocycle(" + std::to_string(a) + ")";
        case FamilyKind::gon_triple:
            return "triple(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        case FamilyKind::barrel: return "barrel(" + std::to_string(a) + ")";
        case FamilyKind::snub_antiprism: return "snub-antiprism(" + std::to_string(a) + ")";
        case FamilyKind::series: return "series(" + std::to_string(q) + "," + pair + "," + std::to_string(n) + ")";
    }
    return "?";
}

namespace {

// Build a polycycle from explicit counterclockwise rotations; faces for which
// is_hole_face returns true become holes.
template <typename Pred>
Polycycle assemble(const std::vector<std::vector<EdgeEnd>>& rotations, PolycycleParams params, Pred is_hole_face) {
    PlanarMap m = build_map(rotations);
    FaceLabeling labels(m.face_count(), FaceKind::proper);
    for (int f = 0; f < m.face_count(); ++f)
        if (is_hole_face(m, f)) labels[f] = FaceKind::hole;
    return validate(std::move(m), std::move(labels), std::move(params));
}

// Edge ids are handed out on first request for an unordered key.
class EdgeIds {
public:
    int operator()(int u, int v) {
        const std::pair<int, int> key = std::minmax(u, v);
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] == key) return static_cast<int>(i);
        keys_.push_back(key);
        return static_cast<int>(keys_.size()) - 1;
    }
    // Always a fresh id (parallel edges).
    int fresh() {
        keys_.emplace_back(-1, -1);
        return static_cast<int>(keys_.size()) - 1;
    }

private:
    std::vector<std::pair<int, int>> keys_;
};

int wrap(int i, int n) { return ((i % n) + n) % n; }

// Ring edges of an m-cycle as edge ids (parallel for m = 2).
std::vector<int> ring(EdgeIds& ids, int m) {
    std::vector<int> out(m);
    for (int i = 0; i < m; ++i) out[i] = ids.fresh();
    return out;
}

}  // namespace

Polycycle monocycle(int i) {
    if (i < 2) throw PolycycleError(ErrorKind::bad_size, "monocycle needs i >= 2");
    std::vector<std::vector<EdgeEnd>> rot(i);
    for (int v = 0; v < i; ++v) rot[v] = {wrap(v - 1, i), v};
    return assemble(rot, PolycycleParams::make({i}, 3),
                    [](const PlanarMap& m, int f) { return f != m.face_of(0); });
}

Polycycle gon_triple(int i, int j, int k) {
    std::array<int, 3> sizes{i, j, k};
    for (int s : sizes)
        if (s < 3 || s > 5) throw PolycycleError(ErrorKind::bad_size, "triple sizes must be in {3,4,5}");
    std::sort(sizes.begin(), sizes.end());
    // vertex 0 is the centre, 1..3 its neighbours; face t lies between spokes t and t+1
    // and closes with a path of sizes[t] - 2 edges from x_t to x_{t+1}.
    EdgeIds ids;
    std::vector<std::vector<EdgeEnd>> rot(4);
    std::array<std::vector<int>, 3> path_edges;
    std::array<std::vector<int>, 3> path_vertices;
    int next_vertex = 4;
    for (int t = 0; t < 3; ++t) {
        const int from = 1 + t, to = 1 + (t + 1) % 3;
        std::vector<int> verts{from};
        for (int s = 0; s < sizes[t] - 3; ++s) verts.push_back(next_vertex++);
        verts.push_back(to);
        path_vertices[t] = verts;
        for (std::size_t s = 0; s + 1 < verts.size(); ++s) path_edges[t].push_back(ids(verts[s], verts[s + 1]));
    }
    rot.resize(next_vertex);
    for (int t = 0; t < 3; ++t) rot[0].push_back(ids(0, 1 + t));
    for (int t = 0; t < 3; ++t) {
        // x_t: spoke, then path of face t - 1 arriving, then path of face t leaving (clockwise
        // order reversed so that the centre side faces are the proper ones)
        const int x = 1 + t;
        const int prev = (t + 2) % 3;
        rot[x] = {ids(0, x), path_edges[prev].back(), path_edges[t].front()};
        for (std::size_t s = 1; s + 1 < path_vertices[t].size(); ++s)
            rot[path_vertices[t][s]] = {path_edges[t][s], path_edges[t][s - 1]};
    }
    return assemble(rot, PolycycleParams::make({3, 4, 5}, 3), [](const PlanarMap& m, int f) {
        for (Dart d : m.face_darts(f))
            if (m.tail(d) == 0) return false;
        return true;
    });
}

Polycycle barrel(int m) {
    if (m < 2) throw PolycycleError(ErrorKind::bad_size, "barrel needs m >= 2");
    // a_i = i, b_i = m + i, c_j = 2m + j (0-based i in [0,m), j in [0,2m));
    // a_i sits on c_{2i}, b_i on c_{2i+1}.
    EdgeIds ids;
    const auto ea = ring(ids, m);
    const auto eb = ring(ids, m);
    const auto ec = ring(ids, 2 * m);
    const int a0 = 0, b0 = m, c0 = 2 * m;
    std::vector<std::vector<EdgeEnd>> rot(4 * m);
    for (int i = 0; i < m; ++i) {
        rot[a0 + i] = {ids(a0 + i, c0 + 2 * i), ea[i], ea[wrap(i - 1, m)]};
        rot[b0 + i] = {eb[i], ids(b0 + i, c0 + 2 * i + 1), eb[wrap(i - 1, m)]};
    }
    for (int j = 0; j < 2 * m; ++j) {
        const int c = c0 + j;
        if (j % 2 == 0)
            rot[c] = {ec[j], ids(a0 + j / 2, c), ec[wrap(j - 1, 2 * m)]};
        else
            rot[c] = {ids(b0 + j / 2, c), ec[j], ec[wrap(j - 1, 2 * m)]};
    }
    const int ring_edges = 2 * m;
    return assemble(rot, PolycycleParams::make({3, 4, 5}, 3), [&](const PlanarMap& map, int f) {
        for (Dart d : map.face_darts(f))
            if (edge_of(d) >= ring_edges) return false;
        return true;
    });
}

Polycycle snub_antiprism(int m) {
    if (m < 2) throw PolycycleError(ErrorKind::bad_size, "snub antiprism needs m >= 2");
    // a_i adjacent to c_{2i-1}, c_{2i}, c_{2i+1}; b_i to c_{2i}, c_{2i+1}, c_{2i+2} (0-based,
    // indices of c mod 2m); a_i sits on c_{2i}, b_i on c_{2i+1}.
    EdgeIds ids;
    const auto ea = ring(ids, m);
    const auto eb = ring(ids, m);
    const auto ec = ring(ids, 2 * m);
    const int a0 = 0, b0 = m, c0 = 2 * m;
    const int n2 = 2 * m;
    auto c = [&](int j) { return c0 + wrap(j, n2); };
    std::vector<std::vector<EdgeEnd>> rot(4 * m);
    for (int i = 0; i < m; ++i) {
        const int a = a0 + i, b = b0 + i;
        rot[a] = {ids(a, c(2 * i - 1)), ids(a, c(2 * i)), ids(a, c(2 * i + 1)), ea[i], ea[wrap(i - 1, m)]};
        rot[b] = {eb[i], ids(b, c(2 * i + 2)), ids(b, c(2 * i + 1)), ids(b, c(2 * i)), eb[wrap(i - 1, m)]};
    }
    for (int j = 0; j < n2; ++j) {
        const int cj = c(j);
        if (j % 2 == 0) {
            const int i = j / 2;
            rot[cj] = {ids(b0 + wrap(i - 1, m), cj), ids(b0 + i, cj), ec[j], ids(a0 + i, cj), ec[wrap(j - 1, n2)]};
        } else {
            const int i = (j - 1) / 2;
            rot[cj] = {ids(b0 + i, cj), ec[j], ids(a0 + wrap(i + 1, m), cj), ids(a0 + i, cj), ec[wrap(j - 1, n2)]};
        }
    }
    const int ring_edges = 2 * m;
    return assemble(rot, PolycycleParams::make({2, 3}, 5), [&](const PlanarMap& map, int f) {
        for (Dart d : map.face_darts(f))
            if (edge_of(d) >= ring_edges) return false;
        return true;
    });
}

}  // namespace polycycle
