#include "series.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polycycle {
namespace detail {

namespace {

using Rotations = std::vector<std::vector<int>>;

Rotations edge_rotations(const PlanarMap& m) {
    Rotations rot(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v)
        for (Dart d : m.vertex_darts(v)) rot[v].push_back(edge_of(d));
    return rot;
}

}  // namespace

int band_gon(int q) { return q == 3 ? 5 : 3; }
int band_period(int q) { return q == 3 ? 2 : 6; }
int transversal_length(int q) { return q == 3 ? 3 : 2; }

std::vector<Transversal> transversals(const Polycycle& p) {
    const auto& m = p.map();
    const int len = transversal_length(p.params().q);
    std::vector<Transversal> out;
    // depth-first over darts; internal vertices interior, ends on a hole
    std::vector<Dart> path;
    std::vector<char> used(m.vertex_count(), 0);
    auto extend = [&](auto&& self, int v) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (!p.on_boundary(v)) return;
            Transversal t;
            t.vertices.push_back(m.tail(path.front()));
            for (Dart d : path) {
                t.vertices.push_back(m.head(d));
                t.darts.push_back(d);
            }
            out.push_back(std::move(t));
            return;
        }
        if (!path.empty() && p.on_boundary(v)) return;
        for (Dart d : m.vertex_darts(v)) {
            if (p.is_hole_dart(d) || p.is_hole_dart(opposite(d))) continue;
            const int w = m.head(d);
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(d);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (!p.on_boundary(v)) continue;
        used[v] = 1;
        extend(extend, v);
        used[v] = 0;
    }
    return out;
}

// Proper faces reachable from the face on the left of the first transversal
// dart without crossing the transversal; empty if the cut does not separate.
std::vector<char> left_side(const Polycycle& p, const Transversal& t) {
    const auto& m = p.map();
    std::vector<char> blocked(m.edge_count(), 0);
    for (Dart d : t.darts) blocked[edge_of(d)] = 1;
    std::vector<char> side(m.face_count(), 0);
    const int start = m.face_of(t.darts.front());
    if (p.is_hole(start)) return {};
    std::vector<int> stack{start};
    side[start] = 1;
    while (!stack.empty()) {
        const int f = stack.back();
        stack.pop_back();
        for (Dart d : m.face_darts(f)) {
            if (blocked[edge_of(d)]) continue;
            const int g = m.face_of(opposite(d));
            if (p.is_hole(g) || side[g]) continue;
            side[g] = 1;
            stack.push_back(g);
        }
    }
    for (Dart d : t.darts)
        if (side[m.face_of(opposite(d))]) return {};
    return side;
}

std::vector<Slab> slabs(const Polycycle& p) {
    const auto& m = p.map();
    const int q = p.params().q;
    const auto ts = transversals(p);
    std::vector<std::vector<char>> left(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) left[i] = left_side(p, ts[i]);
    std::vector<Slab> out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (left[i].empty()) continue;
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (i == j || left[j].empty()) continue;
            // slab = left(t2) minus left(t1), with left(t1) inside left(t2)
            std::vector<int> faces;
            bool nested = true;
            for (int f = 0; f < m.face_count() && nested; ++f) {
                if (left[i][f] && !left[j][f]) nested = false;
                if (left[j][f] && !left[i][f]) faces.push_back(f);
            }
            if (!nested || static_cast<int>(faces.size()) != band_period(q)) continue;
            bool band = true;
            for (int f : faces) band = band && m.face_size(f) == band_gon(q);
            std::set<int> shared;
            for (int v : ts[i].vertices) shared.insert(v);
            for (int v : ts[j].vertices) band = band && !shared.count(v);
            if (band) out.push_back({ts[i], ts[j], faces});
        }
    }
    return out;
}

std::optional<Polycycle> duplicate_slab(const Polycycle& p, const Slab& s) {
    const auto& m = p.map();
    const int n = m.vertex_count();
    const int edges = m.edge_count();
    const Rotations rot = edge_rotations(m);
    const auto& t1 = s.first.vertices;
    const auto& t2 = s.second.vertices;
    const int len = static_cast<int>(t1.size());

    std::vector<char> in_slab(m.face_count(), 0);
    for (int f : s.faces) in_slab[f] = 1;
    std::vector<char> path_edge(edges, 0);
    for (Dart d : s.first.darts) path_edge[edge_of(d)] = 1;
    for (Dart d : s.second.darts) path_edge[edge_of(d)] = 2;
    std::vector<char> slab_edge(edges, 0);
    for (int e = 0; e < edges; ++e)
        if (!path_edge[e] && (in_slab[m.face_of(2 * e)] || in_slab[m.face_of(2 * e + 1)])) slab_edge[e] = 1;

    std::vector<int> role(n, 0);  // 0 outside, 1 on t1, 2 on t2, 3 inside the slab
    std::vector<int> index(n, -1);
    for (int i = 0; i < len; ++i) {
        role[t1[i]] = 1;
        index[t1[i]] = i;
        role[t2[i]] = 2;
        index[t2[i]] = i;
    }
    for (int f : s.faces)
        for (Dart d : m.face_darts(f))
            if (role[m.tail(d)] == 0) role[m.tail(d)] = 3;

    // new ids: copies of slab edges, copies of t2 path edges, copies of inner vertices, t2 copies
    std::vector<int> edge_copy(edges, -1);
    int next_edge = edges;
    for (int e = 0; e < edges; ++e)
        if (slab_edge[e] || path_edge[e] == 2) edge_copy[e] = next_edge++;
    // t1 path edges inside the copy coincide with the t2 path edges
    for (int i = 0; i + 1 < len; ++i) edge_copy[edge_of(s.first.darts[i])] = edge_of(s.second.darts[i]);
    std::vector<int> vertex_copy(n, -1);
    int next_vertex = n;
    for (int v = 0; v < n; ++v)
        if (role[v] == 3 || role[v] == 2) vertex_copy[v] = next_vertex++;

    auto is_slab_side = [&](int e) { return slab_edge[e] != 0; };
    // cyclic segment of rot satisfying pred, starting right after a non-member
    auto segment = [](const std::vector<int>& r, auto pred) -> std::pair<int, int> {
        const int k = static_cast<int>(r.size());
        int count = 0, start = -1;
        for (int i = 0; i < k; ++i)
            if (pred(r[i])) ++count;
        if (count == 0) return {0, 0};
        for (int i = 0; i < k; ++i)
            if (pred(r[i]) && !pred(r[(i + k - 1) % k])) {
                if (start >= 0) return {-1, -1};  // not contiguous
                start = i;
            }
        if (start < 0) return {-1, -1};
        return {start, count};
    };
    auto read = [](const std::vector<int>& r, std::pair<int, int> seg) {
        std::vector<int> out;
        for (int i = 0; i < seg.second; ++i) out.push_back(r[(seg.first + i) % r.size()]);
        return out;
    };
    auto splice = [](const std::vector<int>& r, std::pair<int, int> seg, const std::vector<int>& with,
                     std::optional<int> anchor_edge) -> std::optional<std::vector<int>> {
        const int k = static_cast<int>(r.size());
        std::vector<int> out;
        if (seg.second == 0) {
            // empty block: insert right after the anchor (a path edge on the matching side)
            if (with.empty()) return r;
            if (!anchor_edge) return std::nullopt;
            for (int i = 0; i < k; ++i) {
                out.push_back(r[i]);
                if (r[i] == *anchor_edge) out.insert(out.end(), with.begin(), with.end());
            }
            return out;
        }
        for (int i = 0; i < k; ++i) {
            const int rel = ((i - seg.first) % k + k) % k;
            if (rel == 0) out.insert(out.end(), with.begin(), with.end());
            if (rel >= seg.second) out.push_back(r[i]);
        }
        return out;
    };

    Rotations out(next_vertex);
    for (int v = 0; v < n; ++v) out[v] = rot[v];
    for (int i = 0; i < len; ++i) {
        const int u = t1[i], v = t2[i];
        const auto s_u = segment(rot[u], is_slab_side);
        auto is_far = [&](int e) { return !slab_edge[e] && !path_edge[e]; };
        const auto s_v = segment(rot[v], is_slab_side);
        const auto r_v = segment(rot[v], is_far);
        if (s_u.first < 0 || s_v.first < 0 || r_v.first < 0) return std::nullopt;
        std::vector<int> copied_u;
        for (int e : read(rot[u], s_u)) copied_u.push_back(edge_copy[e]);
        // the path edge of t2 that the far block follows or precedes
        std::optional<int> anchor;
        if (r_v.second == 0 && !copied_u.empty()) {
            // locate where u's slab block sits relative to u's first path edge and mirror at v
            const int k = static_cast<int>(rot[u].size());
            const int before = rot[u][(s_u.first + k - 1) % k];
            if (path_edge[before] != 1) return std::nullopt;
            // same position among t2 path edges
            for (int j = 0; j + 1 < len; ++j)
                if (edge_of(s.first.darts[j]) == before) anchor = edge_of(s.second.darts[j]);
            if (!anchor) return std::nullopt;
        }
        auto middle = splice(rot[v], r_v, copied_u, anchor);
        if (!middle) return std::nullopt;
        out[v] = *middle;
        // copy of v: its slab block copied, path edges copied, far block kept
        std::vector<int> copy_v;
        for (int e : rot[v]) {
            if (path_edge[e] == 2 || slab_edge[e]) copy_v.push_back(edge_copy[e]);
            else copy_v.push_back(e);
        }
        out[vertex_copy[v]] = copy_v;
    }
    for (int w = 0; w < n; ++w) {
        if (role[w] != 3) continue;
        std::vector<int> c;
        for (int e : rot[w]) c.push_back(edge_copy[e]);
        out[vertex_copy[w]] = c;
    }

    // hole darts: remember the tail vertex of each hole dart, per new edge id
    std::vector<int> hole_tail(next_edge, -1);
    auto moved = [&](int x, int e) {
        // endpoint of original edge e at original vertex x after the surgery
        if (role[x] == 2 && !slab_edge[e] && !path_edge[e]) return vertex_copy[x];
        return x;
    };
    auto copied = [&](int x) {
        if (role[x] == 1) return t2[index[x]];
        return vertex_copy[x];
    };
    for (int e = 0; e < edges; ++e)
        for (Dart d : {2 * e, 2 * e + 1})
            if (p.is_hole_dart(d)) {
                hole_tail[e] = moved(m.tail(d), e);
                if (edge_copy[e] >= edges) hole_tail[edge_copy[e]] = copied(m.tail(d));
            }

    try {
        PlanarMap nm = build_map(out);
        FaceLabeling labels(nm.face_count(), FaceKind::proper);
        for (Dart d = 0; d < nm.dart_count(); ++d)
            if (hole_tail[edge_of(d)] == nm.tail(d)) labels[nm.face_of(d)] = FaceKind::hole;
        Polycycle r = validate(std::move(nm), std::move(labels), p.params());
        if (r.proper_face_count() != p.proper_face_count() + band_period(p.params().q)) return std::nullopt;
        return r;
    } catch (const PolycycleError&) {
        return std::nullopt;
    }
}

}  // namespace detail
}  // namespace polycycle
