#include "polycycle/polycycle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "soup.hpp"

namespace polycycle {

using detail::Soup;

std::string_view to_string(Ellipticity e) noexcept {
    switch (e) {
        case Ellipticity::elliptic: return "elliptic";
        case Ellipticity::parabolic: return "parabolic";
        case Ellipticity::hyperbolic: return "hyperbolic";
    }
    return "?";
}

PolycycleParams PolycycleParams::make(std::vector<int> gon_sizes, int q) {
    std::sort(gon_sizes.begin(), gon_sizes.end());
    gon_sizes.erase(std::unique(gon_sizes.begin(), gon_sizes.end()), gon_sizes.end());
    if (gon_sizes.empty() || gon_sizes.front() < 2)
        throw PolycycleError(ErrorKind::bad_params, "R must be nonempty with all members >= 2");
    if (q < 3) throw PolycycleError(ErrorKind::bad_params, "q must be >= 3");
    return PolycycleParams{std::move(gon_sizes), q};
}

bool PolycycleParams::allows(int size) const {
    return std::binary_search(gon_sizes.begin(), gon_sizes.end(), size);
}

std::pair<int, int> PolycycleParams::ellipticity_value() const {
    // 1/q + 1/r - 1/2 = (2r + 2q - qr) / (2qr)
    return {2 * r() + 2 * q - q * r(), 2 * q * r()};
}

Ellipticity ellipticity(const PolycycleParams& params) {
    const int num = params.ellipticity_value().first;
    if (num > 0) return Ellipticity::elliptic;
    if (num == 0) return Ellipticity::parabolic;
    return Ellipticity::hyperbolic;
}

std::vector<int> Polycycle::holes() const {
    std::vector<int> out;
    for (int f = 0; f < map_.face_count(); ++f)
        if (is_hole(f)) out.push_back(f);
    return out;
}

std::vector<int> Polycycle::proper_faces() const {
    std::vector<int> out;
    for (int f = 0; f < map_.face_count(); ++f)
        if (!is_hole(f)) out.push_back(f);
    return out;
}

int Polycycle::proper_face_count() const {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), FaceKind::proper));
}

namespace {

std::string vtx(int v) { return "vertex " + std::to_string(v); }

bool two_connected(const PlanarMap& m) {
    const int n = m.vertex_count();
    if (n <= 2) return true;
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool ok = true;
    // iterative DFS tracking the parent edge so parallel edges count as back edges
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
        int children;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0, 0});
    while (!stack.empty() && ok) {
        Frame& fr = stack.back();
        const auto& darts = m.vertex_darts(fr.v);
        if (fr.next < darts.size()) {
            const Dart d = darts[fr.next++];
            const int e = edge_of(d);
            if (e == fr.parent_edge) continue;
            const int w = m.head(d);
            if (disc[w] < 0) {
                disc[w] = low[w] = timer++;
                ++fr.children;
                stack.push_back({w, e, 0, 0});
            } else {
                low[fr.v] = std::min(low[fr.v], disc[w]);
            }
        } else {
            const Frame done = fr;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& parent = stack.back();
                low[parent.v] = std::min(low[parent.v], low[done.v]);
                if (parent.parent_edge >= 0 && low[done.v] >= disc[parent.v]) ok = false;
            } else if (done.children > 1) {
                ok = false;
            }
        }
    }
    if (!ok) return false;
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) return false;
    return true;
}

}  // namespace

Polycycle validate(PlanarMap map, FaceLabeling labels, PolycycleParams params) {
    if (static_cast<int>(labels.size()) != map.face_count())
        throw PolycycleError(ErrorKind::bad_params, "labeling does not cover every face");
    const auto props = std::count(labels.begin(), labels.end(), FaceKind::proper);
    if (props == 0 || props == static_cast<long>(labels.size()))
        throw PolycycleError(ErrorKind::empty_partition, "both proper faces and holes are required");
    if (!euler_genus_check(map))
        throw PolycycleError(ErrorKind::not_spherical, "V - E + F = " + std::to_string(map.euler_characteristic()));
    for (Dart d = 0; d < map.dart_count(); d += 2)
        if (map.tail(d) == map.head(d))
            throw PolycycleError(ErrorKind::not_two_connected, "loop at " + vtx(map.tail(d)));
    for (int f = 0; f < map.face_count(); ++f)
        if (labels[f] == FaceKind::proper && !params.allows(map.face_size(f)))
            throw PolycycleError(ErrorKind::bad_gon_size,
                                 "face " + std::to_string(f) + " has size " + std::to_string(map.face_size(f)));

    const int n = map.vertex_count();
    std::vector<char> boundary(n, 0);
    std::vector<Dart> hole_in(n, -1);
    for (int v = 0; v < n; ++v) {
        int seen_hole = -1;
        for (Dart x : map.vertex_darts(v)) {
            const int f = map.face_of(opposite(x));
            if (labels[f] != FaceKind::hole) continue;
            if (seen_hole >= 0 && seen_hole != f)
                throw PolycycleError(ErrorKind::holes_share_vertex,
                                     "holes " + std::to_string(seen_hole) + " and " + std::to_string(f) +
                                         " meet at " + vtx(v));
            if (seen_hole == f)
                throw PolycycleError(ErrorKind::not_two_connected, "hole " + std::to_string(f) + " pinches " + vtx(v));
            seen_hole = f;
            hole_in[v] = opposite(x);
        }
        boundary[v] = seen_hole >= 0;
    }
    for (int v = 0; v < n; ++v) {
        const int deg = map.degree(v);
        if (deg > params.q) throw PolycycleError(ErrorKind::degree_too_high, vtx(v) + " has degree " + std::to_string(deg));
        if (deg < 2) throw PolycycleError(ErrorKind::not_two_connected, vtx(v) + " has degree " + std::to_string(deg));
        if (!boundary[v] && deg != params.q)
            throw PolycycleError(ErrorKind::interior_not_q_valent,
                                 vtx(v) + " is interior with degree " + std::to_string(deg));
    }
    if (!two_connected(map)) throw PolycycleError(ErrorKind::not_two_connected, "graph has a cut vertex");

    Polycycle p;
    p.map_ = std::move(map);
    p.labels_ = std::move(labels);
    p.params_ = std::move(params);
    p.boundary_ = std::move(boundary);
    p.hole_in_ = std::move(hole_in);
    return p;
}

Polycycle with_params(const Polycycle& p, PolycycleParams params) {
    return validate(p.map(), p.labels(), std::move(params));
}

int EdgeClassification::count(EdgeClass c) const {
    return static_cast<int>(std::count(kind.begin(), kind.end(), c));
}

EdgeClassification classify_edges(const Polycycle& p) {
    const auto& m = p.map();
    EdgeClassification out;
    out.kind.resize(m.edge_count());
    out.open.assign(m.edge_count(), 0);
    for (int e = 0; e < m.edge_count(); ++e) {
        const Dart d = 2 * e;
        const int u = m.tail(d), v = m.head(d);
        if (p.is_hole_dart(d) || p.is_hole_dart(opposite(d))) {
            out.kind[e] = EdgeClass::boundary;
            out.open[e] = m.degree(u) < p.params().q && m.degree(v) < p.params().q;
        } else if (p.on_boundary(u) && p.on_boundary(v)) {
            out.kind[e] = EdgeClass::bridge;
        } else {
            out.kind[e] = EdgeClass::interior;
        }
    }
    return out;
}

bool is_elementary(const Polycycle& p) {
    const auto& m = p.map();
    for (Dart d = 0; d < m.dart_count(); d += 2)
        if (!p.is_hole_dart(d) && !p.is_hole_dart(d + 1) && p.on_boundary(m.tail(d)) && p.on_boundary(m.head(d)))
            return false;
    return true;
}

std::vector<int> open_edges(const Polycycle& p) {
    const auto c = classify_edges(p);
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(c.open.size()); ++e)
        if (c.open[e]) out.push_back(e);
    return out;
}

std::vector<int> bridges(const Polycycle& p) {
    const auto c = classify_edges(p);
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(c.kind.size()); ++e)
        if (c.kind[e] == EdgeClass::bridge) out.push_back(e);
    return out;
}

std::vector<int> canonical_cyclic(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> best = seq;
    for (int pass = 0; pass < 2; ++pass) {
        for (int s = 0; s < n; ++s) {
            std::vector<int> rot(n);
            for (int i = 0; i < n; ++i) rot[i] = seq[(s + i) % n];
            if (rot < best) best = rot;
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

BoundarySequence boundary_sequence(const Polycycle& p, int hole) {
    if (hole < 0 || hole >= p.map().face_count() || !p.is_hole(hole))
        throw PolycycleError(ErrorKind::not_a_hole, "face " + std::to_string(hole));
    BoundarySequence out;
    out.hole = hole;
    for (Dart d : p.map().face_darts(hole)) out.degrees.push_back(p.map().degree(p.map().tail(d)));
    out.degrees = canonical_cyclic(std::move(out.degrees));
    return out;
}

bool is_pattern(std::span<const int> b, std::span<const int> a) {
    const int n = static_cast<int>(a.size());
    const int len = static_cast<int>(b.size());
    if (len >= n) return false;
    for (int start = 0; start < n; ++start) {
        bool fwd = true, bwd = true;
        for (int j = 0; j < len && (fwd || bwd); ++j) {
            if (a[(start + j) % n] != b[j]) fwd = false;
            if (a[((start - j) % n + n) % n] != b[j]) bwd = false;
        }
        if (fwd || bwd) return true;
    }
    return false;
}

Attachment Attachment::along_run(Dart first, int length, int gon_size) {
    return Attachment{gon_size, {{first, length}}, {gon_size - length}};
}

namespace {

Polycycle revalidate(const Soup::Compacted& c, const PolycycleParams& params, ErrorKind outer) {
    try {
        return validate(c.map, c.labels, params);
    } catch (const PolycycleError& e) {
        throw WrappedError(outer, e);
    }
}

}  // namespace

AttachResult attach_face(const Polycycle& p, const Attachment& a) {
    const auto& m = p.map();
    const int q = p.params().q;
    if (!p.params().allows(a.gon_size))
        throw PolycycleError(ErrorKind::size_not_in_r, std::to_string(a.gon_size));
    if (a.runs.empty() || a.runs.size() != a.free_after.size())
        throw PolycycleError(ErrorKind::bad_run, "need one free length per run");
    for (const auto& r : a.runs)
        if (r.length < 1 || r.first < 0 || r.first >= m.dart_count())
            throw PolycycleError(ErrorKind::bad_run, "run darts out of range");
    for (int f : a.free_after)
        if (f < 0) throw PolycycleError(ErrorKind::bad_run, "negative free length");

    const int hole = m.face_of(a.runs.front().first);
    if (!p.is_hole(hole)) throw PolycycleError(ErrorKind::bad_run, "run does not lie on a hole");
    for (const auto& r : a.runs)
        if (m.face_of(r.first) != hole)
            throw PolycycleError(ErrorKind::hole_collision, "runs lie on different holes");

    // hole cycle starting at the first run
    std::vector<Dart> cyc;
    for (Dart x = a.runs.front().first;;) {
        cyc.push_back(x);
        x = m.phi(x);
        if (x == a.runs.front().first) break;
    }
    const int length = static_cast<int>(cyc.size());
    std::vector<int> pos_of(m.dart_count(), -1);
    for (int i = 0; i < length; ++i) pos_of[cyc[i]] = i;

    const int t = static_cast<int>(a.runs.size());
    std::vector<int> start(t);
    int total = 0;
    for (int j = 0; j < t; ++j) {
        start[j] = pos_of[a.runs[j].first];
        total += a.runs[j].length + a.free_after[j];
    }
    if (total != a.gon_size) throw PolycycleError(ErrorKind::bad_run, "sides do not add up to the gon size");
    const bool fills = t == 1 && a.runs[0].length == length && a.free_after[0] == 0;
    for (int j = 0; j < t && !fills; ++j) {
        const int end = start[j] + a.runs[j].length;
        const int next = j + 1 < t ? start[j + 1] : length;
        if (end >= next + (j + 1 < t ? 0 : 1) || end > length - 1)
            throw PolycycleError(ErrorKind::bad_run, "runs overlap or leave no gap");
        if (j + 1 < t && next <= start[j]) throw PolycycleError(ErrorKind::bad_run, "runs out of order");
        if (a.free_after[j] == 0 && next - end < 2)
            throw PolycycleError(ErrorKind::bad_run, "merging across a single edge makes a loop");
    }

    // degree bookkeeping
    std::vector<int> degree(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) degree[v] = m.degree(v);
    auto vert = [&](int pos) { return m.tail(cyc[pos % length]); };
    if (fills) {
        for (int i = 0; i < length; ++i)
            if (degree[vert(i)] != q) throw PolycycleError(ErrorKind::degree_overflow, "filled hole needs q-valent boundary");
    } else {
        for (int j = 0; j < t; ++j) {
            for (int i = 1; i < a.runs[j].length; ++i)
                if (degree[vert(start[j] + i)] != q)
                    throw PolycycleError(ErrorKind::degree_overflow,
                                         vtx(vert(start[j] + i)) + " becomes interior without q edges");
            const int y = vert(start[j] + a.runs[j].length);
            const int z = vert(j + 1 < t ? start[j + 1] : start[0]);
            if (a.free_after[j] == 0) {
                if (degree[y] + degree[z] > q)
                    throw PolycycleError(ErrorKind::degree_overflow, "merged " + vtx(y) + " and " + vtx(z));
            } else {
                if (++degree[y] > q) throw PolycycleError(ErrorKind::degree_overflow, vtx(y));
                if (++degree[z] > q) throw PolycycleError(ErrorKind::degree_overflow, vtx(z));
            }
        }
    }

    Soup s = Soup::from(p);
    std::vector<Dart> phi(s.size());
    for (Dart d = 0; d < s.size(); ++d) phi[d] = m.phi(d);

    std::vector<Dart> face;  // darts of the new face in order
    std::vector<std::vector<Dart>> twins(t);
    for (int j = 0; j < t; ++j) {
        for (int i = 0; i < a.runs[j].length; ++i) face.push_back(cyc[(start[j] + i) % length]);
        for (int i = 0; i < a.free_after[j]; ++i) {
            const Dart x = s.new_edge(false, true);
            face.push_back(x);
            twins[j].push_back(x + 1);
        }
    }
    phi.resize(s.size());
    for (std::size_t i = 0; i < face.size(); ++i) {
        phi[face[i]] = face[(i + 1) % face.size()];
        s.hole[face[i]] = 0;
    }
    if (!fills) {
        for (int j = 0; j < t; ++j) {
            std::vector<Dart> cycle;
            const int gap_from = start[j] + a.runs[j].length;
            const int gap_to = j + 1 < t ? start[j + 1] : length;
            for (int i = gap_from; i < gap_to; ++i) cycle.push_back(cyc[i]);
            for (auto it = twins[j].rbegin(); it != twins[j].rend(); ++it) cycle.push_back(*it);
            for (std::size_t i = 0; i < cycle.size(); ++i) phi[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
    }
    s.set_phi(phi);

    Soup::Compacted c = s.compact_all();
    AttachResult out{revalidate(c, p.params(), ErrorKind::result_violates_axioms), {}, -1};
    out.dart_map.assign(c.dart_map.begin(), c.dart_map.begin() + m.dart_count());
    out.new_face = out.polycycle.map().face_of(c.dart_map[face.front()]);
    return out;
}

Polycycle add_face(const Polycycle& p, const Attachment& a) { return attach_face(p, a).polycycle; }

Polycycle remove_face(const Polycycle& p, int face) {
    const auto& m = p.map();
    if (face < 0 || face >= m.face_count() || p.is_hole(face))
        throw PolycycleError(ErrorKind::not_a_proper_face, "face " + std::to_string(face));
    if (p.proper_face_count() == 1) throw PolycycleError(ErrorKind::last_proper_face, "cannot remove the only proper face");

    Soup s = Soup::from(p);
    for (Dart d : m.face_darts(face)) s.hole[d] = 1;
    for (Dart d : m.face_darts(face)) {
        if (s.alive[d] && s.hole[opposite(d)]) {
            s.kill_from_rotation(d);
            s.kill_from_rotation(opposite(d));
        }
    }
    s.split_hole_corners();
    const auto comps = s.components();
    if (comps.size() != 1)
        throw PolycycleError(ErrorKind::result_not_two_connected,
                             "removal splits the polycycle into " + std::to_string(comps.size()) + " parts");
    return revalidate(s.compact(comps.front()), p.params(), ErrorKind::result_violates_axioms);
}

namespace {

Dart proper_side(const Soup& s, int edge_first) {
    const Dart d = edge_first;
    return s.hole[d] ? s.alpha[d] : d;
}

void require_open(const Polycycle& p, int edge) {
    if (edge < 0 || edge >= p.map().edge_count()) throw PolycycleError(ErrorKind::not_open, "no edge " + std::to_string(edge));
    const auto c = classify_edges(p);
    if (!c.open[edge]) throw PolycycleError(ErrorKind::not_open, "edge " + std::to_string(edge));
}

// Identify proper darts p1 and p2 (each on an open edge), removing their hole twins.
void glue(Soup& s, Dart p1, Dart p2) {
    const Dart h1 = s.alpha[p1];
    const Dart h2 = s.alpha[p2];
    const Dart b1 = s.sigma[p1], c2 = s.sigma[h2], z2 = s.sigma_pred(h2);
    const Dart b2 = s.sigma[p2], c1 = s.sigma[h1], z1 = s.sigma_pred(h1);
    s.sigma[p1] = c2;
    s.sigma[z2] = b1;
    s.sigma[p2] = c1;
    s.sigma[z1] = b2;
    s.alpha[p1] = p2;
    s.alpha[p2] = p1;
    for (Dart h : {h1, h2}) {
        s.alive[h] = 0;
        s.sigma[h] = h;
    }
}

int soup_degree(const Soup& s, Dart d) {
    int k = 1;
    for (Dart x = s.sigma[d]; x != d; x = s.sigma[x]) ++k;
    return k;
}

}  // namespace

Polycycle agglomerate(const Polycycle& p1, int edge1, const Polycycle& p2, int edge2, bool flip) {
    require_open(p1, edge1);
    require_open(p2, edge2);
    Soup a = Soup::from(p1);
    Soup b = Soup::from(p2);
    if (flip) b.mirror();
    const Dart d1 = proper_side(a, 2 * edge1);
    const Dart d2 = proper_side(b, 2 * edge2) + a.size();
    Soup s = Soup::join(a, b);
    const int q = p1.params().q;
    // merged vertices: tail(d1) with head(d2), head(d1) with tail(d2)
    const int du = soup_degree(s, d1) + soup_degree(s, s.alpha[d2]) - 1;
    const int dv = soup_degree(s, s.alpha[d1]) + soup_degree(s, d2) - 1;
    if (du > q || dv > q)
        throw PolycycleError(ErrorKind::degree_overflow, "merged degrees " + std::to_string(du) + ", " + std::to_string(dv));
    glue(s, d1, d2);
    return revalidate(s.compact_all(), p1.params(), ErrorKind::result_violates_axioms);
}

Polycycle agglomerate_self(const Polycycle& p, int edge1, int edge2) {
    require_open(p, edge1);
    require_open(p, edge2);
    const auto& m = p.map();
    const int u1 = m.tail(2 * edge1), v1 = m.head(2 * edge1), u2 = m.tail(2 * edge2), v2 = m.head(2 * edge2);
    if (edge1 == edge2 || u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        throw PolycycleError(ErrorKind::result_violates_axioms, "self-agglomeration needs vertex-disjoint open edges");
    Soup s = Soup::from(p);
    const Dart d1 = proper_side(s, 2 * edge1);
    const Dart d2 = proper_side(s, 2 * edge2);
    const int q = p.params().q;
    const int du = soup_degree(s, d1) + soup_degree(s, s.alpha[d2]) - 1;
    const int dv = soup_degree(s, s.alpha[d1]) + soup_degree(s, d2) - 1;
    if (du > q || dv > q)
        throw PolycycleError(ErrorKind::degree_overflow, "merged degrees " + std::to_string(du) + ", " + std::to_string(dv));
    glue(s, d1, d2);
    return revalidate(s.compact_all(), p.params(), ErrorKind::result_violates_axioms);
}

Decomposition decompose(const Polycycle& p) {
    const auto cut = bridges(p);
    Decomposition out;
    if (cut.empty()) {
        out.pieces.push_back(p);
        return out;
    }
    Soup s = Soup::from(p);
    std::vector<std::pair<Dart, Dart>> seams;
    for (int e : cut) {
        const Dart d = 2 * e, dd = 2 * e + 1;
        const Dart h1 = s.new_edge(true, true);
        const Dart h2 = h1 + 1;
        s.alpha[d] = h1;
        s.alpha[h1] = d;
        s.alpha[h2] = dd;
        s.alpha[dd] = h2;
        s.sigma[h2] = s.sigma[d];
        s.sigma[d] = h2;
        s.sigma[h1] = s.sigma[dd];
        s.sigma[dd] = h1;
        seams.emplace_back(d, dd);
    }
    s.split_hole_corners();

    const auto comps = s.components();
    std::vector<int> comp_of(s.size(), -1);
    struct Piece {
        Polycycle pc;
        CanonicalCode code;
        std::vector<Dart> dart_map;
        int original;
    };
    std::vector<Piece> pieces;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (Dart d : comps[c]) comp_of[d] = static_cast<int>(c);
        auto compacted = s.compact(comps[c]);
        Polycycle pc = validate(compacted.map, compacted.labels, p.params());
        CanonicalCode code = canonical_code(pc);
        pieces.push_back({std::move(pc), std::move(code), std::move(compacted.dart_map), static_cast<int>(c)});
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.code < b.code; });
    std::vector<int> rank(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) rank[pieces[i].original] = static_cast<int>(i);
    for (auto [d, dd] : seams) {
        const int ca = rank[comp_of[d]], cb = rank[comp_of[dd]];
        out.seams.push_back({ca, pieces[ca].dart_map[d], cb, pieces[cb].dart_map[dd]});
    }
    for (auto& pc : pieces) out.pieces.push_back(std::move(pc.pc));
    return out;
}

Polycycle reassemble(const Decomposition& d) {
    if (d.pieces.empty()) throw PolycycleError(ErrorKind::bad_params, "nothing to reassemble");
    Soup s = Soup::from(d.pieces.front());
    std::vector<int> offset{0};
    for (std::size_t i = 1; i < d.pieces.size(); ++i) {
        offset.push_back(s.size());
        s = Soup::join(s, Soup::from(d.pieces[i]));
    }
    for (const Seam& seam : d.seams) glue(s, offset[seam.piece_a] + seam.dart_a, offset[seam.piece_b] + seam.dart_b);
    return revalidate(s.compact_all(), d.pieces.front().params(), ErrorKind::result_violates_axioms);
}

bool is_totally_elementary(const Polycycle& p) {
    if (p.params().q != 3) throw PolycycleError(ErrorKind::wrong_valence, "defined for q = 3 only");
    if (!is_elementary(p)) return false;
    const auto& m = p.map();
    for (int f : p.proper_faces()) {
        bool touches = false;
        for (Dart d : m.face_darts(f)) touches = touches || p.on_boundary(m.tail(d));
        if (!touches) continue;
        try {
            if (is_elementary(remove_face(p, f))) return false;
        } catch (const PolycycleError&) {
            // an invalid removal has no elementary predecessor
        }
    }
    return true;
}

bool is_extensible(const Polycycle& p) {
    bool found = false;
    for (int h : p.holes()) {
        for (int size : p.params().gon_sizes) {
            for_each_attachment(p, h, size, -1, [&](const Attachment& a) {
                try {
                    attach_face(p, a);
                    found = true;
                } catch (const PolycycleError&) {
                }
                return !found;
            });
            if (found) return true;
        }
    }
    return false;
}

CanonicalCode canonical_code(const Polycycle& p) { return canonical_code(p.map(), p.labels()); }

CanonicalCode graph_code(const Polycycle& p) {
    return canonical_code(p.map(), FaceLabeling(p.map().face_count(), FaceKind::proper));
}

bool is_isomorphic(const Polycycle& a, const Polycycle& b) { return canonical_code(a) == canonical_code(b); }

Polycycle mirror(const Polycycle& p) {
    Soup s = Soup::from(p);
    s.mirror();
    return revalidate(s.compact_all(), p.params(), ErrorKind::result_violates_axioms);
}

Polycycle relabel(const Polycycle& p, std::span<const Dart> dart_image) {
    PlanarMap m = relabel_darts(p.map(), dart_image);
    FaceLabeling labels(m.face_count());
    for (Dart d = 0; d < p.map().dart_count(); ++d) labels[m.face_of(dart_image[d])] = p.labels()[p.map().face_of(d)];
    return validate(std::move(m), std::move(labels), p.params());
}

}  // namespace polycycle

namespace polycycle {

Polycycle canonical_polycycle(const Polycycle& p) {
    const CanonicalCode code = canonical_code(p);
    const std::string& bytes = code.bytes();
    std::vector<int> w(bytes.size() / 2);
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (static_cast<unsigned char>(bytes[2 * i]) << 8) | static_cast<unsigned char>(bytes[2 * i + 1]);
    const int n = w[0];
    const auto at = [&](int dart, int field) { return w[5 + 3 * dart + field]; };
    // pair BFS numbers into edges in order of first appearance
    std::vector<Dart> to_new(n, -1);
    Dart next = 0;
    for (int i = 0; i < n; ++i) {
        if (to_new[i] >= 0) continue;
        to_new[i] = next++;
        to_new[at(i, 0)] = next++;
    }
    std::vector<Dart> sigma(n);
    std::vector<char> hole(n);
    for (int i = 0; i < n; ++i) {
        sigma[to_new[i]] = to_new[at(i, 1)];
        hole[to_new[i]] = at(i, 2) != 0;
    }
    PlanarMap m = PlanarMap::from_sigma(std::move(sigma));
    FaceLabeling labels(m.face_count());
    for (int f = 0; f < m.face_count(); ++f)
        labels[f] = hole[m.face_darts(f).front()] ? FaceKind::hole : FaceKind::proper;
    return validate(std::move(m), std::move(labels), p.params());
}

}  // namespace polycycle
