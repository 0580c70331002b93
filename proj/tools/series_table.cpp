// Regenerates the body of src/series_bases.inc: the output of series_table 3
// followed by series_table 5, below the file's three comment lines.
// Ending classes are told apart by the chain of canonical codes of nested side
// pieces cut along slab transversals, read off a member three duplications out.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include "polycycle/enumerate.hpp"
#include "series.hpp"
using namespace polycycle;

CanonicalCode piece_code(const Polycycle& p, const std::vector<char>& S) {
    const auto& m = p.map();
    std::vector<int> eid(m.edge_count(), -1);
    int ne = 0;
    for (int e = 0; e < m.edge_count(); ++e)
        if (S[m.face_of(2 * e)] || S[m.face_of(2 * e + 1)]) eid[e] = ne++;
    std::vector<std::vector<int>> rot;
    std::vector<int> old_vertex;
    for (int v = 0; v < m.vertex_count(); ++v) {
        std::vector<int> r;
        for (Dart d : m.vertex_darts(v)) if (eid[edge_of(d)] >= 0) r.push_back(eid[edge_of(d)]);
        if (r.empty()) continue;
        rot.push_back(r); old_vertex.push_back(v);
    }
    std::vector<int> old_edge(ne);
    for (int e = 0; e < m.edge_count(); ++e) if (eid[e] >= 0) old_edge[eid[e]] = e;
    PlanarMap nm = build_map(rot);
    FaceLabeling lab(nm.face_count(), FaceKind::hole);
    for (Dart d = 0; d < nm.dart_count(); ++d) {
        int E = old_edge[edge_of(d)];
        int ov = old_vertex[nm.tail(d)];
        Dart od = m.tail(2 * E) == ov ? 2 * E : 2 * E + 1;
        if (S[m.face_of(od)]) lab[nm.face_of(d)] = FaceKind::proper;
    }
    return canonical_form(nm, lab).code;
}
using Sig = std::vector<CanonicalCode>;
std::pair<Sig, Sig> ends(const Polycycle& p) {
    std::vector<std::vector<char>> pieces;
    for (auto& sl : detail::slabs(p))
        for (auto* t : {&sl.first, &sl.second}) {
            auto L = detail::left_side(p, *t);
            if (L.empty()) continue;
            std::vector<char> Rr(L.size());
            for (int f : p.proper_faces()) Rr[f] = !L[f];
            pieces.push_back(L); pieces.push_back(Rr);
        }
    auto cnt = [](const std::vector<char>& s) { int c = 0; for (char x : s) c += x; return c; };
    auto sub = [](const std::vector<char>& a, const std::vector<char>& b) { for (size_t f = 0; f < a.size(); ++f) if (a[f] && !b[f]) return false; return true; };
    std::stable_sort(pieces.begin(), pieces.end(), [&](auto& a, auto& b) { return cnt(a) < cnt(b); });
    auto A = pieces.at(0);
    std::vector<char> B;
    for (auto& s : pieces) { bool dis = true; for (size_t f = 0; f < s.size(); ++f) if (s[f] && A[f]) dis = false; if (dis) { B = s; break; } }
    auto chain = [&](const std::vector<char>& s) {
        Sig c; std::set<int> sz;
        for (auto& t : pieces) if (sub(s, t) && !sz.count(cnt(t)) && c.size() < 3) { sz.insert(cnt(t)); c.push_back(piece_code(p, t)); }
        return c;
    };
    Sig a = chain(A), b = chain(B.empty() ? A : B);
    if (b < a) std::swap(a, b);
    return {a, b};
}
Polycycle dup(const Polycycle& p) {
    for (auto& s : detail::slabs(p)) if (auto r = detail::duplicate_slab(p, s)) return canonical_polycycle(*r);
    throw std::runtime_error("no dup");
}
std::string encode(const Polycycle& p0) {
    Polycycle p = canonical_polycycle(p0);
    const auto& m = p.map();
    std::ostringstream o;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (v) o << ';';
        bool first = true;
        for (Dart d : m.vertex_darts(v)) { if (!first) o << ' '; first = false; o << edge_of(d); }
    }
    o << '|';
    bool first = true;
    for (int h : p.holes()) { if (!first) o << ' '; first = false; o << h; }
    return o.str();
}
std::string bseq(const Polycycle& p) { std::string s; for (int d : boundary_sequence(p, p.holes()[0]).degrees) s += char('0' + d); return s; }

int main(int argc, char** argv) {
    if (argc != 2) { fprintf(stderr, "usage: series_table <3|5>\n"); return 2; }
    int q = atoi(argv[1]);
    std::vector<int> R = q == 3 ? std::vector<int>{3, 4, 5} : std::vector<int>{2, 3};
    int N = q == 3 ? 7 : 14;
    auto cat = enumerate_elementary({PolycycleParams::make(R, q), N});
    // slab-bearing one-hole members at the first two duplication levels
    std::vector<int> levels = q == 3 ? std::vector<int>{6, 7} : std::vector<int>{11, 14};
    std::map<Sig, int> classes;
    struct Member { int faces; Polycycle p; Sig a, b; bool nonext_far; };
    std::vector<Member> members;
    for (auto& e : cat) {
        if (e.hole_count != 1 || detail::slabs(e.polycycle).empty()) continue;
        if (std::find(levels.begin(), levels.end(), e.face_count) == levels.end()) continue;
        Polycycle far = e.polycycle;
        for (int k = 0; k < 3; ++k) far = dup(far);
        auto [a, b] = ends(far);
        classes[a]; classes[b];
        members.push_back({e.face_count, e.polycycle, a, b, !is_extensible(far)});
    }
    fprintf(stderr, "members %zu classes %zu\n", members.size(), classes.size());
    // class properties: XX member pentagon/triangle-only? nonext?
    std::map<Sig, bool> pure, nonext;
    std::map<Sig, int> xxlen;
    for (auto& mb : members) if (mb.a == mb.b && mb.faces == levels[0]) {
        Polycycle far = mb.p; for (int k = 0; k < 3; ++k) far = dup(far);
        bool allband = true;
        for (int f : far.proper_faces()) allband = allband && far.map().face_size(f) == detail::band_gon(q);
        pure[mb.a] = allband; nonext[mb.a] = mb.nonext_far;
        xxlen[mb.a] = bseq(far).size();
    }
    std::map<Sig, char> letter;
    std::vector<Sig> ext_rest, nonext_list;
    for (auto& [s, id] : classes) {
        if (q == 3 && pure[s]) letter[s] = 'a';
        else if (nonext[s]) nonext_list.push_back(s);
        else ext_rest.push_back(s);
    }
    if (q == 3) {
        const char* e = "db"; const char* n = "egm";
        for (size_t i = 0; i < ext_rest.size(); ++i) letter[ext_rest[i]] = e[i];
        for (size_t i = 0; i < nonext_list.size(); ++i) letter[nonext_list[i]] = n[i];
    } else {
        // shorter boundary on the XX member: alpha
        std::sort(ext_rest.begin(), ext_rest.end(), [&](auto& x, auto& y) { return xxlen[x] < xxlen[y]; });
        letter[ext_rest[0]] = 'a'; letter[ext_rest[1]] = 'b'; letter[nonext_list.at(0)] = 'g';
    }
    const std::string order = "abgdem";
    std::map<std::string, std::vector<std::pair<int, std::string>>> table;
    for (auto& mb : members) {
        std::string pr{letter[mb.a], letter[mb.b]};
        if (order.find(pr[0]) > order.find(pr[1])) std::swap(pr[0], pr[1]);
        int n = q == 3 ? mb.faces - 2 : (mb.faces - 5) / 3;
        table[pr].push_back({n, encode(mb.p)});
        fprintf(stderr, "%s n=%d f=%d P=%d ext=%d bseq=%s\n", pr.c_str(), n, mb.faces, (int)canonical_form(mb.p.map(), mb.p.labels()).minimal_flags.size(), is_extensible(mb.p), bseq(mb.p).c_str());
    }
    // small members below the duplication range, picked by boundary sequence
    std::map<std::string, std::string> small5 = {{"33333", "aa"}, {"3334", "ab"}, {"4444", "aa"}, {"33444", "ab"},
                                                 {"3445", "ag"}, {"334334", "bb"}, {"33435", "bg"}, {"3535", "gg"}};
    for (auto& e : cat) {
        if (e.hole_count != 1) continue;
        if (q == 3 && (e.face_count == 4 || e.face_count == 5)) {
            bool allp = true;
            for (int f : e.polycycle.proper_faces()) allp = allp && e.polycycle.map().face_size(f) == 5;
            if (allp) table["aa"].push_back({e.face_count - 2, encode(e.polycycle)});
        }
        if (q == 5 && (e.face_count == 5 || e.face_count == 8) && small5.count(bseq(e.polycycle)))
            table[small5[bseq(e.polycycle)]].push_back({(e.face_count - 5) / 3, encode(e.polycycle)});
    }
    for (auto& [pr, v] : table) {
        std::sort(v.begin(), v.end());
        printf("    {%d, \"%s\", {", q, pr.c_str());
        for (auto& [n, s] : v) printf("\n        {%d, \"%s\"},", n, s.c_str());
        printf("}},\n");
    }
}
