// Acceptance checks: one PASS/FAIL line per criterion with its wall time.
// Expected values are published counts and symmetry groups, or are computed
// here by independent means (brute force, explicit constructions).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "polycycle/enumerate.hpp"
#include "polycycle/symmetry.hpp"

using namespace polycycle;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > budget_s) {
        o.pass = false;
        o.detail += " (over time budget)";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s, budget %.0f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), s,
                budget_s);
    std::fflush(stdout);
}

std::string join(const std::vector<int>& v) {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

std::vector<CatalogEntry> catalog(std::vector<int> r, int q, int max_faces, int threads = 1) {
    return enumerate_elementary({PolycycleParams::make(std::move(r), q), max_faces, EnumerationMode::elementary, threads});
}

// Memoized: several criteria read the same catalogs.
const std::vector<CatalogEntry>& cached(std::vector<int> r, int q, int max_faces) {
    static std::map<std::tuple<std::vector<int>, int, int>, std::vector<CatalogEntry>> memo;
    auto key = std::make_tuple(r, q, max_faces);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, catalog(r, q, max_faces)).first;
    return it->second;
}

int count_nonext(const std::vector<CatalogEntry>& c) {
    return static_cast<int>(std::count_if(c.begin(), c.end(), [](const CatalogEntry& e) { return !e.extensible; }));
}

// Random relabelling that keeps darts paired: an edge permutation plus an
// independent reversal per edge.
std::vector<Dart> random_dart_image(int edges, std::mt19937& rng) {
    std::vector<int> perm(edges);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Dart> image(2 * edges);
    for (int e = 0; e < edges; ++e) {
        const int flip = static_cast<int>(rng() & 1u);
        image[2 * e] = 2 * perm[e] + flip;
        image[2 * e + 1] = 2 * perm[e] + (1 - flip);
    }
    return image;
}

// m-cycle with every edge tripled: the two m-gons are holes touching at every
// vertex, the 2m digons proper. q = 6.
Polycycle bracelet(int m) {
    std::vector<std::vector<EdgeEnd>> rot(m);
    const auto e = [m](int i, int k) { return 3 * ((i % m + m) % m) + k; };
    for (int i = 0; i < m; ++i) rot[i] = {e(i, 0), e(i, 1), e(i, 2), e(i - 1, 2), e(i - 1, 1), e(i - 1, 0)};
    PlanarMap map = build_map(rot);
    FaceLabeling labels(map.face_count(), FaceKind::proper);
    for (int f = 0; f < map.face_count(); ++f) {
        std::vector<int> ks;
        for (Dart d : map.face_darts(f)) ks.push_back(edge_of(d) % 3);
        if (std::all_of(ks.begin(), ks.end(), [&](int k) { return k == ks[0] && k != 1; })) labels[f] = FaceKind::hole;
    }
    return validate(std::move(map), std::move(labels), PolycycleParams::make({2}, 6));
}

}  // namespace

int main() {
    criterion(1, "({2,3},4) elementary: 8 entries, Aut(P) orders, 3 nonext", 10, [] {
        const auto& c = cached({2, 3}, 4, 20);
        std::vector<int> orders;
        for (const auto& e : c) orders.push_back(e.aut_p_order);
        std::vector<int> got = orders, want = {6, 8, 4, 6, 4, 2, 4, 4};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        const bool ok = c.size() == 8 && got == want && count_nonext(c) == 3;
        return Outcome{ok, "entries " + std::to_string(c.size()) + ", Aut(P) " + join(orders) + ", nonext " +
                               std::to_string(count_nonext(c))};
    });

    criterion(2, "({2,3,4,5},3) elementary with a 2-gon: 8 entries, 5 nonext", 30, [] {
        std::vector<CatalogEntry> with2;
        for (const auto& e : cached({2, 3, 4, 5}, 3, 12))
            if (contains_gon(e.polycycle, 2)) with2.push_back(e);
        const bool ok = with2.size() == 8 && count_nonext(with2) == 5;
        return Outcome{ok, "entries " + std::to_string(with2.size()) + ", nonext " + std::to_string(count_nonext(with2))};
    });

    criterion(3, "({2,3},5) sporadic: 57", 300, [] {
        const auto& c = cached({2, 3}, 5, 20);
        const auto n = std::count_if(c.begin(), c.end(), [](const CatalogEntry& e) { return is_sporadic(e.family); });
        return Outcome{n == 57, "sporadic " + std::to_string(n) + " of " + std::to_string(c.size())};
    });

    criterion(4, "({3,4,5},3) totally elementary <= 10 faces: 3 + 10 + 4 = 17", 60, [] {
        const auto c = enumerate_totally_elementary(
            {PolycycleParams::make({3, 4, 5}, 3), 10, EnumerationMode::totally_elementary, 1});
        int mono = 0, triple = 0, barrels = 0, other = 0;
        std::vector<int> barrel_m;
        for (const auto& e : c) {
            switch (e.family.kind) {
                case FamilyKind::monocycle: ++mono; break;
                case FamilyKind::gon_triple: ++triple; break;
                case FamilyKind::barrel:
                    ++barrels;
                    barrel_m.push_back(e.family.a);
                    break;
                default: ++other;
            }
        }
        std::sort(barrel_m.begin(), barrel_m.end());
        const bool ok = c.size() == 17 && mono == 3 && triple == 10 && barrel_m == std::vector<int>{2, 3, 4, 5} &&
                        other == 0;
        return Outcome{ok, "total " + std::to_string(c.size()) + ": monocycles " + std::to_string(mono) + ", triples " +
                               std::to_string(triple) + ", barrels m=" + join(barrel_m) + ", other " +
                               std::to_string(other)};
    });

    criterion(5, "({3,4,5},3) tallies: 23, 35 elementary; 34 36 29 16 9 sporadic; 1 at >= 11", 600, [] {
        const auto& c = cached({3, 4, 5}, 3, 12);
        std::map<int, int> all, sporadic;
        for (const auto& e : c) {
            // 4- and 5-face lists are one-hole polycycles (the barrel_2 has two)
            if (e.hole_count == 1) ++all[e.face_count];
            if (is_sporadic(e.family)) ++sporadic[e.face_count];
        }
        const std::vector<int> spor = {sporadic[6], sporadic[7], sporadic[8], sporadic[9], sporadic[10]};
        const int late = sporadic[11] + sporadic[12];
        const bool ok = all[4] == 23 && all[5] == 35 && spor == std::vector<int>{34, 36, 29, 16, 9} && late == 1;
        return Outcome{ok, "4 faces " + std::to_string(all[4]) + ", 5 faces " + std::to_string(all[5]) +
                               ", sporadic 6..10 " + join(spor) + ", sporadic 11..12 " + std::to_string(late)};
    });

    criterion(6, "1000 random agglomerations: decompose and reassemble", 120, [] {
        std::mt19937 rng(20061017);
        struct Set {
            std::vector<int> r;
            int q, max_faces;
        };
        const std::vector<Set> sets = {{{3, 4, 5}, 3, 8}, {{2, 3}, 4, 20}, {{2, 3}, 5, 11}};
        std::vector<std::vector<const CatalogEntry*>> pools;
        for (const auto& s : sets) {
            std::vector<const CatalogEntry*> pool;
            for (const auto& e : cached(s.r, s.q, s.max_faces))
                if (!open_edges(e.polycycle).empty()) pool.push_back(&e);
            pools.push_back(pool);
        }
        int done = 0, rejected = 0, bad_pieces = 0, bad_reassembly = 0;
        while (done < 1000) {
            const auto& pool = pools[done % pools.size()];
            const int want = 2 + static_cast<int>(rng() % 5);
            const auto pick = [&] { return pool[rng() % pool.size()]; };
            const CatalogEntry* first = pick();
            Polycycle cur = first->polycycle;
            std::vector<CanonicalCode> codes = {first->code};
            int attempts = 0;
            while (static_cast<int>(codes.size()) < want && attempts < 50) {
                ++attempts;
                const CatalogEntry* piece = pick();
                const auto oa = open_edges(cur);
                const auto ob = open_edges(piece->polycycle);
                if (oa.empty()) break;
                try {
                    cur = agglomerate(cur, oa[rng() % oa.size()], piece->polycycle, ob[rng() % ob.size()], rng() & 1u);
                    codes.push_back(piece->code);
                } catch (const PolycycleError& e) {
                    if (e.kind() != ErrorKind::degree_overflow) throw;
                    ++rejected;
                }
            }
            if (codes.size() < 2) continue;
            const Decomposition d = decompose(cur);
            std::vector<CanonicalCode> got;
            for (const auto& p : d.pieces) got.push_back(canonical_code(p));
            std::sort(got.begin(), got.end());
            std::sort(codes.begin(), codes.end());
            if (got != codes) ++bad_pieces;
            if (canonical_code(reassemble(d)) != canonical_code(cur)) ++bad_reassembly;
            ++done;
        }
        return Outcome{bad_pieces == 0 && bad_reassembly == 0,
                       std::to_string(done) + " agglomerates, piece mismatches " + std::to_string(bad_pieces) +
                           ", reassembly mismatches " + std::to_string(bad_reassembly) + ", rejected gluings " +
                           std::to_string(rejected)};
    });

    criterion(7, "symmetry spot checks and Aut(P) | Aut(G)", 60, [] {
        std::vector<std::string> bad;
        const auto expect = [&](const std::string& what, int got, int want) {
            if (got != want) bad.push_back(what + "=" + std::to_string(got) + " want " + std::to_string(want));
        };
        expect("G triple333", symmetry_of_graph(gon_triple(3, 3, 3)).order, 24);
        expect("G barrel5", symmetry_of_graph(barrel(5)).order, 120);
        expect("G snub3", symmetry_of_graph(snub_antiprism(3)).order, 120);
        expect("G 3-gon", symmetry_of_graph(monocycle(3)).order, 12);
        expect("P 3-gon", symmetry_of_polycycle(monocycle(3)).order, 6);
        for (int m = 2; m <= 6; ++m) {
            expect("P barrel" + std::to_string(m), symmetry_of_polycycle(barrel(m)).order, 4 * m);
            expect("P snub" + std::to_string(m), symmetry_of_polycycle(snub_antiprism(m)).order, 4 * m);
        }
        int checked = 0;
        for (const auto* c : {&cached({3, 4, 5}, 3, 12), &cached({2, 3, 4, 5}, 3, 12), &cached({2, 3}, 4, 20),
                              &cached({2, 3}, 5, 20)})
            for (const auto& e : *c) {
                ++checked;
                if (e.aut_g_order % e.aut_p_order != 0) bad.push_back("divisibility at " + e.code.hex());
            }
        std::string detail = "divisibility over " + std::to_string(checked) + " entries";
        for (const auto& b : bad) detail += "; " + b;
        return Outcome{bad.empty(), detail};
    });

    criterion(8, "partition-blind classes: 9x2 + 2x3 for R={2,3,4,5}, 3x2 for q=5", 60, [] {
        const auto sizes = [](const std::vector<CatalogEntry>& c) {
            std::vector<CatalogEntry> spor;
            for (const auto& e : c)
                if (is_sporadic(e.family)) spor.push_back(e);
            std::vector<int> out;
            for (const auto& cls : coincidence_classes(spor)) out.push_back(static_cast<int>(cls.size()));
            std::sort(out.begin(), out.end());
            return out;
        };
        const auto a = sizes(cached({2, 3, 4, 5}, 3, 12));
        const auto b = sizes(cached({2, 3}, 5, 20));
        const bool ok = a == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2, 3, 3} && b == std::vector<int>{2, 2, 2};
        return Outcome{ok, "class sizes {" + join(a) + "} and {" + join(b) + "}"};
    });

    criterion(9, "extensibility of barrels and snub antiprisms", 120, [] {
        std::string got;
        bool ok = true;
        for (int m : {2, 3, 4, 5, 6, 7}) {
            const bool ext = is_extensible(barrel(m));
            ok = ok && ext == (m >= 3 && m <= 5);
            got += "barrel" + std::to_string(m) + (ext ? "+ " : "- ");
        }
        for (int m : {4, 5, 6}) {
            const bool ext = is_extensible(snub_antiprism(m));
            ok = ok && !ext;
            got += "snub" + std::to_string(m) + (ext ? "+ " : "- ");
        }
        return Outcome{ok, got + "(+ extensible)"};
    });

    criterion(10, "m-bracelets rejected with HolesShareVertex", 1, [] {
        std::string got;
        bool ok = true;
        for (int m : {2, 3}) {
            try {
                bracelet(m);
                ok = false;
                got += "m=" + std::to_string(m) + " accepted; ";
            } catch (const PolycycleError& e) {
                ok = ok && e.kind() == ErrorKind::holes_share_vertex;
                got += "m=" + std::to_string(m) + " " + std::string(to_string(e.kind())) + "; ";
            }
        }
        return Outcome{ok, got};
    });

    criterion(11, "relabel fuzz, Euler, brute-force oracle, thread determinism", 300, [] {
        std::vector<std::string> bad;
        std::mt19937 rng(7);
        // fuzz over the first 200 entries of the merged catalogs
        std::vector<const CatalogEntry*> sample;
        for (const auto* c : {&cached({3, 4, 5}, 3, 12), &cached({2, 3}, 5, 20), &cached({2, 3}, 4, 20)})
            for (const auto& e : *c)
                if (sample.size() < 200) sample.push_back(&e);
        int changed = 0;
        for (const auto* e : sample)
            for (int k = 0; k < 100; ++k) {
                const auto img = random_dart_image(e->polycycle.map().edge_count(), rng);
                if (canonical_code(relabel(e->polycycle, img)) != e->code) ++changed;
            }
        if (changed) bad.push_back("relabel changed " + std::to_string(changed) + " codes");

        int euler_bad = 0, maps = 0;
        for (const auto* c : {&cached({3, 4, 5}, 3, 12), &cached({2, 3, 4, 5}, 3, 12), &cached({2, 3}, 4, 20),
                              &cached({2, 3}, 5, 20)})
            for (const auto& e : *c) {
                ++maps;
                if (!euler_genus_check(e.polycycle.map())) ++euler_bad;
            }
        if (euler_bad) bad.push_back("Euler failures " + std::to_string(euler_bad));

        std::string oracle;
        const std::vector<std::pair<std::vector<int>, int>> sets = {{{3, 4, 5}, 3}, {{2, 3}, 4}, {{2, 3}, 5}};
        for (const auto& [r, q] : sets) {
            const auto params = PolycycleParams::make(r, q);
            std::vector<CanonicalCode> a, b;
            for (const auto& e : brute_force_elementary(params, 4)) a.push_back(e.code);
            for (const auto& e : catalog(r, q, 4)) b.push_back(e.code);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            oracle += " q" + std::to_string(q) + ":" + std::to_string(a.size()) + "/" + std::to_string(b.size());
            if (a != b) bad.push_back("oracle mismatch for q=" + std::to_string(q));

            const int bound = q == 3 ? 12 : 20;
            const auto ref = catalog(r, q, bound, 1);
            for (int t : {2, 8}) {
                const auto other = catalog(r, q, bound, t);
                bool same = other.size() == ref.size();
                for (std::size_t i = 0; same && i < ref.size(); ++i) same = other[i].code == ref[i].code;
                if (!same) bad.push_back("threads " + std::to_string(t) + " differ for q=" + std::to_string(q));
            }
        }
        std::string detail = std::to_string(sample.size()) + " entries x 100 relabelings, " + std::to_string(maps) +
                             " maps Euler-checked, oracle (brute/enum)" + oracle;
        for (const auto& b : bad) detail += "; " + b;
        return Outcome{bad.empty(), detail};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
