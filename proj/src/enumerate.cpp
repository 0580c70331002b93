#include "polycycle/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace polycycle {

int default_max_faces(int q) { return q == 3 ? 12 : 20; }

bool is_sporadic(const FamilyTag& tag) {
    return tag.kind != FamilyKind::series && tag.kind != FamilyKind::barrel && tag.kind != FamilyKind::snub_antiprism;
}

bool contains_gon(const Polycycle& p, int size) {
    for (int f : p.proper_faces())
        if (p.map().face_size(f) == size) return true;
    return false;
}

namespace {

void check_task(const EnumerationTask& task) {
    if (ellipticity(task.params) != Ellipticity::elliptic)
        throw PolycycleError(ErrorKind::not_elliptic, "enumeration needs 1/q + 1/r > 1/2");
    if (task.max_faces < 1) throw PolycycleError(ErrorKind::bound_too_small, std::to_string(task.max_faces));
}

// Thread-safe canonical-code set with per-face-count buckets of new states.
class StateStore {
public:
    explicit StateStore(int max_faces) : levels_(max_faces + 1) {}

    void offer(Polycycle p) {
        CanonicalCode code = canonical_code(p);
        std::lock_guard lock(mutex_);
        if (!seen_.insert(code).second) return;
        levels_[p.proper_face_count()].emplace_back(std::move(code), std::move(p));
    }

    std::vector<std::pair<CanonicalCode, Polycycle>>& level(int k) { return levels_[k]; }

private:
    std::mutex mutex_;
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen_;
    std::vector<std::vector<std::pair<CanonicalCode, Polycycle>>> levels_;
};

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// Add faces in the hole corner at head(h_in) until that vertex is interior.
template <typename Emit>
void close_vertex(const Polycycle& s, Dart h_in, int max_faces, Emit& emit) {
    if (s.proper_face_count() >= max_faces) return;
    const Dart h_out = s.map().phi(h_in);
    const int hole = s.map().face_of(h_in);
    for (int size : s.params().gon_sizes) {
        for_each_attachment(s, hole, size, h_out, [&](const Attachment& a) {
            AttachResult r;
            try {
                r = attach_face(s, a);
            } catch (const PolycycleError&) {
                return true;
            }
            const Dart moved = r.dart_map[h_in];
            if (r.polycycle.is_hole_dart(moved))
                close_vertex(r.polycycle, moved, max_faces, emit);
            else
                emit(std::move(r.polycycle));
            return true;
        });
    }
}

// Representatives of boundary vertices under Aut(s), as the hole dart entering each.
std::vector<Dart> boundary_representatives(const Polycycle& s) {
    const auto& m = s.map();
    const auto autos = automorphisms(m, s.labels());
    std::vector<char> covered(m.vertex_count(), 0);
    std::vector<Dart> out;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (!s.on_boundary(v) || covered[v]) continue;
        const Dart h = s.hole_dart_into(v);
        out.push_back(h);
        for (const auto& a : autos) covered[m.head(a.image[h])] = 1;
    }
    return out;
}

CatalogEntry make_entry(const Polycycle& p) {
    CatalogEntry e{canonical_polycycle(p), {}, 0, 0, 0, 0, false, {}};
    e.code = canonical_code(e.polycycle);
    e.face_count = e.polycycle.proper_face_count();
    e.hole_count = e.polycycle.hole_count();
    e.aut_p_order = static_cast<int>(canonical_form(e.polycycle.map(), e.polycycle.labels()).minimal_flags.size());
    e.aut_g_order = static_cast<int>(
        canonical_form(e.polycycle.map(), FaceLabeling(e.polycycle.map().face_count(), FaceKind::proper))
            .minimal_flags.size());
    e.extensible = is_extensible(e.polycycle);
    e.family = family_of(e.polycycle);
    return e;
}

std::vector<CatalogEntry> finish(std::vector<Polycycle> found, int threads) {
    std::vector<CatalogEntry> out(found.size());
    parallel_for(static_cast<int>(found.size()), threads, [&](int i) { out[i] = make_entry(found[i]); });
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.face_count != b.face_count) return a.face_count < b.face_count;
        return a.code < b.code;
    });
    return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate_elementary(const EnumerationTask& task) {
    check_task(task);
    // Every elementary polycycle with two or more faces is the union of the
    // stars of its interior vertices, which are linked through shared faces.
    // States are such unions, grown one closed vertex star at a time.
    StateStore store(task.max_faces);
    for (int size : task.params.gon_sizes) store.offer(with_params(monocycle(size), task.params));

    std::vector<Polycycle> found;
    for (int k = 1; k <= task.max_faces; ++k) {
        auto& level = store.level(k);
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [code, s] : level)
            if (is_elementary(s)) found.push_back(s);
        if (k == task.max_faces) break;
        const auto current = level;  // later levels only; this one is complete
        parallel_for(static_cast<int>(current.size()), task.threads, [&](int i) {
            const Polycycle& s = current[i].second;
            auto emit = [&](Polycycle p) { store.offer(std::move(p)); };
            for (Dart h : boundary_representatives(s)) close_vertex(s, h, task.max_faces, emit);
        });
    }
    auto out = finish(std::move(found), task.threads);
    if (task.mode == EnumerationMode::totally_elementary) {
        std::erase_if(out, [](const CatalogEntry& e) { return !is_totally_elementary(e.polycycle); });
    }
    return out;
}

std::vector<CatalogEntry> enumerate_totally_elementary(const EnumerationTask& task) {
    if (task.params.q != 3) throw PolycycleError(ErrorKind::wrong_valence, "defined for q = 3 only");
    EnumerationTask t = task;
    t.mode = EnumerationMode::totally_elementary;
    return enumerate_elementary(t);
}

std::vector<CatalogEntry> brute_force_elementary(const PolycycleParams& params, int max_faces) {
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    std::vector<Polycycle> frontier, found;
    for (int size : params.gon_sizes) {
        Polycycle p = with_params(monocycle(size), params);
        if (seen.insert(canonical_code(p)).second) frontier.push_back(p);
    }
    for (int k = 1; k <= max_faces && !frontier.empty(); ++k) {
        std::vector<Polycycle> next;
        for (const Polycycle& s : frontier) {
            if (is_elementary(s)) found.push_back(s);
            if (k == max_faces) continue;
            for (int h : s.holes())
                for (int size : params.gon_sizes)
                    for_each_attachment(s, h, size, -1, [&](const Attachment& a) {
                        try {
                            Polycycle p = add_face(s, a);
                            if (seen.insert(canonical_code(p)).second) next.push_back(std::move(p));
                        } catch (const PolycycleError&) {
                        }
                        return true;
                    });
        }
        frontier = std::move(next);
    }
    return finish(std::move(found), 1);
}

FamilyTag family_of(const Polycycle& p) {
    const auto& m = p.map();
    const int faces = p.proper_face_count();
    const int q = p.params().q;
    const CanonicalCode code = canonical_code(p);
    FamilyTag tag;
    if (faces == 1) {
        tag.kind = FamilyKind::monocycle;
        tag.a = m.face_size(p.proper_faces().front());
        return tag;
    }
    std::vector<int> sizes;
    for (int f : p.proper_faces()) sizes.push_back(m.face_size(f));
    std::sort(sizes.begin(), sizes.end());
    if (q == 3 && faces == 3 && p.hole_count() == 1 && sizes.front() >= 3 && sizes.back() <= 5 &&
        canonical_code(gon_triple(sizes[0], sizes[1], sizes[2])) == code) {
        tag.kind = FamilyKind::gon_triple;
        tag.a = sizes[0];
        tag.b = sizes[1];
        tag.c = sizes[2];
        return tag;
    }
    if (p.hole_count() == 2) {
        const auto holes = p.holes();
        const int m0 = m.face_size(holes[0]);
        if (m0 == m.face_size(holes[1])) {
            if (q == 3 && faces == 2 * m0 && canonical_code(barrel(m0)) == code) {
                tag.kind = FamilyKind::barrel;
                tag.a = m0;
                return tag;
            }
            if (q == 5 && faces == 6 * m0 && canonical_code(snub_antiprism(m0)) == code) {
                tag.kind = FamilyKind::snub_antiprism;
                tag.a = m0;
                return tag;
            }
        }
    }
    if (auto s = match_series(p)) return *s;
    return tag;
}

Classification classify(const Polycycle& p, const std::vector<CatalogEntry>& catalog) {
    const CanonicalCode code = canonical_code(p);
    int bound = 0;
    for (int i = 0; i < static_cast<int>(catalog.size()); ++i) {
        bound = std::max(bound, catalog[i].face_count);
        if (catalog[i].code == code) return {catalog[i].family, i};
    }
    throw PolycycleError(ErrorKind::not_in_catalog,
                         p.proper_face_count() > bound ? "face count beyond the enumerated bound"
                                                       : "not an elementary polycycle of this catalog");
}

std::vector<std::vector<int>> coincidence_classes(const std::vector<CatalogEntry>& catalog) {
    std::map<CanonicalCode, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(catalog.size()); ++i) groups[graph_code(catalog[i].polycycle)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [code, members] : groups)
        if (members.size() >= 2) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polycycle
