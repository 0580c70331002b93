#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "polycycle/families.hpp"
#include "series.hpp"

namespace polycycle {

namespace {

struct SeriesBase {
    int q;
    const char* pair;
    std::vector<std::pair<int, const char*>> members;
};

const std::vector<SeriesBase>& bases() {
    static const std::vector<SeriesBase> table = {
#include "series_bases.inc"
    };
    return table;
}

constexpr std::string_view letters = "abgdem";

PolycycleParams series_params(int q) {
    return q == 3 ? PolycycleParams::make({3, 4, 5}, 3) : PolycycleParams::make({2, 3}, 5);
}

Polycycle decode(const char* text, const PolycycleParams& params) {
    const std::string s(text);
    const auto bar = s.find('|');
    std::vector<std::vector<EdgeEnd>> rot(1);
    for (char c : s.substr(0, bar))
        if (c == ';') rot.emplace_back();
    std::istringstream vs(s.substr(0, bar));
    std::string chunk;
    for (std::size_t v = 0; std::getline(vs, chunk, ';'); ++v) {
        std::istringstream es(chunk);
        for (int e; es >> e;) rot[v].push_back(e);
    }
    PlanarMap m = build_map(rot);
    FaceLabeling labels(m.face_count(), FaceKind::proper);
    std::istringstream hs(s.substr(bar + 1));
    for (int h; hs >> h;) labels[h] = FaceKind::hole;
    return validate(std::move(m), std::move(labels), params);
}

// Pair in alphabet order of the ending letters, or empty if not a pair.
std::string normalize(const std::string& pair) {
    if (pair.size() != 2) return {};
    const auto a = letters.find(pair[0]), b = letters.find(pair[1]);
    if (a == std::string_view::npos || b == std::string_view::npos) return {};
    return a <= b ? pair : std::string{pair[1], pair[0]};
}

const SeriesBase* find_base(int q, const std::string& pair) {
    const std::string key = normalize(pair);
    for (const auto& b : bases())
        if (b.q == q && key == b.pair) return &b;
    return nullptr;
}

const SeriesBase& require_base(int q, const std::string& pair) {
    const SeriesBase* b = find_base(q, pair);
    if (!b) throw PolycycleError(ErrorKind::unknown_series, "q=" + std::to_string(q) + " pair " + pair);
    return *b;
}

std::mutex cache_mutex;
std::map<std::tuple<int, std::string, int>, Polycycle> member_cache;

Polycycle duplicate_any_slab(const Polycycle& p) {
    for (const auto& s : detail::slabs(p))
        if (auto r = detail::duplicate_slab(p, s)) return canonical_polycycle(*r);
    throw PolycycleError(ErrorKind::result_violates_axioms, "series member without a slab");
}

// Faces of member n; q = 3 members have n + 2 faces (the isolated 5-gon is
// the exception at n = 0), q = 5 members have 5 + 3n.
int member_faces(int q, int n) { return q == 3 ? (n == 0 ? 1 : n + 2) : 5 + 3 * n; }

}  // namespace

std::vector<std::string> series_pairs(int q) {
    std::vector<std::string> out;
    for (const auto& b : bases())
        if (b.q == q) out.emplace_back(b.pair);
    if (out.empty()) throw PolycycleError(ErrorKind::unknown_series, "no series for q=" + std::to_string(q));
    std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
        return std::pair(letters.find(x[0]), letters.find(x[1])) < std::pair(letters.find(y[0]), letters.find(y[1]));
    });
    return out;
}

int series_start(int q, const std::string& pair) {
    const SeriesBase& b = require_base(q, pair);
    if (q == 3 && std::string_view(b.pair) == "aa") return 0;
    return b.members.front().first;
}

Polycycle series_member(int q, const std::string& pair, int n) {
    const SeriesBase& b = require_base(q, pair);
    const int start = series_start(q, pair);
    if (n < start)
        throw PolycycleError(ErrorKind::index_below_start,
                             std::string(b.pair) + " starts at " + std::to_string(start));
    const PolycycleParams params = series_params(q);
    if (q == 3 && n == 0) return with_params(monocycle(5), params);
    if (q == 3 && n == 1) return with_params(gon_triple(5, 5, 5), params);
    const auto key = std::make_tuple(q, std::string(b.pair), n);
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = member_cache.find(key); it != member_cache.end()) return it->second;
    }
    Polycycle p = [&] {
        for (const auto& [index, text] : b.members)
            if (index == n) return canonical_polycycle(decode(text, params));
        // one slab holds two steps' worth of faces
        return duplicate_any_slab(series_member(q, b.pair, n - 2));
    }();
    std::lock_guard lock(cache_mutex);
    return member_cache.emplace(key, std::move(p)).first->second;
}

std::optional<FamilyTag> match_series(const Polycycle& p) {
    const int q = p.params().q;
    if ((q != 3 && q != 5) || p.hole_count() != 1) return std::nullopt;
    const int faces = p.proper_face_count();
    const CanonicalCode code = canonical_code(p);
    for (const auto& pair : series_pairs(q)) {
        for (int n = series_start(q, pair); member_faces(q, n) <= faces; ++n) {
            if (member_faces(q, n) != faces) continue;
            if (canonical_code(series_member(q, pair, n)) == code) {
                FamilyTag tag;
                tag.kind = FamilyKind::series;
                tag.q = q;
                tag.pair = pair;
                tag.n = n;
                return tag;
            }
        }
    }
    return std::nullopt;
}

}  // namespace polycycle
