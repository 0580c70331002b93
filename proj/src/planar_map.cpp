#include "polycycle/planar_map.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace polycycle {

std::string CanonicalCode::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

void PlanarMap::derive(std::vector<int> vertex_of, int vertex_count) {
    const int n = dart_count();
    sigma_inv_.assign(n, 0);
    phi_.assign(n, 0);
    for (Dart d = 0; d < n; ++d) {
        sigma_inv_[sigma_[d]] = d;
        phi_[d] = sigma_[opposite(d)];
    }

    if (vertex_of.empty()) {
        vertex_of.assign(n, -1);
        vertex_count = 0;
        for (Dart d = 0; d < n; ++d) {
            if (vertex_of[d] >= 0) continue;
            for (Dart x = d; vertex_of[x] < 0; x = sigma_[x]) vertex_of[x] = vertex_count;
            ++vertex_count;
        }
    }
    vertex_of_ = std::move(vertex_of);
    vertex_darts_.assign(vertex_count, {});
    std::vector<char> seen(n, 0);
    for (int v = 0; v < vertex_count; ++v) vertex_darts_[v].clear();
    for (Dart d = 0; d < n; ++d) {
        if (seen[d]) continue;
        const int v = vertex_of_[d];
        if (!vertex_darts_[v].empty())
            throw PolycycleError(ErrorKind::non_involutive_alpha, "vertex rotation is not a single cycle");
        for (Dart x = d; !seen[x]; x = sigma_[x]) {
            seen[x] = 1;
            if (vertex_of_[x] != v)
                throw PolycycleError(ErrorKind::non_involutive_alpha, "vertex ids inconsistent with sigma");
            vertex_darts_[v].push_back(x);
        }
    }

    face_of_.assign(n, -1);
    face_darts_.clear();
    for (Dart d = 0; d < n; ++d) {
        if (face_of_[d] >= 0) continue;
        const int f = static_cast<int>(face_darts_.size());
        face_darts_.emplace_back();
        for (Dart x = d; face_of_[x] < 0; x = phi_[x]) {
            face_of_[x] = f;
            face_darts_.back().push_back(x);
        }
    }

    // connectivity under <sigma, alpha>
    if (n > 0) {
        std::vector<char> reached(n, 0);
        std::vector<Dart> stack{0};
        reached[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            for (Dart x : {sigma_[d], opposite(d)}) {
                if (!reached[x]) {
                    reached[x] = 1;
                    ++count;
                    stack.push_back(x);
                }
            }
        }
        if (count != n) throw PolycycleError(ErrorKind::disconnected, "darts form more than one component");
    }
}

PlanarMap PlanarMap::from_sigma(std::vector<Dart> sigma) {
    if (sigma.size() % 2 != 0 || sigma.empty())
        throw PolycycleError(ErrorKind::non_involutive_alpha, "dart count must be even and positive");
    std::vector<char> hit(sigma.size(), 0);
    for (Dart s : sigma) {
        if (s < 0 || s >= static_cast<Dart>(sigma.size()) || hit[s])
            throw PolycycleError(ErrorKind::non_involutive_alpha, "sigma is not a permutation");
        hit[s] = 1;
    }
    PlanarMap m;
    m.sigma_ = std::move(sigma);
    m.derive({}, 0);
    return m;
}

PlanarMap build_map(const std::vector<std::vector<EdgeEnd>>& vertex_rotations) {
    int max_edge = -1;
    for (const auto& rot : vertex_rotations)
        for (EdgeEnd e : rot) {
            if (e < 0) throw PolycycleError(ErrorKind::non_involutive_alpha, "negative edge id");
            max_edge = std::max(max_edge, e);
        }
    const int edges = max_edge + 1;
    if (edges == 0) throw PolycycleError(ErrorKind::disconnected, "map has no edges");

    std::vector<int> uses(edges, 0);
    for (const auto& rot : vertex_rotations)
        for (EdgeEnd e : rot) ++uses[e];
    for (int e = 0; e < edges; ++e)
        if (uses[e] != 2)
            throw PolycycleError(ErrorKind::non_involutive_alpha,
                                 "edge " + std::to_string(e) + " referenced " + std::to_string(uses[e]) + " times");

    const int vcount = static_cast<int>(vertex_rotations.size());
    std::vector<int> next_half(edges, 0);
    std::vector<Dart> sigma(2 * edges, -1);
    std::vector<int> vertex_of(2 * edges, -1);
    for (int v = 0; v < vcount; ++v) {
        const auto& rot = vertex_rotations[v];
        if (rot.empty()) throw PolycycleError(ErrorKind::disconnected, "isolated vertex " + std::to_string(v));
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i)
            if (k > 1 && rot[i] == rot[(i + 1) % k])
                throw PolycycleError(ErrorKind::loop_edge, "edge " + std::to_string(rot[i]) + " bounds a 1-gon");
        std::vector<Dart> darts;
        darts.reserve(k);
        for (EdgeEnd e : rot) darts.push_back(2 * e + next_half[e]++);
        for (int i = 0; i < k; ++i) {
            sigma[darts[i]] = darts[(i + 1) % k];
            vertex_of[darts[i]] = v;
        }
    }

    PlanarMap m;
    m.sigma_ = std::move(sigma);
    m.derive(std::move(vertex_of), vcount);
    return m;
}

bool euler_genus_check(const PlanarMap& map) { return map.euler_characteristic() == 2; }

namespace {

// Breadth-first encoder over flags with early termination against the best code.
class FlagEncoder {
public:
    FlagEncoder(const PlanarMap& map, const FaceLabeling& labels) : map_(map) {
        const int n = map.dart_count();
        label_[0].resize(n);
        label_[1].resize(n);
        for (Dart d = 0; d < n; ++d) {
            label_[0][d] = static_cast<int>(labels[map.face_of(d)]);
            label_[1][d] = static_cast<int>(labels[map.face_of(opposite(d))]);
        }
        number_.assign(n, -1);
        order_.reserve(n);
    }

    std::array<int, 4> invariant(Dart d, int orientation) const {
        const int side = orientation > 0 ? 0 : 1;
        const int face = side == 0 ? map_.face_of(d) : map_.face_of(opposite(d));
        const int other = side == 0 ? map_.face_of(opposite(d)) : map_.face_of(d);
        return {label_[side][d] * 1024 + map_.face_size(face), map_.degree(map_.tail(d)),
                label_[side ^ 1][d] * 1024 + map_.face_size(other), map_.degree(map_.head(d))};
    }

    // Encodes from the flag; returns -1, 0, +1 comparing against best (which is
    // replaced when smaller). An empty best is treated as +infinity.
    int encode(Dart start, int orientation, std::vector<int>& best, std::vector<Dart>* order_out) {
        const int side = orientation > 0 ? 0 : 1;
        std::fill(number_.begin(), number_.end(), -1);
        order_.clear();
        number_[start] = 0;
        order_.push_back(start);

        scratch_.clear();
        int cmp = best.empty() ? -1 : 0;
        auto emit = [&](int value) -> bool {
            const std::size_t pos = scratch_.size();
            scratch_.push_back(value);
            if (cmp == 0) {
                if (value < best[pos]) cmp = -1;
                else if (value > best[pos]) cmp = 1;
            }
            return cmp <= 0;
        };

        const auto inv = invariant(start, orientation);
        if (!emit(map_.dart_count())) return 1;
        for (int x : inv)
            if (!emit(x)) return 1;

        for (std::size_t i = 0; i < order_.size(); ++i) {
            const Dart d = order_[i];
            const Dart a = opposite(d);
            const Dart r = side == 0 ? map_.sigma(d) : map_.sigma_inv(d);
            for (Dart x : {a, r}) {
                if (number_[x] < 0) {
                    number_[x] = static_cast<int>(order_.size());
                    order_.push_back(x);
                }
            }
            if (!emit(number_[a]) || !emit(number_[r]) || !emit(label_[side][d])) return 1;
        }
        if (cmp < 0) best = scratch_;
        if (order_out) *order_out = order_;
        return cmp;
    }

private:
    const PlanarMap& map_;
    std::array<std::vector<int>, 2> label_;
    std::vector<int> number_;
    std::vector<Dart> order_;
    std::vector<int> scratch_;
};

CanonicalCode pack(const std::vector<int>& words) {
    std::string bytes;
    bytes.reserve(words.size() * 2);
    for (int w : words) {
        bytes.push_back(static_cast<char>((w >> 8) & 0xff));
        bytes.push_back(static_cast<char>(w & 0xff));
    }
    return CanonicalCode(std::move(bytes));
}

struct FormWithOrders {
    CanonicalForm form;
    std::vector<std::vector<Dart>> orders;
};

FormWithOrders compute_form(const PlanarMap& map, const FaceLabeling& labels, bool want_orders) {
    FlagEncoder enc(map, labels);
    const int n = map.dart_count();
    std::array<int, 4> best_inv{};
    bool have = false;
    std::vector<Flag> candidates;
    for (Dart d = 0; d < n; ++d)
        for (int o : {1, -1}) {
            const auto inv = enc.invariant(d, o);
            if (!have || inv < best_inv) {
                best_inv = inv;
                have = true;
                candidates.clear();
            }
            if (inv == best_inv) candidates.push_back({d, o});
        }

    std::vector<int> best;
    FormWithOrders out;
    std::vector<Dart> order;
    for (const Flag& f : candidates) {
        const int cmp = enc.encode(f.dart, f.orientation, best, want_orders ? &order : nullptr);
        if (cmp < 0) {
            out.form.minimal_flags.clear();
            out.orders.clear();
        }
        if (cmp <= 0) {
            out.form.minimal_flags.push_back(f);
            if (want_orders) out.orders.push_back(order);
        }
    }
    out.form.code = pack(best);
    return out;
}

}  // namespace

CanonicalForm canonical_form(const PlanarMap& map, const FaceLabeling& labels) {
    return compute_form(map, labels, false).form;
}

CanonicalCode canonical_code(const PlanarMap& map, const FaceLabeling& labels) {
    return canonical_form(map, labels).code;
}

std::vector<MapAutomorphism> automorphisms(const PlanarMap& map, const FaceLabeling& labels) {
    auto full = compute_form(map, labels, true);
    const auto& flags = full.form.minimal_flags;
    const int n = map.dart_count();
    std::vector<MapAutomorphism> result;
    result.reserve(flags.size());
    const auto& base = full.orders.front();
    for (std::size_t k = 0; k < flags.size(); ++k) {
        MapAutomorphism a;
        a.image.assign(n, 0);
        for (int i = 0; i < n; ++i) a.image[base[i]] = full.orders[k][i];
        a.orientation_preserving = flags[k].orientation == flags.front().orientation;
        result.push_back(std::move(a));
    }
    // identity first
    auto is_identity = [](const MapAutomorphism& a) {
        for (std::size_t i = 0; i < a.image.size(); ++i)
            if (a.image[i] != static_cast<Dart>(i)) return false;
        return true;
    };
    auto it = std::find_if(result.begin(), result.end(), is_identity);
    if (it != result.end()) std::iter_swap(result.begin(), it);
    return result;
}

PlanarMap relabel_darts(const PlanarMap& map, std::span<const Dart> dart_image) {
    const int n = map.dart_count();
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[dart_image[d]] = dart_image[map.sigma(d)];
    return PlanarMap::from_sigma(std::move(sigma));
}

}  // namespace polycycle
