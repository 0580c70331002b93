#include "soup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polycycle::detail {

Soup Soup::from(const Polycycle& p) {
    const auto& m = p.map();
    Soup s;
    const int n = m.dart_count();
    s.sigma = m.sigma_permutation();
    s.alpha.resize(n);
    s.hole.resize(n);
    s.alive.assign(n, 1);
    for (Dart d = 0; d < n; ++d) {
        s.alpha[d] = opposite(d);
        s.hole[d] = p.is_hole_dart(d) ? 1 : 0;
    }
    return s;
}

Soup Soup::join(const Soup& a, const Soup& b) {
    Soup s = a;
    const Dart shift = a.size();
    for (int d = 0; d < b.size(); ++d) {
        s.sigma.push_back(b.sigma[d] + shift);
        s.alpha.push_back(b.alpha[d] + shift);
        s.hole.push_back(b.hole[d]);
        s.alive.push_back(b.alive[d]);
    }
    return s;
}

Dart Soup::sigma_pred(Dart d) const {
    Dart x = d;
    while (sigma[x] != d) x = sigma[x];
    return x;
}

Dart Soup::new_edge(bool hole_first, bool hole_second) {
    const Dart d = size();
    sigma.push_back(d);
    sigma.push_back(d + 1);
    alpha.push_back(d + 1);
    alpha.push_back(d);
    hole.push_back(hole_first);
    hole.push_back(hole_second);
    alive.push_back(1);
    alive.push_back(1);
    return d;
}

void Soup::kill_from_rotation(Dart d) {
    if (sigma[d] != d) {
        const Dart p = sigma_pred(d);
        sigma[p] = sigma[d];
    }
    sigma[d] = d;
    alive[d] = 0;
}

void Soup::mirror() {
    std::vector<Dart> inv(sigma.size());
    for (int d = 0; d < size(); ++d)
        if (alive[d]) inv[sigma[d]] = d;
    std::vector<char> flipped(hole.size());
    for (int d = 0; d < size(); ++d)
        if (alive[d]) flipped[d] = hole[alpha[d]];
    for (int d = 0; d < size(); ++d)
        if (alive[d]) sigma[d] = inv[d];
    hole = std::move(flipped);
}

void Soup::split_hole_corners() {
    std::vector<char> seen(sigma.size(), 0);
    for (Dart d0 = 0; d0 < size(); ++d0) {
        if (!alive[d0] || seen[d0]) continue;
        std::vector<Dart> rot;
        for (Dart x = d0; !seen[x]; x = sigma[x]) {
            seen[x] = 1;
            rot.push_back(x);
        }
        // the corner after x (between x and sigma(x)) lies in the face of alpha(x)
        std::vector<int> cuts;
        for (int i = 0; i < static_cast<int>(rot.size()); ++i)
            if (hole[alpha[rot[i]]]) cuts.push_back(i);
        if (cuts.size() < 2) continue;
        const int k = static_cast<int>(rot.size());
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const int end = cuts[c];
            const int start = (cuts[(c + cuts.size() - 1) % cuts.size()] + 1) % k;
            sigma[rot[end]] = rot[start];
        }
    }
}

void Soup::set_phi(const std::vector<Dart>& phi) {
    for (int d = 0; d < size(); ++d)
        if (alive[d]) sigma[d] = phi[alpha[d]];
}

std::vector<std::vector<Dart>> Soup::components() const {
    std::vector<int> comp(sigma.size(), -1);
    std::vector<std::vector<Dart>> out;
    for (Dart d0 = 0; d0 < size(); ++d0) {
        if (!alive[d0] || comp[d0] >= 0) continue;
        const int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Dart> stack{d0};
        comp[d0] = c;
        while (!stack.empty()) {
            const Dart d = stack.back();
            stack.pop_back();
            out.back().push_back(d);
            for (Dart x : {sigma[d], alpha[d]})
                if (comp[x] < 0) {
                    comp[x] = c;
                    stack.push_back(x);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Soup::Compacted Soup::compact(const std::vector<Dart>& component) const {
    Compacted out;
    out.dart_map.assign(sigma.size(), -1);
    Dart next = 0;
    for (Dart d : component) {
        if (out.dart_map[d] >= 0) continue;
        out.dart_map[d] = next++;
        out.dart_map[alpha[d]] = next++;
    }
    std::vector<Dart> s(next);
    std::vector<char> h(next);
    for (Dart d : component) {
        s[out.dart_map[d]] = out.dart_map[sigma[d]];
        h[out.dart_map[d]] = hole[d];
    }
    out.map = PlanarMap::from_sigma(std::move(s));
    out.labels.resize(out.map.face_count());
    for (int f = 0; f < out.map.face_count(); ++f) {
        const auto& darts = out.map.face_darts(f);
        const char flag = h[darts.front()];
        for (Dart d : darts)
            if (h[d] != flag) throw std::logic_error("face with mixed hole flags after surgery");
        out.labels[f] = flag ? FaceKind::hole : FaceKind::proper;
    }
    return out;
}

Soup::Compacted Soup::compact_all() const {
    auto comps = components();
    if (comps.size() != 1)
        throw PolycycleError(ErrorKind::disconnected,
                             "surgery produced " + std::to_string(comps.size()) + " components");
    return compact(comps.front());
}

}  // namespace polycycle::detail
