#pragma once

#include <optional>

#include <string>

#include "polycycle/polycycle.hpp"

namespace polycycle {

enum class FamilyKind { sporadic, monocycle, gon_triple, barrel, snub_antiprism, series };

// Named family membership. Parameters by kind:
//   monocycle: a = i; gon_triple: a <= b <= c; barrel / snub_antiprism: a = m;
//   series: q, pair (two ending letters such as "ab"), n.
struct FamilyTag {
    FamilyKind kind = FamilyKind::sporadic;
    int a = 0, b = 0, c = 0;
    int q = 0;
    std::string pair;
    int n = 0;

    std::string to_string() const;
    bool operator==(const FamilyTag&) const = default;
};

Polycycle monocycle(int i);
Polycycle gon_triple(int i, int j, int k);
Polycycle barrel(int m);
Polycycle snub_antiprism(int m);

// Endings are written as ASCII letters: a b g d e m stand for
// alpha beta gamma delta epsilon mu.
std::vector<std::string> series_pairs(int q);
int series_start(int q, const std::string& pair);
// Member n of the series; q = 3 members have n + 2 faces (n = 0 is the
// 5-gon), q = 5 members have 5 + 3n. Errors: UnknownSeries, IndexBelowStart.
Polycycle series_member(int q, const std::string& pair, int n);
// Series tag of p when it equals a series member up to isomorphism.
std::optional<FamilyTag> match_series(const Polycycle& p);

}  // namespace polycycle
