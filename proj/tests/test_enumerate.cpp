#include <doctest.h>

#include <functional>

#include <map>

#include "polycycle/enumerate.hpp"

using namespace polycycle;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const PolycycleError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::io_error;
}

EnumerationTask task(std::vector<int> r, int q, int max_faces, int threads = 1) {
    return {PolycycleParams::make(std::move(r), q), max_faces, EnumerationMode::elementary, threads};
}

}  // namespace

TEST_CASE("argument checks") {
    CHECK(kind_of([] { enumerate_elementary(task({3, 4, 5, 6}, 3, 6)); }) == ErrorKind::not_elliptic);
    CHECK(kind_of([] { enumerate_elementary(task({3}, 3, 0)); }) == ErrorKind::bound_too_small);
    CHECK(kind_of([] { enumerate_totally_elementary(task({2, 3}, 4, 6)); }) == ErrorKind::wrong_valence);
    CHECK(default_max_faces(3) == 12);
    CHECK(default_max_faces(5) == 20);
}

TEST_CASE("small q = 3 catalog is sound, sorted and complete") {
    const auto cat = enumerate_elementary(task({3, 4, 5}, 3, 5));
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& e = cat[i];
        CHECK(is_elementary(e.polycycle));
        CHECK(e.code == canonical_code(e.polycycle));
        CHECK(e.face_count == e.polycycle.proper_face_count());
        CHECK(e.hole_count == e.polycycle.hole_count());
        if (i) CHECK(std::make_pair(cat[i - 1].face_count, cat[i - 1].code) < std::make_pair(e.face_count, e.code));
    }
    std::map<int, int> tally;
    for (const auto& e : cat) ++tally[e.face_count];
    // three isolated gons; ten triples; no elementary pair of faces exists
    CHECK(tally[1] == 3);
    CHECK(tally[2] == 0);
    CHECK(tally[3] == 10);

    std::vector<CanonicalCode> a, b;
    for (const auto& e : brute_force_elementary(PolycycleParams::make({3, 4, 5}, 3), 5)) a.push_back(e.code);
    for (const auto& e : cat) b.push_back(e.code);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("totally elementary slices") {
    const auto cat = enumerate_totally_elementary(
        {PolycycleParams::make({3, 4, 5}, 3), 10, EnumerationMode::totally_elementary, 1});
    std::map<int, int> tally;
    for (const auto& e : cat) {
        ++tally[e.face_count];
        CHECK(is_totally_elementary(e.polycycle));
    }
    CHECK(tally[1] == 3);
    CHECK(tally[3] == 10);
}

TEST_CASE("thread count does not change output") {
    const auto one = enumerate_elementary(task({2, 3}, 5, 14, 1));
    const auto four = enumerate_elementary(task({2, 3}, 5, 14, 4));
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].code == four[i].code);
}

TEST_CASE("classification") {
    const auto cat = enumerate_elementary(task({3, 4, 5}, 3, 12));
    const Classification b3 = classify(barrel(3), cat);
    CHECK(b3.family.to_string() == "barrel(3)");
    CHECK(cat[b3.index].code == canonical_code(barrel(3)));

    const Classification s = classify(series_member(3, "aa", 2), cat);
    CHECK(s.family.to_string() == "series(3,aa,2)");
    CHECK(cat[s.index].face_count == 4);

    // the single sporadic entry with at least 11 faces
    int late = 0;
    for (const auto& e : cat)
        if (e.face_count >= 11 && is_sporadic(e.family)) {
            ++late;
            CHECK(classify(e.polycycle, cat).family.kind == FamilyKind::sporadic);
            CHECK(e.aut_p_order == 10);
            CHECK(e.aut_g_order == 120);
            CHECK_FALSE(e.extensible);
        }
    CHECK(late == 1);

    CHECK(kind_of([&] { classify(barrel(7), cat); }) == ErrorKind::not_in_catalog);
    for (const auto& e : cat) CHECK(classify(e.polycycle, cat).family == e.family);
}

TEST_CASE("coincidence classes") {
    const auto cat = enumerate_elementary(task({3, 4}, 3, 4));
    const auto classes = coincidence_classes(cat);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].size() == 2);
    CHECK(contains_gon(cat[classes[0][0]].polycycle, 4));
}
