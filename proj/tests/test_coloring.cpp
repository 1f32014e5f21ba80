#include "doctest.h"

#include "trifree/coloring.hpp"

using namespace trifree;

namespace {

PlaneGraph wheel6() {
    return parse_graph(
        "outer: c1 c2 c3 c4 c5 c6\n"
        "v c1: c6 c2 x\n"
        "v c2: c1 c3\n"
        "v c3: c2 c4 x\n"
        "v c4: c3 c5\n"
        "v c5: c4 c6 x\n"
        "v c6: c5 c1\n"
        "v x: c1 c3 c5\n"
        "flags: triangle_free\n");
}

PlaneGraph cycle(int n) {
    PlaneGraph g;
    for (int i = 0; i < n; ++i) {
        g.name.push_back("c" + std::to_string(i + 1));
        g.outer.push_back(i);
    }
    g.rot.resize(n);
    for (int i = 0; i < n; ++i) g.rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return g;
}

}  // namespace

TEST_CASE("proper cycle coloring counts follow the chromatic polynomial") {
    CHECK(proper_cycle_colorings(9).size() == 510);  // 2^9 - 2
    CHECK(proper_cycle_colorings(6).size() == 66);
    CHECK(proper_cycle_colorings(4).size() == 18);
}

TEST_CASE("extension on the quadrangulated 6-cycle") {
    PlaneGraph g = wheel6();
    CHECK(!extend(g, {1, 2, 3, 1, 2, 3}));
    auto phi = extend(g, {1, 2, 1, 2, 1, 2});
    REQUIRE(phi);
    CHECK((*phi)[6] != 1);  // the center avoids the boundary color
    CHECK_THROWS(extend(g, {1, 1, 2, 3, 1, 2}));
}

TEST_CASE("every proper precoloring of a bare cycle extends") {
    PlaneGraph g = cycle(9);
    CHECK(nonextendable_precolorings(g).empty());
    PlaneGraph c5 = cycle(5);
    CHECK(nonextendable_precolorings(c5).empty());
}

TEST_CASE("nonextendable precolorings of the wheel are the antipodal ones") {
    PlaneGraph g = wheel6();
    auto bad = nonextendable_precolorings(g);
    CHECK(bad.size() == 6);
    for (const auto& psi : bad) {
        CHECK(psi[0] == psi[3]);
        CHECK(psi[1] == psi[4]);
        CHECK(psi[2] == psi[5]);
    }
}

TEST_CASE("nonextendable set is closed under color permutations") {
    PlaneGraph g = wheel6();
    auto bad = nonextendable_precolorings(g);
    for (auto psi : bad) {
        for (int& c : psi) c = c == 1 ? 2 : c == 2 ? 1 : 3;
        CHECK(std::find(bad.begin(), bad.end(), psi) != bad.end());
    }
}

TEST_CASE("restriction monotonicity") {
    PlaneGraph g = wheel6();
    PlaneGraph h = g;  // remove edge x-c5
    h.rot[6] = {0, 2};
    h.rot[4] = {3, 5};
    for (const Precoloring& psi : proper_cycle_colorings(6)) {
        if (extend(g, psi)) CHECK(extend(h, psi));
    }
}

TEST_CASE("neighbors of a degree-4 vertex can share a color") {
    // K_{1,4}: star alone (not a plane graph with outer cycle; use the
    // quadrangulated 8-cycle around a degree-4 center instead).
    PlaneGraph g = parse_graph(
        "outer: c1 c2 c3 c4 c5 c6 c7 c8\n"
        "v c1: c8 c2 x\n"
        "v c2: c1 c3\n"
        "v c3: c2 c4 x\n"
        "v c4: c3 c5\n"
        "v c5: c4 c6 x\n"
        "v c6: c5 c7\n"
        "v c7: c6 c8 x\n"
        "v c8: c7 c1\n"
        "v x: c1 c3 c5 c7\n"
        "flags: triangle_free\n");
    auto phi = neighbors_same_color(g, 8);
    REQUIRE(phi);
    CHECK(proper(g, *phi));
    CHECK((*phi)[0] == (*phi)[2]);
    CHECK((*phi)[0] == (*phi)[4]);
    CHECK((*phi)[0] == (*phi)[6]);
}
