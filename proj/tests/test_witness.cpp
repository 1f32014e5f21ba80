#include "doctest.h"

#include "trifree/witness.hpp"

using namespace trifree;

namespace {

PlaneGraph chordal9() {
    PlaneGraph g;
    for (int i = 0; i < 9; ++i) {
        g.name.push_back("c" + std::to_string(i + 1));
        g.outer.push_back(i);
        g.rot.push_back({(i + 8) % 9, (i + 1) % 9});
    }
    g.rot[0] = {8, 1, 4};
    g.rot[4] = {3, 5, 0};
    validate(g);
    return g;
}

}  // namespace

TEST_CASE("chord witness for an equal-endpoint precoloring") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    // psi(c1) = psi(c5) blocks the chord; pick a proper such coloring.
    Precoloring psi{1, 2, 3, 2, 1, 2, 3, 2, 3};
    REQUIRE(psi[0] == psi[4]);
    REQUIRE(!extend(g, psi));
    for (const Layout& q : enumerate_balanced(g, fs, psi)) {
        auto w = find_witness(g, fs, psi, q);
        REQUIRE(w);
        CHECK(verify_witness(g, psi, q, *w));
    }
}

TEST_CASE("witness completeness over every nonextendable precoloring") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    int checked = 0;
    for (const Precoloring& psi : nonextendable_precolorings(g)) {
        for (const Layout& q : enumerate_balanced(g, fs, psi)) {
            auto w = find_witness(g, fs, psi, q);
            REQUIRE(w);
            CHECK(verify_witness(g, psi, q, *w));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("extendable colorings give no guarantee but no crash") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    Precoloring psi{1, 2, 3, 1, 2, 3, 1, 2, 3};
    if (extend(g, psi)) {
        for (const Layout& q : enumerate_balanced(g, fs, psi))
            (void)find_witness(g, fs, psi, q);
    }
    CHECK(true);
}
