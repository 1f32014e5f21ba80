#include "doctest.h"

#include <cstdlib>

#include "trifree/flow.hpp"
#include "trifree/layout.hpp"

using namespace trifree;

namespace {

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

PlaneGraph chordal9() {
    PlaneGraph g = cycle(9);
    g.rot[0] = {8, 1, 4};
    g.rot[4] = {3, 5, 0};
    validate(g);
    return g;
}

}  // namespace

TEST_CASE("4-cycle colored 1,2,1,2 has zero deltas") {
    PlaneGraph g = cycle(4);
    FaceSet fs = faces(g);
    FullColoring phi{1, 2, 1, 2};
    DualOrientation d = orient(g, fs, phi);
    for (int del : d.delta) CHECK(del == 0);
}

TEST_CASE("ascending 9-coloring gives the all-source profile") {
    PlaneGraph g = cycle(9);
    Precoloring psi{1, 2, 3, 1, 2, 3, 1, 2, 3};
    BoundaryProfile p = boundary_profile(g, psi);
    CHECK(p.n_source == 9);
    CHECK(p.n_sink == 0);
}

TEST_CASE("mixed profile keeps n_source - n_sink divisible by three") {
    PlaneGraph g = cycle(9);
    BoundaryProfile p = boundary_profile(g, {1, 2, 1, 2, 1, 2, 1, 2, 3});
    CHECK((p.n_source - p.n_sink) % 3 == 0);
    CHECK(p.n_source + p.n_sink == 9);
    PlaneGraph h = cycle(6);
    BoundaryProfile q = boundary_profile(h, {1, 2, 1, 2, 1, 2});
    CHECK(q.n_source == 3);
    CHECK(q.n_sink == 3);
}

TEST_CASE("profiles over all 9-cycle precolorings use sources 0,3,6,9") {
    PlaneGraph g = cycle(9);
    for (const Precoloring& psi : proper_cycle_colorings(9)) {
        int ns = boundary_profile(g, psi).n_source;
        CHECK((ns == 0 || ns == 3 || ns == 6 || ns == 9));
    }
}

TEST_CASE("delta value sets per face length") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    for (const Precoloring& psi : proper_cycle_colorings(9)) {
        auto phi = extend(g, psi);
        if (!phi) continue;
        for (int f : fs.internal_faces()) {
            int len = fs.face_length(f);
            int del = delta_of(g, fs, *phi, f);
            if (len == 4) CHECK(del == 0);
            if (len == 5) CHECK(std::abs(del) == 3);
            if (len == 6) CHECK((del == -6 || del == 0 || del == 6));
        }
    }
}

TEST_CASE("flow conservation across internal faces") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    for (const Precoloring& psi : proper_cycle_colorings(9)) {
        auto phi = extend(g, psi);
        if (!phi) continue;
        DualOrientation d = orient(g, fs, *phi);
        int sum = 0;
        for (int f : fs.internal_faces()) sum += d.delta[f];
        CHECK(sum == static_cast<int>(d.sink_edges.size()) -
                         static_cast<int>(d.source_edges.size()));
    }
}

TEST_CASE("profile is independent of the chosen extension") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    Precoloring psi{1, 2, 3, 1, 2, 1, 2, 1, 2};
    BoundaryProfile p = boundary_profile(g, psi);
    auto phi = extend(g, psi);
    REQUIRE(phi);
    DualOrientation d = orient(g, fs, *phi);
    CHECK(static_cast<int>(d.source_edges.size()) == p.n_source);
}

TEST_CASE("allowed layout values") {
    CHECK(allowed_q_values(4) == std::vector<int>{0});
    CHECK(allowed_q_values(5) == std::vector<int>{-3, 3});
    CHECK(allowed_q_values(6) == std::vector<int>{-6, 0, 6});
    CHECK(allowed_q_values(7) == std::vector<int>{-3, 3});
    CHECK(allowed_q_values(9) == std::vector<int>{-9, -3, 3, 9});
}

TEST_CASE("balanced layouts on the chordal 9-cycle") {
    PlaneGraph g = chordal9();  // S(G) = {5, 6}
    FaceSet fs = faces(g);
    SUBCASE("profile (9,0): unique layout -3,-6") {
        auto ls = enumerate_balanced(g, fs, {1, 2, 3, 1, 2, 3, 1, 2, 3});
        REQUIRE(ls.size() == 1);
        CHECK(ls[0].sum() == -9);
    }
    SUBCASE("profile (6,3): the two layouts of the case analysis") {
        Precoloring psi{1, 2, 3, 1, 2, 3, 2, 1, 2};
        BoundaryProfile p = boundary_profile(g, psi);
        REQUIRE(((p.n_source == 6 && p.n_sink == 3) ||
                 (p.n_source == 3 && p.n_sink == 6)));
        auto ls = enumerate_balanced(g, fs, psi);
        CHECK(ls.size() == 2);
    }
}

TEST_CASE("layout of a coloring is balanced and within bounds") {
    PlaneGraph g = chordal9();
    FaceSet fs = faces(g);
    for (const Precoloring& psi : proper_cycle_colorings(9)) {
        auto phi = extend(g, psi);
        if (!phi) continue;
        Layout q = layout_of_coloring(g, fs, *phi);
        CHECK(is_balanced(g, psi, q));
        auto balanced = enumerate_balanced(g, fs, psi);
        bool found = false;
        for (const Layout& b : balanced)
            if (b.q == q.q) found = true;
        CHECK(found);
    }
}

TEST_CASE("all-quad interiors carry the empty layout") {
    PlaneGraph g = cycle(4);
    FaceSet fs = faces(g);
    auto phi = extend(g, {1, 2, 1, 2});
    REQUIRE(phi);
    Layout q = layout_of_coloring(g, fs, *phi);
    CHECK(q.q.empty());
    CHECK(q.sum() == 0);
}
