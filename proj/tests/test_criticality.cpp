#include "doctest.h"

#include "trifree/criticality.hpp"
#include "trifree/catalog.hpp"

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
        g.rot.push_back({(i + n - 1) % n, (i + 1) % n});
    }
    return g;
}
}  // namespace

TEST_CASE("quadrangulated 6-cycle is critical, bare cycles are not") {
    CriticalityVerdict v = is_critical(wheel6());
    CHECK(v.is_critical);
    CHECK(v.nonextendable.size() == 6);
    CHECK(v.witness_per_edge.size() == 3);
    CHECK(!is_critical(cycle(9)).is_critical);
    CHECK(!is_critical(cycle(6)).is_critical);
}

TEST_CASE("separating 4-cycle kills criticality and the interior condition") {
    // quadrangulation of a 6-cycle with a separating 4-cycle: subdivide the
    // wheel's center into a 4-cycle around an inner vertex
    PlaneGraph g = from_faces({0, 1, 2, 3, 4, 5},
                              {{0, 1, 2, 6},
                               {2, 3, 4, 7},
                               {4, 5, 0, 8},
                               {0, 6, 9, 8},
                               {2, 7, 9, 6},
                               {4, 8, 9, 7}},
                              10);
    validate(g);
    FaceSet fs = faces(g);
    CHECK(fs.internal_5plus().empty());
    bool has_sep = false;
    for (const auto& c : cycles_up_to(g, 4))
        if (c.separating) has_sep = true;
    if (has_sep) {
        CHECK(!is_critical(g).is_critical);
        CHECK(classify(g).family == Family::NotCritical);
    }
}

TEST_CASE("chordal 9-cycle is critical and classified as the chord family") {
    PlaneGraph g = cycle(9);
    g.rot[0] = {8, 1, 4};
    g.rot[4] = {3, 5, 0};
    validate(g);
    CHECK(is_critical(g).is_critical);
    CHECK(classify(g).family == Family::F9Chord);
    CHECK(interior_condition(g));
}

TEST_CASE("classification of the 6- and 7-cycle shapes") {
    CHECK(classify(wheel6()).family == Family::Quad6);
    PlaneGraph seven = cycle(7);
    seven.rot[0] = {6, 1, 4};
    seven.rot[4] = {3, 5, 0};
    validate(seven);
    Classification c = classify(seven);
    CHECK(c.family == Family::F7a);
    CHECK(is_critical(seven).is_critical);
}
