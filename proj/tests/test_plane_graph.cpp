#include "doctest.h"

#include <set>

#include "trifree/plane_graph.hpp"

using namespace trifree;

namespace {

PlaneGraph cycle(int n) {
    PlaneGraph g;
    for (int i = 0; i < n; ++i) {
        g.name.push_back("c" + std::to_string(i + 1));
        g.outer.push_back(i);
    }
    g.rot.resize(n);
    for (int i = 0; i < n; ++i)
        g.rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return g;
}

// 6-cycle with a center adjacent to c1, c3, c5.
PlaneGraph wheel6() {
    PlaneGraph g = cycle(6);
    g.name.push_back("x");
    g.rot.push_back({0, 2, 4});
    g.rot[0] = {5, 1, 6};
    g.rot[2] = {1, 3, 6};
    g.rot[4] = {3, 5, 6};
    validate(g);
    return g;
}

}  // namespace

TEST_CASE("bare cycle has two faces") {
    PlaneGraph g = cycle(4);
    validate(g);
    FaceSet fs = faces(g);
    CHECK(fs.faces.size() == 2);
    CHECK(fs.outer_face >= 0);
}

TEST_CASE("wheel-like quadrangulation has four faces and empty S(G)") {
    PlaneGraph g = wheel6();
    FaceSet fs = faces(g);
    CHECK(fs.faces.size() == 4);
    int quads = 0;
    for (int f : fs.internal_faces())
        if (fs.face_length(f) == 4) ++quads;
    CHECK(quads == 3);
    CHECK(fs.internal_5plus().empty());
}

TEST_CASE("parse round trip and validation errors") {
    PlaneGraph g = parse_graph(
        "outer: c1 c2 c3 c4 c5 c6\n"
        "v c1: c6 c2 x\n"
        "v c2: c1 c3\n"
        "v c3: c2 c4 x\n"
        "v c4: c3 c5\n"
        "v c5: c4 c6 x\n"
        "v c6: c5 c1\n"
        "v x: c1 c3 c5\n"
        "flags: triangle_free\n");
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 9);
    PlaneGraph h = parse_graph(format_graph(g));
    CHECK(canonical_form(g) == canonical_form(h));

    CHECK_THROWS_AS(parse_graph("outer: a b c d\n"
                                "v a: b\n"
                                "v b: a c\n"
                                "v c: b d\n"
                                "v d: c a\n"),
                    GraphError);  // asymmetric: d lists a, a omits d
}

TEST_CASE("triangle flagged when declared triangle-free") {
    CHECK_THROWS_AS(parse_graph("outer: a b c\n"
                                "v a: c b\n"
                                "v b: a c\n"
                                "v c: b a\n"
                                "flags: triangle_free\n"),
                    GraphError);
}

TEST_CASE("nine-cycle with chord gives S(G) = {5,6}") {
    PlaneGraph g = cycle(9);
    // chord c1-c5
    g.rot[0] = {8, 1, 4};
    g.rot[4] = {3, 5, 0};
    validate(g);
    FaceSet fs = faces(g);
    CHECK(fs.internal_5plus() == std::vector<int>{5, 6});
}

TEST_CASE("face lengths sum to 2E and are start-dart independent") {
    PlaneGraph g = wheel6();
    FaceSet fs = faces(g);
    int total = 0;
    for (const auto& f : fs.faces) total += static_cast<int>(f.size());
    CHECK(total == 2 * g.edge_count());
}

TEST_CASE("cycles_up_to flags facial and separating cycles") {
    PlaneGraph g = cycle(4);
    auto cycles = cycles_up_to(g, 9);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].facial);
    CHECK(!cycles[0].separating);

    // 8-cycle, inner 4-cycle pqrs joined by four spokes, vertex z inside.
    PlaneGraph h = from_faces({0, 1, 2, 3, 4, 5, 6, 7},
                              {{0, 1, 2, 9, 8},
                               {2, 3, 4, 10, 9},
                               {4, 5, 6, 11, 10},
                               {6, 7, 0, 8, 11},
                               {8, 9, 10, 12},
                               {10, 11, 8, 12}},
                              13);
    auto cyc = cycles_up_to(h, 4);
    bool found_sep = false;
    for (const auto& c : cyc)
        if (c.cycle.size() == 4 && c.separating) found_sep = true;
    CHECK(found_sep);
}

TEST_CASE("disk subgraph extraction") {
    PlaneGraph g = wheel6();
    SUBCASE("outer cycle returns the graph itself") {
        PlaneGraph d = disk_subgraph(g, g.outer);
        CHECK(canonical_form(d) == canonical_form(g));
    }
    SUBCASE("facial 4-cycle returns the bare cycle") {
        PlaneGraph d = disk_subgraph(g, {0, 1, 2, 6});
        CHECK(d.vertex_count() == 4);
        CHECK(d.edge_count() == 4);
    }
    SUBCASE("idempotence") {
        PlaneGraph d = disk_subgraph(g, {0, 1, 2, 6});
        PlaneGraph d2 = disk_subgraph(d, d.outer);
        CHECK(canonical_form(d) == canonical_form(d2));
    }
}

TEST_CASE("separating 4-cycle disk keeps its interior") {
    PlaneGraph h = from_faces({0, 1, 2, 3, 4, 5, 6, 7},
                              {{0, 1, 2, 9, 8},
                               {2, 3, 4, 10, 9},
                               {4, 5, 6, 11, 10},
                               {6, 7, 0, 8, 11},
                               {8, 9, 10, 12},
                               {10, 11, 8, 12}},
                              13);
    PlaneGraph d = disk_subgraph(h, {8, 9, 10, 11});
    CHECK(d.vertex_count() == 5);  // the 4-cycle plus the enclosed vertex
    CHECK(d.edge_count() == 6);
}

TEST_CASE("canonical form is rotation and reflection invariant") {
    PlaneGraph g = wheel6();
    PlaneGraph h = g;
    std::rotate(h.outer.begin(), h.outer.begin() + 2, h.outer.end());
    CHECK(canonical_form(g) == canonical_form(h));
    PlaneGraph r = g;
    std::reverse(r.outer.begin(), r.outer.end());
    for (auto& rot : r.rot) std::reverse(rot.begin(), rot.end());
    CHECK(canonical_form(g) == canonical_form(r));
}
