#include "doctest.h"

#include "trifree/catalog.hpp"
#include "trifree/criticality.hpp"

using namespace trifree;

TEST_CASE("family spec text round trip") {
    FamilySpec s;
    s.family = "9c1";
    s.segments = {{"x", 1}, {"ya", 4}};
    s.fill = {{"middle", "ladder"}};
    FamilySpec t = parse_family_spec(format_family_spec(s));
    CHECK(t.family == s.family);
    CHECK(t.segments == s.segments);
    CHECK(t.fill == s.fill);
}

TEST_CASE("all catalog families instantiate and validate") {
    for (const std::string& f : catalog_families()) {
        INFO("family ", f);
        PlaneGraph g = instantiate(default_spec(f));
        CHECK(g.vertex_count() > 0);
    }
}

TEST_CASE("glue_chord produces chorded critical 9-cycles") {
    auto bare = [](int n) {
        PlaneGraph g;
        for (int i = 0; i < n; ++i) {
            g.name.push_back("c" + std::to_string(i + 1));
            g.outer.push_back(i);
            g.rot.push_back({(i + n - 1) % n, (i + 1) % n});
        }
        return g;
    };
    PlaneGraph g47 = glue_chord(bare(4), {0, 1}, bare(7), {0, 1});
    CHECK(g47.outer.size() == 9);
    CHECK(is_critical(g47).is_critical);
    PlaneGraph g56 = glue_chord(bare(5), {0, 1}, bare(6), {0, 1});
    CHECK(g56.outer.size() == 9);
    CHECK(is_critical(g56).is_critical);
}
