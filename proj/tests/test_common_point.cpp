#include "doctest.h"

#include "trifree/common_point.hpp"

using namespace trifree;

TEST_CASE("shortest patterns have a single crossing") {
    auto pats = enumerate_irreducible(2, 2, false);
    REQUIRE(pats.size() == 1);
    CHECK(pats[0].cls == PatternClass::CommonPoint);
    CHECK(pats[0].pattern.crossings.size() == 1);
}

TEST_CASE("reduce examples") {
    SUBCASE("shared edge gets split away") {
        PathPairPattern p;
        p.k1 = 4;
        p.k2 = 4;
        p.crossings = {{1, 1}, {2, 2}};
        p.tags = {0, 2, 1, 1};  // middle edge shared
        PathPairPattern r = reduce(p);
        for (int t : r.tags) CHECK(t != 2);
        CHECK(r.crossings.size() < p.crossings.size());
    }
    SUBCASE("same-side vertex is eliminated") {
        PathPairPattern p;
        p.k1 = 5;
        p.k2 = 4;
        p.crossings = {{2, 2}};
        p.tags = {0, 0, 0, 1};  // both edges at the crossing inside
        PathPairPattern r = reduce(p);
        CHECK(r.crossings.empty());
    }
    SUBCASE("irreducible single-crossing pattern is unchanged") {
        PathPairPattern p;
        p.k1 = 3;
        p.k2 = 3;
        p.crossings = {{1, 1}};
        p.tags = {0, 1, 1};
        PathPairPattern r = reduce(p);
        CHECK(r.crossings == p.crossings);
        CHECK(r.k1 == p.k1);
        CHECK(r.k2 == p.k2);
    }
}

TEST_CASE("7/6: every irreducible pattern has one shared vertex") {
    for (const auto& cp : enumerate_irreducible(7, 6, false))
        CHECK(cp.pattern.crossings.size() == 1);
}

TEST_CASE("7/7 with shared endpoints: eight multi-intersection patterns") {
    auto pats = enumerate_irreducible(7, 7, true);
    int multi = 0, not11 = 0, nonfacial = 0, counterexample = 0;
    for (const auto& cp : pats) {
        if (cp.pattern.crossings.size() <= 1) continue;
        ++multi;
        if (cp.cls == PatternClass::NotKind11) ++not11;
        if (cp.cls == PatternClass::Nonfacial4Cycle) ++nonfacial;
        if (cp.cls == PatternClass::Counterexample) ++counterexample;
    }
    CHECK(multi == 8);
    CHECK(not11 == 4);
    CHECK(nonfacial == 4);
    CHECK(counterexample == 0);
}

TEST_CASE("reductions never lengthen the paths") {
    PathPairPattern p;
    p.k1 = 6;
    p.k2 = 5;
    p.crossings = {{2, 1}, {3, 3}};
    p.tags = {0, 1, 1, 0, 1};
    PathPairPattern r = reduce(p);
    CHECK(r.k1 <= p.k1);
    CHECK(r.k2 <= p.k2);
}
