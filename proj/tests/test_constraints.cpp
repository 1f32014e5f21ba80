#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "trifree/systems.hpp"

using namespace trifree;

TEST_CASE("tiny parity system") {
    ConstraintSystem s;
    s.add_var("x", 0, 2);
    LinExpr e;
    e.add(0);
    s.parity(e, false);
    auto rows = solve(s);
    CHECK(rows == std::vector<SolutionRow>{{0}, {2}});
}

TEST_CASE("reverse-order enumeration agrees (exhaustiveness)") {
    for (const char* id : {"56-kind00", "5-alone", "b1", "bb20-coarse"}) {
        ConstraintSystem s = named_system(id);
        CHECK(solve(s) == solve(s, 1, true));
    }
}

TEST_CASE("parallel solve matches serial") {
    ConstraintSystem s = named_system("56-kind11");
    CHECK(solve(s) == solve(s, 4));
}

TEST_CASE("every solution satisfies its own system") {
    for (const char* id : {"56-kind00", "56-kind22", "5-alone", "b1"}) {
        ConstraintSystem s = named_system(id);
        for (const SolutionRow& r : solve(s)) CHECK(satisfies(s, r));
    }
}

TEST_CASE("printed first rows") {
    {
        auto rows = solve(named_system("56-kind00"));
        REQUIRE(rows.size() == 8);
        std::set<SolutionRow> set(rows.begin(), rows.end());
        CHECK(set.count({0, 1, 5, 0, 1, 2, 2, 5}));
        CHECK(set.count({3, 1, 3, 0, 0, 2, 3, 2}));
    }
    {
        auto rows = solve(named_system("56-kind22"));
        std::set<SolutionRow> set(rows.begin(), rows.end());
        CHECK(set.count({4, 0, 0, 2, 2, 1, 2, 2}));
        CHECK(set.count({4, 0, 0, 3, 2, 0, 2, 3}));
    }
    {
        auto rows = solve(named_system("5-alone"));
        REQUIRE(rows.size() == 6);
        std::set<SolutionRow> set(rows.begin(), rows.end());
        CHECK(set.count({6, 1, 0, 2, 3}));
        CHECK(set.count({4, 0, 2, 3, 2}));
    }
    {
        auto rows = solve(named_system("56-kind11-general"));
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == SolutionRow{0, 0, 0, 3, 0, 0, 6, 0, 1, 3, 2, 5});
        CHECK(rows[1] == SolutionRow{0, 0, 0, 3, 0, 0, 6, 0, 2, 2, 3, 4});
    }
    {
        auto rows = solve(named_system("bb20-coarse"));
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == SolutionRow{3, 0, 0, 3, 3, 0, 7, 4});
    }
    {
        auto rows = solve(named_system("b1"));
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == SolutionRow{2, 0, 2, 0, 2, 0, 0, 3, 3, 3, 3});
    }
}

TEST_CASE("system file format round trip") {
    for (const std::string& id : system_ids()) {
        ConstraintSystem s = named_system(id);
        ConstraintSystem t = parse_system(format_system(s));
        CHECK(solve(s) == solve(t));
    }
}

TEST_CASE("file format accepts the documented syntax") {
    ConstraintSystem s = parse_system(
        "system demo\n"
        "var nsX 0 9\n"
        "var nsY 0 9\n"
        "var ntX 0 9\n"
        "var ntY 0 9\n"
        "var k 0 18\n"
        "ineq |nsX + nsY - ntX - ntY| > k\n"
        "geq k + nsX 5\n"
        "parity k + nsX odd\n"
        "eq nsX + nsY = 6\n"
        "cond k = 1 -> geq nsX + nsY 6\n"
        "order nsX + ntX >= nsY + ntY\n");
    CHECK(s.var_names.size() == 5);
    CHECK(s.constraints.size() == 6);
    CHECK(!solve(s).empty());
}

TEST_CASE("golden tables reproduce") {
    TableReport rep = reproduce_tables(TRIFREE_DATA_DIR);
    for (const auto& e : rep.entries) {
        INFO(e.id, ": ", e.detail);
        CHECK(e.ok);
    }
}
