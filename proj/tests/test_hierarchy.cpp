#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "slocc/hierarchy.hpp"

using namespace slocc;

namespace {

// hand-built table: psi6 orbit saturates psi7; nothing else saturates
OverlapTable tiny_table() {
    OverlapTable t;
    t.ids = {StateId::psi(6), StateId::psi(7)};
    t.cells.resize(4);
    auto mk = [](double lambda, bool saturated) {
        OverlapResult r;
        r.lambda = lambda;
        r.saturated = saturated;
        return r;
    };
    t.cells[0] = mk(1.0, true);    // diagonal
    t.cells[1] = mk(0.999999999, true);
    t.cells[2] = mk(0.75, false);
    t.cells[3] = mk(1.0, true);    // diagonal
    return t;
}

std::string temp_path(const char* name) {
    return std::string("/tmp/slocc_hier_") + name;
}

} // namespace

TEST_CASE("edges come exactly from saturated off-diagonal entries") {
    HierarchyGraph g = hierarchy_from_table(tiny_table());
    CHECK(g.nodes == std::vector<std::string>{"psi6", "psi7"});
    CHECK(g.edges == std::set<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("a table with no saturated entries yields no edges") {
    OverlapTable t = tiny_table();
    t.cells[1].saturated = false;
    CHECK(hierarchy_from_table(t).edges.empty());
}

TEST_CASE("round trip through CSV and JSON files") {
    OverlapTable t = tiny_table();
    {
        std::ofstream out(temp_path("t.csv"));
        out << table_to_csv(t);
    }
    {
        std::ofstream out(temp_path("t.json"));
        out << table_to_json(t);
    }
    HierarchyGraph fromCsv = hierarchy_from_file(temp_path("t.csv"));
    HierarchyGraph fromJson = hierarchy_from_file(temp_path("t.json"));
    CHECK(fromCsv.edges == fromJson.edges);
    CHECK(fromCsv.edges == std::set<std::pair<int, int>>{{0, 1}});
    std::remove(temp_path("t.csv").c_str());
    std::remove(temp_path("t.json").c_str());

    CHECK_THROWS_AS(hierarchy_from_file("/tmp/slocc_does_not_exist.csv"), ValidationError);
    {
        std::ofstream out(temp_path("bad.csv"));
        out << "orbit\\target,psi6,psi7\npsi6,self\n";
    }
    CHECK_THROWS_AS(hierarchy_from_file(temp_path("bad.csv")), ValidationError);
    std::remove(temp_path("bad.csv").c_str());
}

TEST_CASE("transitive reduction prunes implied edges, reachability is kept") {
    HierarchyGraph g;
    g.nodes = {"a", "b", "c"};
    g.edges = {{0, 1}, {1, 2}, {0, 2}};
    CHECK(reaches_all(g, 0));
    HierarchyGraph r = transitive_reduction(g);
    CHECK(r.edges == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(reaches_all(r, 0));
    CHECK_FALSE(reaches_all(r, 1));
}

TEST_CASE("DOT output labels nodes and marks the GHZ/W classes") {
    HierarchyGraph g = hierarchy_from_table(tiny_table());
    const std::string dot = hierarchy_to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"psi6\"") != std::string::npos);
    CHECK(dot.find("GHZ-like") != std::string::npos);
    CHECK(dot.find("W-like") != std::string::npos);
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
}
