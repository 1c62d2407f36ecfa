#include "burn/io.hpp"

#include "burn/generators.hpp"
#include "util.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace burn;

TEST_CASE("edge list parsing") {
    std::istringstream in("1 2\n2 3\n");
    const Graph g = read_edge_list(in, "mem");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    SUBCASE("duplicates and self-loops are dropped") {
        std::istringstream dirty("1 2\n1 2\n3 3\n");
        const Graph h = read_edge_list(dirty, "mem");
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 1);
        CHECK(h.degree(*h.find_label("3")) == 0);
    }

    SUBCASE("comments, blanks and weight columns") {
        std::istringstream commented("# a comment\n% another\n\na b 0.75\nb c 2\n");
        const Graph h = read_edge_list(commented, "mem");
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 2);
        CHECK(h.find_label("a").has_value());
    }

    SUBCASE("parse errors carry the line number") {
        std::istringstream bad("1 2\nlonely\n");
        CHECK_THROWS_WITH_AS(read_edge_list(bad, "mem"),
                             doctest::Contains("mem:2"), ParseError);
    }
}

TEST_CASE("dimacs parsing") {
    std::istringstream in("c tiny instance\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    const Graph g = read_dimacs(in, "mem");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.label(0) == "1");

    SUBCASE("edge before header") {
        std::istringstream bad("e 1 2\n");
        CHECK_THROWS_AS(read_dimacs(bad, "mem"), ParseError);
    }
    SUBCASE("out of range endpoint") {
        std::istringstream bad("p edge 3 1\ne 1 9\n");
        CHECK_THROWS_WITH_AS(read_dimacs(bad, "mem"), doctest::Contains("mem:2"),
                             ParseError);
    }
    SUBCASE("missing header") {
        std::istringstream bad("c nothing else\n");
        CHECK_THROWS_AS(read_dimacs(bad, "mem"), ParseError);
    }
    SUBCASE("unknown format name") {
        CHECK_THROWS_AS(parse_format("graphml"), ParseError);
    }
}

TEST_CASE("write/read round trip preserves the graph") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = erdos_renyi(30, 45, seed);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        const Graph h = read_edge_list(in, "mem");
        // isolated vertices are not representable in an edge list
        int isolated = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) isolated += g.degree(v) == 0;
        CHECK(h.vertex_count() == g.vertex_count() - isolated);
        CHECK(h.edge_count() == g.edge_count());
        std::set<std::pair<std::string, std::string>> ge, he;
        for (auto [u, v] : g.edges())
            ge.emplace(std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v)));
        for (auto [u, v] : h.edges())
            he.emplace(std::min(h.label(u), h.label(v)), std::max(h.label(u), h.label(v)));
        CHECK(ge == he);
    }
}

TEST_CASE("fixture files load by path") {
    const Graph fig3 =
        load_graph(std::string(BURN_DATA_DIR) + "/fixtures/fig3.edges",
                   parse_format("edgelist"));
    CHECK(fig3.vertex_count() == 12);
    CHECK_THROWS_AS(load_graph("/nonexistent/file.edges", GraphFormat::EdgeList),
                    ParseError);
}
