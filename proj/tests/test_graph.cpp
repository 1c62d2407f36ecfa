#include "burn/graph.hpp"

#include "util.hpp"

#include <doctest.h>

#include <set>

using namespace burn;
using testutil::by_label;
using testutil::fixture;
using testutil::labels_of;

TEST_CASE("fixture graphs have the expected vertex and edge counts") {
    struct Row {
        const char* name;
        int n;
        long long m;
    };
    for (const Row& row : {Row{"fig3", 12, 16}, Row{"fig4", 30, 32}, Row{"fig5", 14, 14},
                           Row{"fig6", 39, 38}, Row{"t1", 47, 49}}) {
        const Graph g = fixture(row.name);
        CHECK(g.vertex_count() == row.n);
        CHECK(g.edge_count() == row.m);
    }
}

TEST_CASE("adjacency lists are sorted, symmetric and loop-free") {
    testutil::GraphGen gen(7);
    std::vector<Graph> graphs{fixture("t1"), fixture("fig4")};
    for (int i = 0; i < 10; ++i) graphs.push_back(gen.sparse(40));
    for (const Graph& g : graphs) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (VertexId u : nb) {
                CHECK(u != v);
                auto back = g.neighbors(u);
                CHECK(std::binary_search(back.begin(), back.end(), v));
            }
        }
    }
}

TEST_CASE("components partition the disconnected fixtures") {
    const Graph fig5 = fixture("fig5");
    auto comps = components(fig5);
    REQUIRE(comps.size() == 2);
    std::multiset<size_t> sizes{comps[0].size(), comps[1].size()};
    CHECK(sizes == std::multiset<size_t>{5, 9});

    const Graph fig4 = fixture("fig4");
    comps = components(fig4);
    REQUIRE(comps.size() == 2);
    sizes = {comps[0].size(), comps[1].size()};
    CHECK(sizes == std::multiset<size_t>{9, 21});

    const Graph single = graph_from_labeled_edges(1, {});
    REQUIRE(components(single).size() == 1);
    CHECK(components(single)[0] == VertexSet{0});

    CHECK(components(Graph{}).empty());
}

TEST_CASE("closed_ball basics") {
    const Graph p5 = testutil::path_graph(5);
    CHECK(closed_ball(p5, by_label(p5, "3"), 0) == VertexSet{by_label(p5, "3")});
    CHECK(labels_of(p5, closed_ball(p5, by_label(p5, "3"), 1)) ==
          std::vector<std::string>{"2", "3", "4"});

    const Graph fig3 = fixture("fig3");
    CHECK(labels_of(fig3, closed_ball(fig3, by_label(fig3, "4"), 1)) ==
          std::vector<std::string>{"10", "11", "12", "3", "4", "5", "9"});

    CHECK_THROWS_AS(closed_ball(p5, 99, 1), std::invalid_argument);
}

TEST_CASE("closed_ball equals the BFS depth filter and grows with radius") {
    testutil::GraphGen gen(11);
    for (int i = 0; i < 20; ++i) {
        const Graph g = gen.sparse(60);
        const VertexId v = static_cast<VertexId>(i % g.vertex_count());
        const auto dist = bfs_distances(g, v);
        size_t prev = 0;
        for (int r = 0; r <= g.vertex_count(); ++r) {
            const VertexSet ball = closed_ball(g, v, r);
            VertexSet expect;
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                if (dist[u] >= 0 && dist[u] <= r) expect.push_back(u);
            CHECK(ball == expect);
            CHECK(ball.size() >= prev);
            prev = ball.size();
        }
        // at r >= component diameter the ball is the whole component
        size_t comp_size = 0;
        for (int d : dist) comp_size += d >= 0;
        CHECK(closed_ball(g, v, g.vertex_count()).size() == comp_size);
    }
}

TEST_CASE("induced_delete") {
    const Graph fig3 = fixture("fig3");
    const Graph same = induced_delete(fig3, {});
    CHECK(same.vertex_count() == fig3.vertex_count());
    CHECK(same.edge_count() == fig3.edge_count());
    CHECK(same.labels() == fig3.labels());

    VertexSet all(fig3.vertex_count());
    for (VertexId v = 0; v < fig3.vertex_count(); ++v) all[v] = v;
    CHECK(induced_delete(fig3, all).empty());

    const Graph rest = induced_delete(fig3, closed_ball(fig3, by_label(fig3, "4"), 1));
    auto rest_labels = rest.labels();
    std::sort(rest_labels.begin(), rest_labels.end());
    CHECK(rest_labels == std::vector<std::string>{"1", "2", "6", "7", "8"});
}

TEST_CASE("components of a deletion cover exactly the survivors") {
    testutil::GraphGen gen(23);
    for (int i = 0; i < 20; ++i) {
        const Graph g = gen.sparse(50);
        VertexSet s;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if ((v * 7 + i) % 3 == 0) s.push_back(v);
        const Graph h = induced_delete(g, s);
        CHECK(h.vertex_count() == g.vertex_count() - static_cast<int>(s.size()));
        size_t covered = 0;
        for (const VertexSet& comp : components(h)) covered += comp.size();
        CHECK(covered == static_cast<size_t>(h.vertex_count()));
        // survivors keep their labels
        std::set<std::string> got(h.labels().begin(), h.labels().end());
        std::set<std::string> expect;
        std::vector<char> dropped(g.vertex_count(), 0);
        for (VertexId v : s) dropped[v] = 1;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!dropped[v]) expect.insert(g.label(v));
        CHECK(got == expect);
    }
}

TEST_CASE("shortest_path") {
    const Graph p3 = testutil::path_graph(3);
    CHECK(shortest_path(p3, 0, 0) == std::vector<VertexId>{0});
    const auto path = shortest_path(p3, by_label(p3, "1"), by_label(p3, "3"));
    REQUIRE(path.size() == 3);
    CHECK(p3.label(path[0]) == "1");
    CHECK(p3.label(path[1]) == "2");
    CHECK(p3.label(path[2]) == "3");

    const Graph fig3 = fixture("fig3");
    const auto fp = shortest_path(fig3, by_label(fig3, "4"), by_label(fig3, "7"));
    CHECK(fp.size() == 4);  // distance 3

    const Graph two = graph_from_labeled_edges(2, {});
    CHECK_THROWS_AS(shortest_path(two, 0, 1), NoPathError);
}

TEST_CASE("shortest_path length equals BFS distance on random graphs") {
    testutil::GraphGen gen(31);
    for (int i = 0; i < 15; ++i) {
        const Graph g = gen.sparse(200);
        const VertexId u = static_cast<VertexId>((i * 13) % g.vertex_count());
        const auto dist = bfs_distances(g, u);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] < 0) {
                CHECK_THROWS_AS(shortest_path(g, u, v), NoPathError);
            } else {
                const auto path = shortest_path(g, u, v);
                CHECK(static_cast<int>(path.size()) == dist[v] + 1);
                for (size_t k = 0; k + 1 < path.size(); ++k) {
                    auto nb = g.neighbors(path[k]);
                    CHECK(std::binary_search(nb.begin(), nb.end(), path[k + 1]));
                }
            }
        }
    }
}
