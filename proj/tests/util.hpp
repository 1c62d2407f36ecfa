#ifndef BURN_TESTS_UTIL_HPP
#define BURN_TESTS_UTIL_HPP

#include "burn/graph.hpp"
#include "burn/io.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testutil {

inline burn::Graph fixture(const std::string& name) {
    return burn::load_graph(std::string(BURN_DATA_DIR) + "/fixtures/" + name + ".edges",
                            burn::GraphFormat::EdgeList);
}

inline burn::VertexId by_label(const burn::Graph& g, const std::string& label) {
    auto v = g.find_label(label);
    if (!v) throw std::runtime_error("label not in graph: " + label);
    return *v;
}

inline std::vector<std::string> labels_of(const burn::Graph& g,
                                          const burn::VertexSet& s) {
    std::vector<std::string> out;
    for (burn::VertexId v : s) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

// vertices labeled "1".."n"
inline burn::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return burn::graph_from_labeled_edges(n, edges);
}

inline burn::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return burn::graph_from_labeled_edges(n, edges);
}

// center is vertex "1"
inline burn::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
    return burn::graph_from_labeled_edges(leaves + 1, edges);
}

inline burn::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return burn::graph_from_labeled_edges(n, edges);
}

// Exhaustive coverage check over every source tuple (repeats allowed);
// fully independent of the solver code paths it cross-checks.
inline int brute_force_burning_number(const burn::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<std::vector<int>> dist;
    for (burn::VertexId v = 0; v < n; ++v) dist.push_back(burn::bfs_distances(g, v));

    for (int b = 1; b <= n; ++b) {
        std::vector<int> tuple(b, 0);
        for (;;) {
            bool all_covered = true;
            for (burn::VertexId v = 0; v < n && all_covered; ++v) {
                bool covered = false;
                for (int i = 0; i < b && !covered; ++i) {
                    const int d = dist[tuple[i]][v];
                    covered = d >= 0 && d <= b - i - 1;
                }
                all_covered = covered;
            }
            if (all_covered) return b;
            int pos = b - 1;
            while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    return n;
}

// Deterministic random test graphs.
struct GraphGen {
    std::mt19937 rng;
    explicit GraphGen(unsigned seed) : rng(seed) {}

    burn::Graph sparse(int max_n, double edge_factor = 1.5) {
        const int n = 1 + static_cast<int>(rng() % max_n);
        const long long cap = static_cast<long long>(n) * (n - 1) / 2;
        const long long m =
            std::min<long long>(cap, static_cast<long long>(edge_factor * n * (rng() % 100) / 100.0));
        std::vector<std::pair<int, int>> edges;
        for (long long i = 0; i < m; ++i) {
            int u = static_cast<int>(rng() % n) + 1;
            int v = static_cast<int>(rng() % n) + 1;
            if (u != v) edges.emplace_back(u, v);
        }
        return burn::graph_from_labeled_edges(n, edges);
    }
};

}  // namespace testutil

#endif
