#include "burn/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace burn {

namespace {

// Rejection-sampled bound so results do not depend on the standard
// library's distribution implementation.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine();
        } while (x >= limit);
        return x % n;
    }
};

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Graph erdos_renyi(int n, long long m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("erdos_renyi: negative parameter");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw std::invalid_argument("erdos_renyi: m exceeds n*(n-1)/2");
    Rng rng(seed);
    std::set<std::pair<VertexId, VertexId>> chosen;
    while (static_cast<long long>(chosen.size()) < m) {
        VertexId u = static_cast<VertexId>(rng.below(n));
        VertexId v = static_cast<VertexId>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        chosen.emplace(u, v);
    }
    std::vector<std::pair<VertexId, VertexId>> edges(chosen.begin(), chosen.end());
    return Graph(numeric_labels(n), edges);
}

Graph barabasi_albert(int n, int m, std::uint64_t seed) {
    if (m < 1 || n < m + 1)
        throw std::invalid_argument("barabasi_albert: need 1 <= m < n");
    Rng rng(seed);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<VertexId> repeated;  // vertices repeated once per incident edge
    std::vector<VertexId> targets;
    for (VertexId v = 0; v < m; ++v) targets.push_back(v);
    for (VertexId v = m; v < n; ++v) {
        for (VertexId t : targets) {
            edges.emplace_back(v, t);
            repeated.push_back(v);
            repeated.push_back(t);
        }
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            const VertexId t = repeated[rng.below(repeated.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
    }
    return Graph(numeric_labels(n), edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_tree: negative n");
    if (n <= 1) return Graph(numeric_labels(n), {});
    if (n == 2) return Graph(numeric_labels(2), {{0, 1}});
    Rng rng(seed);
    std::vector<VertexId> pruefer(n - 2);
    for (auto& p : pruefer) p = static_cast<VertexId>(rng.below(n));

    std::vector<int> degree(n, 1);
    for (VertexId p : pruefer) ++degree[p];
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (VertexId p : pruefer) {
        const VertexId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, p);
        if (--degree[p] == 1) leaves.insert(p);
    }
    const VertexId a = *leaves.begin();
    const VertexId b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(numeric_labels(n), edges);
}

}  // namespace burn
