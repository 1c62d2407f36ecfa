#include "burn/approx.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace burn {

namespace {

// Tightest budget B for which centers played in order are coverage-valid:
// B = max over v of min over i of dist(v, centers[i]) + i + 1.
std::pair<int, BurningSequence> sequence_from_centers(
    const Graph& g, const std::vector<VertexId>& centers) {
    std::vector<int> need(g.vertex_count(), -1);
    for (size_t i = 0; i < centers.size(); ++i) {
        const auto dist = bfs_distances(g, centers[i]);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] < 0) continue;
            const int budget = dist[v] + static_cast<int>(i) + 1;
            if (need[v] < 0 || budget < need[v]) need[v] = budget;
        }
    }
    int required = 1;
    for (int b : need) {
        if (b < 0) throw std::logic_error("centers do not cover the graph");
        required = std::max(required, b);
    }
    BurningSequence seq;
    seq.budget = required;
    for (VertexId c : centers) seq.sources.push_back(g.label(c));
    return {required, seq};
}

// Lowest-id greedy with exclusion radius 2(k-1); nullopt when more than
// k centers are needed. Succeeds for every k >= bn(G): two centers in
// one optimal ball of radius <= k-1 would be <= 2(k-1) apart.
std::optional<std::vector<VertexId>> aprx3_centers(const Graph& g, int k) {
    std::vector<char> excluded(g.vertex_count(), 0);
    std::vector<VertexId> centers;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (excluded[v]) continue;
        if (static_cast<int>(centers.size()) == k) return std::nullopt;
        centers.push_back(v);
        for (VertexId u : closed_ball(g, v, 2 * (k - 1))) excluded[u] = 1;
    }
    return centers;
}

}  // namespace

std::pair<int, BurningSequence> aprx3_burning(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("aprx3_burning: empty graph");
    int lo = 1, hi = burning_upper_bound(g);
    std::optional<std::vector<VertexId>> best;
    while (lo <= hi) {
        const int mid = lo + (hi - lo) / 2;
        if (auto centers = aprx3_centers(g, mid)) {
            best = std::move(centers);
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    if (!best) {
        for (int k = burning_upper_bound(g) + 1; !best; ++k) best = aprx3_centers(g, k);
    }
    return sequence_from_centers(g, *best);
}

Graph spanning_tree(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("spanning_tree: empty graph");
    if (components(g).size() != 1)
        throw std::invalid_argument("spanning_tree: graph not connected");
    const VertexId root = min_eccentricity_vertex(g);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<char> seen(g.vertex_count(), 0);
    seen[root] = 1;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (VertexId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                edges.emplace_back(u, v);
                q.push(v);
            }
        }
    }
    return Graph(g.labels(), edges);
}

Graph spanning_forest(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const VertexSet& comp : components(g)) {
        const Graph sub = spanning_tree(induced_subgraph(g, comp));
        for (auto [u, v] : sub.edges()) edges.emplace_back(comp[u], comp[v]);
    }
    return Graph(g.labels(), edges);
}

namespace {

struct RootedForest {
    std::vector<int> depth;
    std::vector<VertexId> parent;
};

RootedForest root_forest(const Graph& t) {
    RootedForest f;
    f.depth.assign(t.vertex_count(), -1);
    f.parent.assign(t.vertex_count(), -1);
    for (const VertexSet& comp : components(t)) {
        const Graph sub = induced_subgraph(t, comp);
        const VertexId root = comp[min_eccentricity_vertex(sub)];
        f.depth[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            for (VertexId v : t.neighbors(u)) {
                if (f.depth[v] < 0) {
                    f.depth[v] = f.depth[u] + 1;
                    f.parent[v] = u;
                    q.push(v);
                }
            }
        }
    }
    return f;
}

std::optional<std::vector<VertexId>> aprx2_centers(const Graph& t,
                                                   const RootedForest& f, int k) {
    std::vector<char> burned(t.vertex_count(), 0);
    std::vector<VertexId> centers;
    for (;;) {
        VertexId deepest = -1;
        for (VertexId v = 0; v < t.vertex_count(); ++v)
            if (!burned[v] && (deepest < 0 || f.depth[v] > f.depth[deepest]))
                deepest = v;
        if (deepest < 0) break;
        if (static_cast<int>(centers.size()) == k) return std::nullopt;
        VertexId center = deepest;
        for (int up = std::min(k - 1, f.depth[deepest]); up > 0; --up)
            center = f.parent[center];
        centers.push_back(center);
        for (VertexId u : closed_ball(t, center, k - 1)) burned[u] = 1;
    }
    return centers;
}

}  // namespace

std::pair<int, BurningSequence> aprx2_tree_burning(const Graph& t) {
    if (t.empty()) throw std::invalid_argument("aprx2_tree_burning: empty graph");
    if (t.edge_count() != t.vertex_count() - static_cast<long long>(components(t).size()))
        throw std::invalid_argument("aprx2_tree_burning: input has a cycle");
    const RootedForest forest = root_forest(t);
    int lo = 1, hi = burning_upper_bound(t);
    std::optional<std::vector<VertexId>> best;
    while (lo <= hi) {
        const int mid = lo + (hi - lo) / 2;
        if (auto centers = aprx2_centers(t, forest, mid)) {
            best = std::move(centers);
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    if (!best) {
        for (int k = burning_upper_bound(t) + 1; !best; ++k)
            best = aprx2_centers(t, forest, k);
    }
    return sequence_from_centers(t, *best);
}

}  // namespace burn
