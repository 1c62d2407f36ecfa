#include "burn/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace burn {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<VertexId, VertexId>>& edges)
    : labels_(std::move(labels)) {
    const int n = vertex_count();
    label_index_.reserve(labels_.size());
    for (VertexId v = 0; v < n; ++v) {
        if (!label_index_.emplace(labels_[v], v).second)
            throw std::invalid_argument("duplicate vertex label: " + labels_[v]);
    }

    std::vector<std::vector<VertexId>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) continue;  // loaders strip self-loops
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    offsets_.assign(1, 0);
    offsets_.reserve(n + 1);
    for (VertexId v = 0; v < n; ++v) {
        auto& nv = adj[v];
        std::sort(nv.begin(), nv.end());
        nv.erase(std::unique(nv.begin(), nv.end()), nv.end());
        adj_.insert(adj_.end(), nv.begin(), nv.end());
        offsets_.push_back(static_cast<int>(adj_.size()));
    }
}

std::optional<VertexId> Graph::find_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph graph_from_labeled_edges(int n,
                               const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> internal;
    internal.reserve(edges.size());
    for (auto [u, v] : edges) internal.emplace_back(u - 1, v - 1);
    return Graph(std::move(labels), internal);
}

ComponentList components(const Graph& g) {
    ComponentList out;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (VertexId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

VertexSet closed_ball(const Graph& g, VertexId v, int radius) {
    if (!g.has_vertex(v)) throw std::invalid_argument("closed_ball: vertex out of range");
    if (radius < 0) throw std::invalid_argument("closed_ball: negative radius");
    VertexSet ball{v};
    std::vector<int> dist(g.vertex_count(), -1);
    dist[v] = 0;
    std::queue<VertexId> q;
    q.push(v);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                ball.push_back(w);
                q.push(w);
            }
        }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<VertexId> old_to_new(g.vertex_count(), -1);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        if (!g.has_vertex(keep[i]))
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        old_to_new[keep[i]] = static_cast<VertexId>(i);
        labels.push_back(g.label(keep[i]));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : keep)
        for (VertexId v : g.neighbors(u))
            if (u < v && old_to_new[v] >= 0)
                edges.emplace_back(old_to_new[u], old_to_new[v]);
    return Graph(std::move(labels), edges);
}

Graph induced_delete(const Graph& g, const VertexSet& s) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (VertexId v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_delete: vertex out of range");
        drop[v] = 1;
    }
    VertexSet keep;
    keep.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, std::move(keep));
}

std::vector<int> bfs_distances(const Graph& g, VertexId src) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[src] = 0;
    std::queue<VertexId> q;
    q.push(src);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("shortest_path: vertex out of range");
    std::vector<VertexId> parent(g.vertex_count(), -2);
    parent[u] = -1;
    std::queue<VertexId> q;
    q.push(u);
    while (!q.empty() && parent[v] == -2) {
        VertexId x = q.front();
        q.pop();
        for (VertexId w : g.neighbors(x)) {
            if (parent[w] == -2) {
                parent[w] = x;
                q.push(w);
            }
        }
    }
    if (parent[v] == -2)
        throw NoPathError("no path between " + g.label(u) + " and " + g.label(v));
    std::vector<VertexId> path;
    for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

int eccentricity(const Graph& g, VertexId v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("eccentricity: vertex out of range");
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    return ecc;
}

VertexId min_eccentricity_vertex(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("min_eccentricity_vertex: empty graph");
    VertexId best = 0;
    int best_ecc = eccentricity(g, 0);
    for (VertexId v = 1; v < g.vertex_count(); ++v) {
        int e = eccentricity(g, v);
        if (e < best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

}  // namespace burn
