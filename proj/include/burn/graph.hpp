#ifndef BURN_GRAPH_HPP
#define BURN_GRAPH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace burn {

using VertexId = int;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<VertexId>;

// Disjoint, non-empty, union = V, ordered by smallest contained id.
using ComponentList = std::vector<VertexSet>;

// Immutable undirected simple graph. Internal ids are contiguous
// 0..n-1, adjacency lists sorted ascending; every vertex keeps the
// external label it carried in the input file or parent graph.
class Graph {
public:
    Graph() = default;

    // Self-loops and duplicate edges are dropped. Labels must be unique.
    Graph(std::vector<std::string> labels,
          const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    long long edge_count() const { return static_cast<long long>(adj_.size()) / 2; }
    bool empty() const { return labels_.empty(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::string& label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find_label(const std::string& label) const;

    bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::vector<int> offsets_{0};
    std::vector<VertexId> adj_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> label_index_;
};

// Convenience for tests and generators: vertices labeled "1".."n" with
// 1-based edge pairs, matching how the fixture graphs are written.
Graph graph_from_labeled_edges(int n,
                               const std::vector<std::pair<int, int>>& edges);

ComponentList components(const Graph& g);

// {u : dist(u, v) <= radius}; BFS truncated at depth radius.
VertexSet closed_ball(const Graph& g, VertexId v, int radius);

// Induced subgraph on V minus s, re-indexed, labels kept.
Graph induced_delete(const Graph& g, const VertexSet& s);

// Induced subgraph on keep (need not be sorted); new id i corresponds to
// the i-th smallest kept old id, so a sorted keep set doubles as the
// new-to-old id map.
Graph induced_subgraph(const Graph& g, VertexSet keep);

// BFS shortest path from u to v inclusive, ascending-id expansion.
// Throws NoPathError when u and v are in different components.
std::vector<VertexId> shortest_path(const Graph& g, VertexId u, VertexId v);

struct NoPathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Distance from src to every vertex, -1 when unreachable.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

// Minimum eccentricity over the component containing v (whole graph when
// connected). Helpers for burning_upper_bound and spanning-tree rooting.
int eccentricity(const Graph& g, VertexId v);
VertexId min_eccentricity_vertex(const Graph& g);

}  // namespace burn

#endif
