#include "burn/heuristics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace burn {

BackbonePath backbone_path(const Graph& comp, const CentralityMap& cent) {
    if (comp.empty()) throw std::invalid_argument("backbone_path: empty graph");
    const int n = comp.vertex_count();

    const VertexId root = [&] {
        VertexSet all(n);
        for (VertexId v = 0; v < n; ++v) all[v] = v;
        return argmin_score(cent, all);
    }();

    enum { White, Grey, Black };
    std::vector<char> colour(n, White);
    std::vector<int> depth(n, -1);
    std::vector<double> cs(n, 0.0);
    std::vector<VertexId> parent(n, -1);
    colour[root] = Grey;
    depth[root] = 0;
    cs[root] = cent[root];
    std::queue<VertexId> q;
    q.push(root);
    int reached = 0;
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        ++reached;
        for (VertexId v : comp.neighbors(u)) {
            if (colour[v] == White) {
                colour[v] = Grey;
                depth[v] = depth[u] + 1;
                cs[v] = cs[u] + cent[v];
                parent[v] = u;
                q.push(v);
            } else if (colour[v] == Grey && depth[v] == depth[u] + 1 &&
                       score_less(cs[v], cs[u] + cent[v])) {
                // same-depth reconvergence: switch to the heavier chain
                cs[v] = cs[u] + cent[v];
                parent[v] = u;
            }
        }
        colour[u] = Black;
    }
    if (reached != n) throw std::invalid_argument("backbone_path: graph not connected");

    VertexId terminal = root;
    for (VertexId v = 0; v < n; ++v) {
        if (depth[v] > depth[terminal] ||
            (depth[v] == depth[terminal] && score_less(cs[terminal], cs[v])))
            terminal = v;
    }

    BackbonePath path;
    path.total_centrality = cs[terminal];
    for (VertexId v = terminal; v != -1; v = parent[v]) path.vertices.push_back(v);
    return path;
}

namespace {

struct CandidatePath {
    std::vector<VertexId> vertices;  // ids of the outer graph
    double total_centrality = 0.0;
};

// argmax by (ball size, then centrality within margin, then lowest id);
// equivalent to scanning in decreasing centrality order with strict
// ball-size improvement, but robust to near-tie score ordering.
VertexId best_ball_vertex(const Graph& g, int radius,
                          const std::vector<CandidatePath>& paths,
                          const CentralityMap& cent) {
    VertexId best = -1;
    size_t best_ball = 0;
    for (const CandidatePath& path : paths) {
        for (VertexId v : path.vertices) {
            const size_t ball = closed_ball(g, v, radius).size();
            if (best < 0 || ball > best_ball ||
                (ball == best_ball && score_less(cent[best], cent[v])) ||
                (ball == best_ball && scores_close(cent[best], cent[v]) && v < best)) {
                best = v;
                best_ball = ball;
            }
        }
    }
    return best;
}

}  // namespace

VertexId bbgh_best_central_node(const Graph& g, int radius, bool scan_all_paths) {
    if (g.empty()) throw std::invalid_argument("bbgh_best_central_node: empty graph");
    const CentralityMap cent = eigenvector_centrality(g);

    std::vector<CandidatePath> paths;
    for (const VertexSet& comp : components(g)) {
        const Graph sub = induced_subgraph(g, comp);
        CentralityMap sub_cent(sub.vertex_count());
        for (size_t i = 0; i < comp.size(); ++i) sub_cent[i] = cent[comp[i]];
        const BackbonePath bp = backbone_path(sub, sub_cent);
        CandidatePath path;
        path.total_centrality = bp.total_centrality;
        path.vertices.reserve(bp.vertices.size());
        for (VertexId v : bp.vertices) path.vertices.push_back(comp[v]);
        paths.push_back(std::move(path));
    }

    if (!scan_all_paths) {
        // keep one path: longer wins, equal length decided by centrality sum
        size_t kept = 0;
        for (size_t i = 1; i < paths.size(); ++i) {
            const size_t len = paths[i].vertices.size();
            const size_t kept_len = paths[kept].vertices.size();
            if (len > kept_len ||
                (len == kept_len &&
                 score_less(paths[kept].total_centrality, paths[i].total_centrality)))
                kept = i;
        }
        paths = {paths[kept]};
    }
    return best_ball_vertex(g, radius, paths, cent);
}

VertexId icch_best_central_node(const Graph& g, int radius) {
    if (g.empty()) throw std::invalid_argument("icch_best_central_node: empty graph");
    const CentralityMap cent = eigenvector_centrality(g);
    VertexSet all(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
    const VertexId pivot = argmax_score(cent, all);

    const VertexSet pivot_ball = closed_ball(g, pivot, radius);
    std::vector<char> removed(g.vertex_count(), 0);
    for (VertexId v : pivot_ball) removed[v] = 1;
    VertexSet survivors;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) survivors.push_back(v);
    if (survivors.empty()) return pivot;

    // One shortest path per residual component, from its min-centrality
    // vertex back to the pivot. Rows are source-aligned; components in
    // other parts of g than the pivot have no path and are skipped.
    const auto dist = bfs_distances(g, pivot);
    std::vector<std::vector<VertexId>> rows;
    size_t max_len = 0;
    for (const VertexSet& comp : components(induced_subgraph(g, survivors))) {
        VertexSet comp_g;
        comp_g.reserve(comp.size());
        for (VertexId v : comp) comp_g.push_back(survivors[v]);
        const VertexId src = argmin_score(cent, comp_g);
        if (dist[src] < 0) continue;
        std::vector<VertexId> row = shortest_path(g, pivot, src);
        std::reverse(row.begin(), row.end());
        max_len = std::max(max_len, row.size());
        rows.push_back(std::move(row));
    }

    VertexId best = pivot;
    size_t capacity = pivot_ball.size();
    for (size_t col = 0; col < max_len; ++col) {
        std::vector<VertexId> column;
        for (const auto& row : rows)
            if (col < row.size()) column.push_back(row[col]);
        std::sort(column.begin(), column.end(), [&](VertexId a, VertexId b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        if (column.size() > static_cast<size_t>(radius)) column.resize(radius);
        for (VertexId w : column) {
            if (removed[w]) continue;
            const size_t ball = closed_ball(g, w, radius).size();
            if (capacity <= ball) {  // later candidates win ties
                capacity = ball;
                best = w;
            }
        }
    }
    return best;
}

Selector bbgh_selector(bool scan_all_paths) {
    return [scan_all_paths](const Graph& g, int radius) {
        return bbgh_best_central_node(g, radius, scan_all_paths);
    };
}

Selector icch_selector() {
    return [](const Graph& g, int radius) { return icch_best_central_node(g, radius); };
}

}  // namespace burn
