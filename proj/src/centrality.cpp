#include "burn/centrality.hpp"

#include <cmath>
#include <stdexcept>

namespace burn {

namespace {
constexpr double kConvergence = 1e-10;
constexpr int kMaxIterations = 1000;
constexpr double kTieMargin = 1e-9;
}  // namespace

bool scores_close(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= kTieMargin * scale;
}

bool score_less(double a, double b) { return a < b && !scores_close(a, b); }

CentralityMap eigenvector_centrality(const Graph& g) {
    CentralityMap scores(g.vertex_count(), 0.0);
    // Per component: power iteration on A + I. The +I damps the
    // oscillation of bipartite components without changing the Perron
    // vector; per-component normalization keeps non-dominant components
    // from being driven to zero.
    std::vector<int> local(g.vertex_count(), -1);
    for (const VertexSet& comp : components(g)) {
        const size_t m = comp.size();
        std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
        std::vector<double> y(m, 0.0);
        for (size_t i = 0; i < m; ++i) local[comp[i]] = static_cast<int>(i);
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            double norm_sq = 0.0;
            for (size_t i = 0; i < m; ++i) {
                double sum = x[i];
                for (VertexId u : g.neighbors(comp[i])) sum += x[local[u]];
                y[i] = sum;
                norm_sq += sum * sum;
            }
            const double inv_norm = 1.0 / std::sqrt(norm_sq);
            double delta_sq = 0.0;
            for (size_t i = 0; i < m; ++i) {
                y[i] *= inv_norm;
                const double d = y[i] - x[i];
                delta_sq += d * d;
            }
            x.swap(y);
            if (std::sqrt(delta_sq) < kConvergence) break;
        }
        for (size_t i = 0; i < m; ++i) scores[comp[i]] = x[i];
    }
    return scores;
}

VertexId argmin_score(const CentralityMap& scores, const VertexSet& over) {
    if (over.empty()) throw std::invalid_argument("argmin_score: empty vertex set");
    VertexId best = over.front();
    for (VertexId v : over)
        if (score_less(scores[v], scores[best])) best = v;
    return best;
}

VertexId argmax_score(const CentralityMap& scores, const VertexSet& over) {
    if (over.empty()) throw std::invalid_argument("argmax_score: empty vertex set");
    VertexId best = over.front();
    for (VertexId v : over)
        if (score_less(scores[best], scores[v])) best = v;
    return best;
}

VertexId min_central_node(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("min_central_node: empty graph");
    CentralityMap scores = eigenvector_centrality(g);
    VertexSet all(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return argmin_score(scores, all);
}

VertexId max_central_node(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("max_central_node: empty graph");
    CentralityMap scores = eigenvector_centrality(g);
    VertexSet all(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return argmax_score(scores, all);
}

}  // namespace burn
