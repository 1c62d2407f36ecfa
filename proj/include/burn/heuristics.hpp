#ifndef BURN_HEURISTICS_HPP
#define BURN_HEURISTICS_HPP

#include "burn/burning.hpp"
#include "burn/centrality.hpp"
#include "burn/graph.hpp"

namespace burn {

// Shortest path from a deepest BFS vertex back to the component's
// minimum-centrality root, maximizing the centrality sum among
// shortest-path ties. vertices runs deepest-first, root last.
struct BackbonePath {
    std::vector<VertexId> vertices;
    double total_centrality = 0.0;
};

// comp must be connected and non-empty; cent indexed by comp's ids.
BackbonePath backbone_path(const Graph& comp, const CentralityMap& cent);

// Backbone Based Greedy Heuristic: keep the single best backbone path
// across components (longest, then heaviest centrality sum), return its
// vertex with the largest radius-ball in g. scan_all_paths switches to
// the prose variant that scans every component's backbone path.
VertexId bbgh_best_central_node(const Graph& g, int radius,
                                bool scan_all_paths = false);

// Improved Cutting Corners Heuristic: start from the max-centrality
// vertex v, lay shortest paths from each residual component's
// min-centrality vertex back to v, and pick the best ball among the
// per-column top-radius-by-degree path vertices that survive g minus
// v's ball. Later candidates win ties.
VertexId icch_best_central_node(const Graph& g, int radius);

Selector bbgh_selector(bool scan_all_paths = false);
Selector icch_selector();

}  // namespace burn

#endif
