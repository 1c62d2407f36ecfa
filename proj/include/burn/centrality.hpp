#ifndef BURN_CENTRALITY_HPP
#define BURN_CENTRALITY_HPP

#include "burn/graph.hpp"

#include <vector>

namespace burn {

// Per-vertex eigenvector-centrality score, unit L2 norm within each
// connected component; an isolated vertex scores exactly 1.
using CentralityMap = std::vector<double>;

CentralityMap eigenvector_centrality(const Graph& g);

// Scores within 1e-9 relative of each other are treated as tied; ties
// resolve to the lowest internal id. Power iteration leaves float dust
// between symmetry-equivalent vertices, so exact comparison would break
// the intended lowest-id rule.
bool scores_close(double a, double b);
bool score_less(double a, double b);

VertexId min_central_node(const Graph& g);
VertexId max_central_node(const Graph& g);

// Same selections over a precomputed map restricted to `over`.
VertexId argmin_score(const CentralityMap& scores, const VertexSet& over);
VertexId argmax_score(const CentralityMap& scores, const VertexSet& over);

}  // namespace burn

#endif
