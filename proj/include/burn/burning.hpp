#ifndef BURN_BURNING_HPP
#define BURN_BURNING_HPP

#include "burn/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace burn {

// Ordered fire sources in original labels. A sequence may hold fewer
// sources than its budget: the driver stops as soon as the graph is
// burned, and source i still acts with radius budget - i - 1.
struct BurningSequence {
    std::vector<std::string> sources;
    int budget = 0;
};

// Pluggable getBestCentralNode strategy: (residual graph, remaining
// radius) -> vertex id of the residual graph.
using Selector = std::function<VertexId(const Graph&, int)>;

// One round of the greedy burning driver: pick, delete the pick's
// (budget-j-1)-ball from the residual graph, succeed once it is empty.
// Failure (vertices left after `budget` picks) is a normal outcome.
std::optional<BurningSequence> burn_graph(const Graph& g, int budget,
                                          const Selector& sel);

// Coverage mode: every vertex v has an index i with
// dist(v, seq[i]) <= budget - i - 1. Strict mode additionally requires
// dist(seq[i], seq[j]) >= j - i for i < j (sources unburned when chosen).
bool is_valid_burning_sequence(const Graph& g, const BurningSequence& seq,
                               bool strict = false);

enum class SearchMode { Binary, Linear };

// Smallest budget found by the chosen search for which burn_graph
// succeeds, plus the witnessing sequence. Heuristic success is not
// monotone in b, so Binary (over [1, n], failure at mid -> search right)
// can settle above the smallest successful budget; Linear scans upward
// from 1 and never does.
std::pair<int, BurningSequence> estimate_burning_number(
    const Graph& g, const Selector& sel, SearchMode mode = SearchMode::Binary);

// radius + 1 for a connected graph; sum of (component radius + 1) for a
// disconnected one, achievable by burning components from their centers.
int burning_upper_bound(const Graph& g);

// True burning number under the coverage definition: iterative deepening
// over b, DFS over source choices restricted to uncovered vertices,
// memoizing covered-set states. Refuses graphs above max_vertices.
std::pair<int, BurningSequence> exact_burning_number(const Graph& g,
                                                     int max_vertices = 32);

struct OracleSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace burn

#endif
