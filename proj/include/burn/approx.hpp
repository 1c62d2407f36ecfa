#ifndef BURN_APPROX_HPP
#define BURN_APPROX_HPP

#include "burn/burning.hpp"
#include "burn/graph.hpp"

#include <utility>

namespace burn {

// 3-approximation for general graphs: binary-search the smallest guess k
// for which greedily picking the lowest-id vertex not within 2(k-1) of an
// earlier center uses at most k centers. The centers, played in pick
// order, burn the graph within 3k-2 steps; the returned estimate is the
// tightest coverage-valid budget of that sequence (<= 3k-2 <= 3*bn - 2).
std::pair<int, BurningSequence> aprx3_burning(const Graph& g);

// BFS spanning tree rooted at a minimum-eccentricity vertex. Input must
// be connected; spanning_forest applies it per component.
Graph spanning_tree(const Graph& g);
Graph spanning_forest(const Graph& g);

// 2-approximation for trees/forests: binary-search the smallest k for
// which repeatedly centering a (k-1)-ball at the (k-1)-th ancestor of the
// deepest unburned vertex uses at most k centers; the estimate is again
// the tightest coverage-valid budget (<= 2k-1 <= 2*bn - 1). On a spanning
// tree of G the result upper-bounds bn(G).
std::pair<int, BurningSequence> aprx2_tree_burning(const Graph& t);

}  // namespace burn

#endif
