#ifndef BURN_GENERATORS_HPP
#define BURN_GENERATORS_HPP

#include "burn/graph.hpp"

#include <cstdint>

namespace burn {

// All generators are deterministic for a fixed seed and label vertices
// "0".."n-1".

// G(n, m): exactly m distinct uniform edges.
Graph erdos_renyi(int n, long long m, std::uint64_t seed);

// Preferential attachment, m edges per new vertex (m initial vertices,
// the first arrival connecting to all of them).
Graph barabasi_albert(int n, int m, std::uint64_t seed);

// Uniform random labeled tree via a uniform Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace burn

#endif
