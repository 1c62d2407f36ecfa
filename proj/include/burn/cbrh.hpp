#ifndef BURN_CBRH_HPP
#define BURN_CBRH_HPP

#include "burn/burning.hpp"
#include "burn/graph.hpp"

#include <cstdint>
#include <unordered_map>

namespace burn {

// Canonical component key: 128-bit hash over the sorted label set and the
// label-sorted edge list, so identical components collide and others
// effectively never do.
struct ComponentKey {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const ComponentKey&) const = default;
};

struct ComponentKeyHash {
    size_t operator()(const ComponentKey& k) const {
        return static_cast<size_t>(k.lo ^ (k.hi * 0x9e3779b97f4a7c15ULL));
    }
};

ComponentKey component_key(const Graph& comp);

// Dictionary D: component key -> estimated burning number. Entries are
// write-once within a top-level call.
using MemoTable = std::unordered_map<ComponentKey, int, ComponentKeyHash>;

struct CbrhResult {
    int burning_number = -1;  // -1: no burn within the budget succeeded
    BurningSequence sequence;
    long long recursive_calls = 0;  // calls beyond the top level
};

struct CbrhLimits {
    int max_depth = 64;
    long long max_calls = 1'000'000;
};

// Component Based Recursive Heuristic: for i = budget down to 1, attempt
// an i-step burn that, whenever the residual graph splits, recursively
// estimates each component's burning number (memoized) and burns the
// hardest component first, picking along its backbone path. Returns the
// smallest successful i; stops at the first failing i.
CbrhResult cbrh_estimate(const Graph& g, int budget, MemoTable& memo,
                         const CbrhLimits& limits = {});

}  // namespace burn

#endif
