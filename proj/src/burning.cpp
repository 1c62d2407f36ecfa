#include "burn/burning.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace burn {

std::optional<BurningSequence> burn_graph(const Graph& g, int budget,
                                          const Selector& sel) {
    if (budget < 1) throw std::invalid_argument("burn_graph: budget must be >= 1");
    BurningSequence seq;
    seq.budget = budget;
    Graph residual = g;
    if (residual.empty()) return seq;
    for (int j = 0; j < budget; ++j) {
        const int radius = budget - j - 1;
        const VertexId pick = sel(residual, radius);
        if (!residual.has_vertex(pick))
            throw std::logic_error("selector returned vertex outside residual graph");
        seq.sources.push_back(residual.label(pick));
        residual = induced_delete(residual, closed_ball(residual, pick, radius));
        if (residual.empty()) return seq;
    }
    return std::nullopt;
}

bool is_valid_burning_sequence(const Graph& g, const BurningSequence& seq,
                               bool strict) {
    const int b = seq.budget;
    const int len = static_cast<int>(seq.sources.size());
    if (len > b) return false;
    std::vector<VertexId> ids;
    ids.reserve(seq.sources.size());
    for (const std::string& label : seq.sources) {
        auto v = g.find_label(label);
        if (!v) throw std::invalid_argument("unknown vertex label: " + label);
        ids.push_back(*v);
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (ids[i] == ids[j]) return false;

    std::vector<char> covered(g.vertex_count(), 0);
    std::vector<std::vector<int>> dist;
    dist.reserve(ids.size());
    for (int i = 0; i < len; ++i) {
        dist.push_back(bfs_distances(g, ids[i]));
        const int radius = b - i - 1;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (dist[i][v] >= 0 && dist[i][v] <= radius) covered[v] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    if (strict) {
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                const int d = dist[i][ids[j]];
                if (d >= 0 && d < j - i) return false;
            }
    }
    return true;
}

int burning_upper_bound(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("burning_upper_bound: empty graph");
    int bound = 0;
    for (const VertexSet& comp : components(g)) {
        const Graph sub = induced_subgraph(g, comp);
        int radius = sub.vertex_count();
        for (VertexId v = 0; v < sub.vertex_count(); ++v)
            radius = std::min(radius, eccentricity(sub, v));
        bound += radius + 1;
    }
    return bound;
}

std::pair<int, BurningSequence> estimate_burning_number(const Graph& g,
                                                        const Selector& sel,
                                                        SearchMode mode) {
    if (g.empty()) throw std::invalid_argument("estimate_burning_number: empty graph");
    if (mode == SearchMode::Linear) {
        for (int b = 1; b <= g.vertex_count(); ++b)
            if (auto seq = burn_graph(g, b, sel)) return {b, std::move(*seq)};
        throw std::logic_error("estimate_burning_number: no budget succeeded");
    }
    // Search window [1, n]: b = n always succeeds because each step
    // deletes at least its own pick, so the search always records a
    // witness even though heuristic success is not monotone in b.
    int lo = 1, hi = g.vertex_count();
    std::optional<std::pair<int, BurningSequence>> best;
    while (lo <= hi) {
        const int mid = lo + (hi - lo) / 2;
        if (auto seq = burn_graph(g, mid, sel)) {
            best = {mid, std::move(*seq)};
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    return std::move(*best);
}

namespace {

struct OracleSearch {
    int n = 0;
    int budget = 0;
    std::uint64_t full = 0;
    std::vector<std::vector<std::uint64_t>> ball;  // [radius][vertex]
    std::vector<int> max_ball;                     // by radius
    std::vector<int> suffix_capacity;              // by step
    std::vector<std::unordered_set<std::uint64_t>> visited;
    std::vector<VertexId> picks;

    bool dfs(int step, std::uint64_t covered) {
        if (covered == full) return true;
        if (step == budget) return false;
        if (std::popcount(full & ~covered) > suffix_capacity[step]) return false;
        if (!visited[step].insert(covered).second) return false;
        const auto& balls = ball[budget - step - 1];
        std::vector<std::uint64_t> tried;
        for (VertexId v = 0; v < n; ++v) {
            if (covered & (1ULL << v)) continue;  // sources go on unburned vertices
            const std::uint64_t next = covered | balls[v];
            if (std::find(tried.begin(), tried.end(), next) != tried.end()) continue;
            tried.push_back(next);
            picks.push_back(v);
            if (dfs(step + 1, next)) return true;
            picks.pop_back();
        }
        return false;
    }
};

}  // namespace

std::pair<int, BurningSequence> exact_burning_number(const Graph& g,
                                                     int max_vertices) {
    if (g.empty()) throw std::invalid_argument("exact_burning_number: empty graph");
    const int n = g.vertex_count();
    const int cap = std::min(max_vertices, 64);
    if (n > cap)
        throw OracleSizeError("exact_burning_number: " + std::to_string(n) +
                              " vertices exceeds cap " + std::to_string(cap));

    std::vector<std::vector<int>> dist;
    dist.reserve(n);
    for (VertexId v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));

    for (int b = 1; b <= n; ++b) {
        OracleSearch search;
        search.n = n;
        search.budget = b;
        search.full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        search.ball.assign(b, std::vector<std::uint64_t>(n, 0));
        search.max_ball.assign(b, 0);
        for (int r = 0; r < b; ++r) {
            for (VertexId v = 0; v < n; ++v) {
                std::uint64_t mask = 0;
                for (VertexId u = 0; u < n; ++u)
                    if (dist[v][u] >= 0 && dist[v][u] <= r) mask |= 1ULL << u;
                search.ball[r][v] = mask;
                search.max_ball[r] = std::max(search.max_ball[r], std::popcount(mask));
            }
        }
        search.suffix_capacity.assign(b, 0);
        int acc = 0;
        for (int step = b - 1; step >= 0; --step) {
            acc += search.max_ball[b - step - 1];
            search.suffix_capacity[step] = acc;
        }
        search.visited.assign(b, {});
        if (search.dfs(0, 0)) {
            BurningSequence seq;
            seq.budget = b;
            for (VertexId v : search.picks) seq.sources.push_back(g.label(v));
            return {b, std::move(seq)};
        }
    }
    throw std::logic_error("exact_burning_number: unreachable");
}

}  // namespace burn
