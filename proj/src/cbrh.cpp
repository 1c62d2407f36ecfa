#include "burn/cbrh.hpp"

#include "burn/centrality.hpp"
#include "burn/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace burn {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    h ^= 0xff;  // separator
    h *= 0x100000001b3ULL;
    return h;
}

struct CbrhContext {
    MemoTable* memo = nullptr;
    CbrhLimits limits;
    long long calls = 0;
};

int run_cbrh(const Graph& g, int budget, CbrhContext& ctx, int depth,
             std::vector<std::string>* out_sources, int* out_budget);

// One i-step attempt; returns true when the graph is fully burned.
bool attempt_burn(const Graph& g, int steps, CbrhContext& ctx, int depth,
                  std::vector<std::string>& sources) {
    Graph residual = g;
    for (int j = 0; j < steps; ++j) {
        if (residual.empty()) return true;
        const ComponentList comps = components(residual);
        size_t best_k = 0;
        if (comps.size() > 1) {
            int max_estimate = -1;
            for (size_t k = 0; k < comps.size(); ++k) {
                const Graph sub = induced_subgraph(residual, comps[k]);
                const ComponentKey key = component_key(sub);
                int bg;
                auto it = ctx.memo->find(key);
                if (it != ctx.memo->end()) {
                    bg = it->second;
                } else {
                    bg = run_cbrh(sub, steps, ctx, depth + 1, nullptr, nullptr);
                    ctx.memo->emplace(key, bg);
                }
                // a component unburnable within the budget is the hardest
                const int effective = bg == -1 ? steps + 1 : bg;
                if (max_estimate < effective) {
                    max_estimate = effective;
                    best_k = k;
                }
            }
        }
        const Graph sub = induced_subgraph(residual, comps[best_k]);
        const CentralityMap cent = eigenvector_centrality(sub);
        const BackbonePath path = backbone_path(sub, cent);
        const int radius = steps - j - 1;
        VertexId pick = -1;
        size_t max_ball = 0;
        for (VertexId v : path.vertices) {  // path order, strict improvement
            const size_t ball = closed_ball(sub, v, radius).size();
            if (ball > max_ball) {
                max_ball = ball;
                pick = v;
            }
        }
        sources.push_back(sub.label(pick));
        VertexSet ball_residual_ids;
        for (VertexId v : closed_ball(sub, pick, radius))
            ball_residual_ids.push_back(comps[best_k][v]);
        residual = induced_delete(residual, ball_residual_ids);
        if (residual.empty()) return true;
    }
    return false;
}

int run_cbrh(const Graph& g, int budget, CbrhContext& ctx, int depth,
             std::vector<std::string>* out_sources, int* out_budget) {
    if (depth > 0) {
        ++ctx.calls;
        if (ctx.calls > ctx.limits.max_calls)
            throw std::runtime_error("cbrh_estimate: recursive call budget exceeded");
    }
    if (depth > ctx.limits.max_depth)
        throw std::runtime_error("cbrh_estimate: recursion depth exceeded");

    int bn = -1;
    for (int i = budget; i >= 1; --i) {
        std::vector<std::string> sources;
        if (!attempt_burn(g, i, ctx, depth, sources)) break;  // first failure ends the loop
        bn = i;
        if (out_sources) {
            *out_sources = std::move(sources);
            *out_budget = i;
        }
    }
    return bn;
}

}  // namespace

ComponentKey component_key(const Graph& comp) {
    std::vector<std::string> labels = comp.labels();
    std::sort(labels.begin(), labels.end());
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(static_cast<size_t>(comp.edge_count()));
    for (auto [u, v] : comp.edges()) {
        std::string a = comp.label(u), b = comp.label(v);
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(edges.begin(), edges.end());

    ComponentKey key{0xcbf29ce484222325ULL, 0x84222325cbf29ce4ULL};
    for (const std::string& l : labels) {
        key.lo = fnv1a(l, key.lo);
        key.hi = fnv1a(l, key.hi * 0x9e3779b97f4a7c15ULL + 1);
    }
    key.lo = fnv1a("|", key.lo);
    key.hi = fnv1a("|", key.hi);
    for (const auto& [a, b] : edges) {
        key.lo = fnv1a(b, fnv1a(a, key.lo));
        key.hi = fnv1a(b, fnv1a(a, key.hi * 0x9e3779b97f4a7c15ULL + 1));
    }
    return key;
}

CbrhResult cbrh_estimate(const Graph& g, int budget, MemoTable& memo,
                         const CbrhLimits& limits) {
    if (budget < 1) throw std::invalid_argument("cbrh_estimate: budget must be >= 1");
    CbrhResult result;
    if (g.empty()) {
        result.burning_number = 0;
        return result;
    }
    CbrhContext ctx;
    ctx.memo = &memo;
    ctx.limits = limits;
    int seq_budget = 0;
    std::vector<std::string> sources;
    result.burning_number = run_cbrh(g, budget, ctx, 0, &sources, &seq_budget);
    result.recursive_calls = ctx.calls;
    if (result.burning_number >= 1) {
        result.sequence.sources = std::move(sources);
        result.sequence.budget = seq_budget;
    }
    return result;
}

}  // namespace burn
