#include "burn/bench.hpp"

#include "burn/approx.hpp"
#include "burn/cbrh.hpp"
#include "burn/generators.hpp"
#include "burn/heuristics.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace burn {

namespace {

using nlohmann::json;

std::string format_estimate(const BenchResult& r) {
    if (r.failed) return "error";
    char buf[32];
    if (r.mean_row)
        std::snprintf(buf, sizeof buf, "%.1f", r.estimate);
    else
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(r.estimate)));
    return buf;
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::vector<std::string> result_cells(const BenchResult& r) {
    return {r.dataset,
            std::to_string(r.n),
            std::to_string(r.m),
            r.algo,
            format_estimate(r),
            format_ms(r.ms),
            r.calls >= 0 ? std::to_string(r.calls) : "",
            r.seed ? std::to_string(*r.seed) : ""};
}

const std::vector<std::string> kHeader = {"dataset", "n",  "m",     "algo",
                                          "estimate", "ms", "calls", "seed"};

}  // namespace

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    BenchConfig config;
    config.repetitions = doc.value("repetitions", 1);
    config.search = doc.value("search", std::string("binary"));
    config.exact_cap = doc.value("exact_cap", 32);
    if (config.search != "binary" && config.search != "linear" && config.search != "both")
        throw ParseError(path + ": search must be binary, linear or both");
    for (const auto& a : doc.at("algorithms")) config.algorithms.push_back(a);
    for (const auto& d : doc.at("datasets")) {
        DatasetSpec spec;
        spec.name = d.at("name");
        if (d.contains("model")) {
            spec.generated = true;
            spec.model = d.at("model");
            spec.n = d.at("n");
            spec.m = d.value("m", 0LL);
            spec.count = d.value("count", 1);
            spec.seed = d.value("seed", 0ULL);
        } else {
            spec.path = d.at("path");
            spec.format = parse_format(d.value("format", std::string("edgelist")));
        }
        config.datasets.push_back(std::move(spec));
    }
    return config;
}

Graph realize_dataset(const DatasetSpec& spec, int instance) {
    if (!spec.generated) return load_graph(spec.path, spec.format);
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(instance);
    if (spec.model == "erdos_renyi") return erdos_renyi(spec.n, spec.m, seed);
    if (spec.model == "barabasi_albert")
        return barabasi_albert(spec.n, static_cast<int>(spec.m), seed);
    if (spec.model == "random_tree") return random_tree(spec.n, seed);
    throw ParseError("unknown model: " + spec.model);
}

SolveOutcome run_algorithm(const std::string& algo, const Graph& g,
                           SearchMode mode, int exact_cap) {
    SolveOutcome out;
    if (algo == "bbgh" || algo == "icch") {
        auto [b, seq] = estimate_burning_number(
            g, algo == "bbgh" ? bbgh_selector() : icch_selector(), mode);
        out.estimate = b;
        out.sequence = std::move(seq);
    } else if (algo == "cbrh") {
        MemoTable memo;
        CbrhResult r = cbrh_estimate(g, burning_upper_bound(g), memo);
        if (r.burning_number < 0) {
            // the greedy can miss the radius bound; b = n cannot fail
            MemoTable retry;
            r = cbrh_estimate(g, g.vertex_count(), retry);
        }
        out.estimate = r.burning_number;
        out.sequence = std::move(r.sequence);
        out.cbrh_calls = r.recursive_calls;
    } else if (algo == "aprx3") {
        auto [b, seq] = aprx3_burning(g);
        out.estimate = b;
        out.sequence = std::move(seq);
    } else if (algo == "aprx2") {
        const bool forest =
            g.edge_count() == g.vertex_count() - static_cast<long long>(components(g).size());
        auto [b, seq] = aprx2_tree_burning(forest ? g : spanning_forest(g));
        out.estimate = b;
        out.sequence = std::move(seq);
    } else if (algo == "exact") {
        auto [b, seq] = exact_burning_number(g, exact_cap);
        out.estimate = b;
        out.sequence = std::move(seq);
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    return out;
}

std::vector<BenchResult> run_benchmark(const BenchConfig& config) {
    std::vector<BenchResult> results;
    std::vector<std::pair<std::string, SearchMode>> searches;
    if (config.search == "binary" || config.search == "both")
        searches.emplace_back("", SearchMode::Binary);
    if (config.search == "linear" || config.search == "both")
        searches.emplace_back("-linear", SearchMode::Linear);
    // only the driver-based heuristics take a search mode
    const std::vector<std::pair<std::string, SearchMode>> single{
        {"", SearchMode::Binary}};
    std::vector<std::pair<std::string, SearchMode>> cells;  // algo+suffix, mode
    std::vector<std::string> cell_algo;
    for (const std::string& algo : config.algorithms) {
        const auto& variants = (algo == "bbgh" || algo == "icch") ? searches : single;
        for (const auto& [suffix, mode] : variants) {
            cells.emplace_back(algo + suffix, mode);
            cell_algo.push_back(algo);
        }
    }

    for (const DatasetSpec& spec : config.datasets) {
        const int count = spec.generated ? spec.count : 1;
        // per algorithm-variant accumulators for the ensemble mean row
        struct Acc {
            double estimate = 0, ms = 0;
            long long n = 0, m = 0;
            int ok = 0;
        };
        std::vector<Acc> acc(cells.size());

        for (int inst = 0; inst < count; ++inst) {
            Graph g;
            std::string load_error;
            try {
                g = realize_dataset(spec, inst);
            } catch (const std::exception& e) {
                load_error = e.what();
            }
            for (size_t slot = 0; slot < cells.size(); ++slot) {
                const std::string& algo = cell_algo[slot];
                const auto& [name_with_suffix, mode] = cells[slot];
                BenchResult r;
                r.dataset = spec.name;
                r.algo = name_with_suffix;
                if (spec.generated) r.seed = spec.seed + inst;
                if (!load_error.empty()) {
                    r.failed = true;
                    r.error = load_error;
                } else {
                    r.n = g.vertex_count();
                    r.m = g.edge_count();
                    try {
                        SolveOutcome out;
                        double total_ms = 0;
                        for (int rep = 0; rep < std::max(1, config.repetitions); ++rep) {
                            const auto start = std::chrono::steady_clock::now();
                            out = run_algorithm(algo, g, mode, config.exact_cap);
                            const auto stop = std::chrono::steady_clock::now();
                            total_ms +=
                                std::chrono::duration<double, std::milli>(stop - start)
                                    .count();
                        }
                        r.estimate = out.estimate;
                        r.ms = total_ms / std::max(1, config.repetitions);
                        r.calls = out.cbrh_calls;
                    } catch (const std::exception& e) {
                        r.failed = true;
                        r.error = e.what();
                    }
                }
                if (!r.failed) {
                    acc[slot].estimate += r.estimate;
                    acc[slot].ms += r.ms;
                    acc[slot].n += r.n;
                    acc[slot].m += r.m;
                    acc[slot].ok += 1;
                }
                results.push_back(std::move(r));
            }
        }
        if (count > 1) {
            for (size_t slot = 0; slot < cells.size(); ++slot) {
                BenchResult r;
                r.dataset = spec.name + "/mean";
                r.algo = cells[slot].first;
                r.mean_row = true;
                const Acc& a = acc[slot];
                if (a.ok == 0) {
                    r.failed = true;
                    r.error = "all instances failed";
                } else {
                    r.estimate = a.estimate / a.ok;
                    r.ms = a.ms / a.ok;
                    r.n = a.n / a.ok;
                    r.m = a.m / a.ok;
                }
                results.push_back(std::move(r));
            }
        }
    }
    return results;
}

std::string to_csv(const std::vector<BenchResult>& results) {
    std::ostringstream out;
    for (size_t i = 0; i < kHeader.size(); ++i)
        out << (i ? "," : "") << kHeader[i];
    out << '\n';
    for (const BenchResult& r : results) {
        const auto cells = result_cells(r);
        for (size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
    }
    return out.str();
}

std::string to_markdown(const std::vector<BenchResult>& results) {
    std::vector<std::vector<std::string>> rows{kHeader};
    for (const BenchResult& r : results) rows.push_back(result_cells(r));
    std::vector<size_t> width(kHeader.size(), 0);
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        out << '|';
        for (size_t i = 0; i < row.size(); ++i) {
            out << ' ' << row[i] << std::string(width[i] - row[i].size(), ' ') << " |";
        }
        out << '\n';
    };
    emit(rows[0]);
    out << '|';
    for (size_t i = 0; i < width.size(); ++i) out << ' ' << std::string(width[i], '-') << " |";
    out << '\n';
    for (size_t i = 1; i < rows.size(); ++i) emit(rows[i]);
    return out.str();
}

}  // namespace burn
