#ifndef BURN_BENCH_HPP
#define BURN_BENCH_HPP

#include "burn/burning.hpp"
#include "burn/graph.hpp"
#include "burn/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burn {

struct BenchResult {
    std::string dataset;
    long long n = 0;
    long long m = 0;
    std::string algo;
    bool failed = false;
    std::string error;
    double estimate = 0.0;  // integer-valued except on mean rows
    bool mean_row = false;
    double ms = 0.0;
    long long calls = -1;  // CBRH recursive calls, -1 = not applicable
    std::optional<std::uint64_t> seed;
};

struct DatasetSpec {
    std::string name;
    // file-backed
    std::string path;
    GraphFormat format = GraphFormat::EdgeList;
    // generated
    bool generated = false;
    std::string model;  // erdos_renyi | barabasi_albert | random_tree
    int n = 0;
    long long m = 0;
    int count = 1;  // >1: an ensemble; rows per instance plus a mean row
    std::uint64_t seed = 0;
};

struct BenchConfig {
    int repetitions = 1;
    std::string search = "binary";  // binary | linear | both
    int exact_cap = 32;
    std::vector<std::string> algorithms;
    std::vector<DatasetSpec> datasets;
};

BenchConfig load_bench_config(const std::string& path);

// One solver run; shared by the benchmark runner and the CLI.
struct SolveOutcome {
    int estimate = -1;
    BurningSequence sequence;
    long long cbrh_calls = -1;
};
SolveOutcome run_algorithm(const std::string& algo, const Graph& g,
                           SearchMode mode, int exact_cap);

Graph realize_dataset(const DatasetSpec& spec, int instance);

// Runs every algorithm on every dataset; timing covers the solver call
// only. Per-cell failures are recorded and the run continues.
std::vector<BenchResult> run_benchmark(const BenchConfig& config);

std::string to_csv(const std::vector<BenchResult>& results);
std::string to_markdown(const std::vector<BenchResult>& results);

}  // namespace burn

#endif
