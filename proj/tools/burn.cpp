#include "burn/approx.hpp"
#include "burn/bench.hpp"
#include "burn/burning.hpp"
#include "burn/cbrh.hpp"
#include "burn/generators.hpp"
#include "burn/heuristics.hpp"
#include "burn/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitInfeasibleBudget = 3;

std::string join_sources(const std::vector<std::string>& sources) {
    std::string out;
    for (size_t i = 0; i < sources.size(); ++i) {
        if (i) out += ',';
        out += sources[i];
    }
    return out;
}

std::vector<std::string> split_sequence(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int run_solve(const std::string& input, const std::string& format,
              const std::string& algo, int budget, bool strict, bool linear,
              int cap) {
    const burn::Graph g = burn::load_graph(input, burn::parse_format(format));
    std::cout << "graph: " << input << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << "\n";

    const auto start = std::chrono::steady_clock::now();
    burn::SolveOutcome outcome;
    if (budget > 0 && (algo == "bbgh" || algo == "icch")) {
        auto seq = burn::burn_graph(
            g, budget, algo == "bbgh" ? burn::bbgh_selector() : burn::icch_selector());
        if (!seq) {
            std::cerr << algo << " found no burning sequence with budget " << budget
                      << "\n";
            return kExitInfeasibleBudget;
        }
        outcome.estimate = budget;
        outcome.sequence = std::move(*seq);
    } else if (budget > 0 && algo == "cbrh") {
        burn::MemoTable memo;
        auto r = burn::cbrh_estimate(g, budget, memo);
        if (r.burning_number < 0) {
            std::cerr << "cbrh found no burning sequence with budget " << budget << "\n";
            return kExitInfeasibleBudget;
        }
        outcome.estimate = r.burning_number;
        outcome.sequence = std::move(r.sequence);
        outcome.cbrh_calls = r.recursive_calls;
    } else if (budget > 0 && algo == "exact") {
        auto [b, seq] = burn::exact_burning_number(g, cap);
        if (b > budget) {
            std::cerr << "burning number is " << b << " > budget " << budget << "\n";
            return kExitInfeasibleBudget;
        }
        outcome.estimate = b;
        outcome.sequence = std::move(seq);
    } else {
        outcome = burn::run_algorithm(
            algo, g, linear ? burn::SearchMode::Linear : burn::SearchMode::Binary, cap);
        if (budget > 0 && outcome.estimate > budget) {
            std::cerr << algo << " estimate " << outcome.estimate << " exceeds budget "
                      << budget << "\n";
            return kExitInfeasibleBudget;
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    std::cout << "algo: " << algo << "\nestimate: " << outcome.estimate
              << "\nsequence: " << join_sources(outcome.sequence.sources)
              << " (budget " << outcome.sequence.budget << ")\n";
    if (outcome.cbrh_calls >= 0)
        std::cout << "cbrh_calls: " << outcome.cbrh_calls << "\n";
    // aprx2 sequences live on the spanning forest but remain valid on g:
    // tree distances only overestimate distances in g.
    const bool coverage = burn::is_valid_burning_sequence(g, outcome.sequence, false);
    std::cout << "coverage_valid: " << (coverage ? "yes" : "no") << "\n";
    if (strict) {
        std::cout << "strict_valid: "
                  << (burn::is_valid_burning_sequence(g, outcome.sequence, true) ? "yes"
                                                                                 : "no")
                  << "\n";
    }
    std::cout << "ms: " << ms << "\n";
    return coverage ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit"};
    app.require_subcommand(1);

    // solve
    std::string input, format = "edgelist", algo = "bbgh";
    int budget = 0, cap = 32;
    bool strict = false, linear = false;
    auto* solve = app.add_subcommand("solve", "estimate a burning number");
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--format", format, "edgelist|dimacs");
    solve->add_option("--algo", algo, "bbgh|icch|cbrh|aprx3|aprx2|exact")
        ->check(CLI::IsMember({"bbgh", "icch", "cbrh", "aprx3", "aprx2", "exact"}));
    solve->add_option("--budget", budget, "fixed budget; exit 3 when infeasible");
    solve->add_option("--cap", cap, "exact oracle vertex cap");
    solve->add_flag("--strict-validate", strict, "also report strict validity");
    solve->add_flag("--linear-scan", linear, "linear upward scan instead of binary search");

    // validate
    std::string sequence_csv;
    int validate_budget = 0;
    bool validate_strict = false;
    auto* validate = app.add_subcommand("validate", "check a burning sequence");
    validate->add_option("--input", input, "graph file")->required();
    validate->add_option("--format", format, "edgelist|dimacs");
    validate->add_option("--sequence", sequence_csv, "comma-separated labels")->required();
    validate->add_option("--budget", validate_budget,
                         "sequence budget (default: sequence length)");
    validate->add_flag("--strict", validate_strict, "sources must be unburned when chosen");

    // gen
    std::string model = "random_tree", out_path;
    int gen_n = 0;
    long long gen_m = 0;
    std::uint64_t seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->add_option("--model", model, "erdos_renyi|barabasi_albert|random_tree")
        ->check(CLI::IsMember({"erdos_renyi", "barabasi_albert", "random_tree"}));
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count (ER) or edges per vertex (BA)");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--out", out_path, "output file (default stdout)");

    // bench
    std::string config_path, csv_path;
    auto* bench = app.add_subcommand("bench", "run a benchmark matrix");
    bench->add_option("--config", config_path, "JSON run matrix")->required();
    bench->add_option("--out", csv_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParseError;
    }

    try {
        if (solve->parsed())
            return run_solve(input, format, algo, budget, strict, linear, cap);

        if (validate->parsed()) {
            const burn::Graph g = burn::load_graph(input, burn::parse_format(format));
            burn::BurningSequence seq;
            seq.sources = split_sequence(sequence_csv);
            seq.budget = validate_budget > 0 ? validate_budget
                                             : static_cast<int>(seq.sources.size());
            const bool ok = burn::is_valid_burning_sequence(g, seq, validate_strict);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return 0;
        }

        if (gen->parsed()) {
            burn::Graph g;
            if (model == "erdos_renyi")
                g = burn::erdos_renyi(gen_n, gen_m, seed);
            else if (model == "barabasi_albert")
                g = burn::barabasi_albert(gen_n, static_cast<int>(gen_m), seed);
            else
                g = burn::random_tree(gen_n, seed);
            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw std::runtime_error("cannot open " + out_path);
                out = &file;
            }
            *out << "# " << model << " n=" << gen_n << " m=" << gen_m << " seed=" << seed
                 << "\n";
            burn::write_edge_list(g, *out);
            return 0;
        }

        if (bench->parsed()) {
            const auto config = burn::load_bench_config(config_path);
            const auto results = burn::run_benchmark(config);
            std::cout << burn::to_markdown(results);
            if (!csv_path.empty()) {
                std::ofstream file(csv_path);
                if (!file) throw std::runtime_error("cannot open " + csv_path);
                file << burn::to_csv(results);
            }
            return 0;
        }
    } catch (const burn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
