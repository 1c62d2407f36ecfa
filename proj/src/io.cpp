#include "burn/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace burn {

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw ParseError("unknown graph format: " + name);
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return format == GraphFormat::EdgeList ? read_edge_list(in, path)
                                           : read_dimacs(in, path);
}

namespace {

// Numeric labels order numerically, others lexicographically after them.
// Internal ids then follow the label order instead of the order edges
// happen to appear in, so lowest-id tie-breaks match the vertex numbering
// of the source instance.
bool label_less(const std::string& a, const std::string& b) {
    auto digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    const bool na = digits(a), nb = digits(b);
    if (na != nb) return na;
    if (na) {
        const std::string sa = a.substr(std::min(a.find_first_not_of('0'), a.size() - 1));
        const std::string sb = b.substr(std::min(b.find_first_not_of('0'), b.size() - 1));
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string u, v;
        if (!(tokens >> u)) continue;
        if (u[0] == '#' || u[0] == '%') continue;
        if (!(tokens >> v))
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected two vertex labels");
        raw.emplace_back(std::move(u), std::move(v));
    }
    std::vector<std::string> labels;
    labels.reserve(raw.size() * 2);
    for (const auto& [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end(), label_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::unordered_map<std::string, VertexId> index;
    for (size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) edges.emplace_back(index.at(u), index.at(v));
    return Graph(std::move(labels), edges);
}

Graph read_dimacs(std::istream& in, const std::string& name) {
    std::string line;
    int line_no = 0;
    long long n = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind)) continue;
        const std::string where = name + ":" + std::to_string(line_no);
        if (kind == "c") continue;
        if (kind == "p") {
            std::string problem;
            long long m = 0;
            if (!(tokens >> problem >> n >> m) || problem != "edge" || n < 0)
                throw ParseError(where + ": expected 'p edge <n> <m>'");
            continue;
        }
        if (kind == "e") {
            long long u = 0, v = 0;
            if (n < 0) throw ParseError(where + ": edge before 'p edge' header");
            if (!(tokens >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw ParseError(where + ": expected 'e <u> <v>' with 1-based ids");
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            continue;
        }
        throw ParseError(where + ": unknown line type '" + kind + "'");
    }
    if (n < 0) throw ParseError(name + ": missing 'p edge' header");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (long long i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph(std::move(labels), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

}  // namespace burn
