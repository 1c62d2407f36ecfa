#ifndef BURN_IO_HPP
#define BURN_IO_HPP

#include "burn/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace burn {

enum class GraphFormat { EdgeList, Dimacs };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GraphFormat parse_format(const std::string& name);  // "edgelist" | "dimacs"

// EdgeList: one whitespace-separated pair of arbitrary string labels per
// line, extra columns (weights) ignored, '#'/'%' comment lines skipped.
// Dimacs: "p edge n m" header plus "e u v" lines with 1-based vertex ids.
// Both drop self-loops and duplicate edges.
Graph load_graph(const std::string& path, GraphFormat format);
Graph read_edge_list(std::istream& in, const std::string& name);
Graph read_dimacs(std::istream& in, const std::string& name);

void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace burn

#endif
