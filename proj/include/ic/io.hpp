#pragma once

#include <iosfwd>
#include <string>

#include "ic/graph.hpp"

namespace ic {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Standard graph6 encoding, n < 63 only.
Graph parse_graph6(const std::string& line);

// Loads a file by extension: .g6 lines -> first graph, otherwise edge list.
Graph load_graph(const std::string& path);

}  // namespace ic
