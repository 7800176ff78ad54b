#pragma once

#include <iosfwd>
#include <string>

#include "k2l/graph.hpp"

namespace k2l {

// Text graph format: first data line "n m", then m lines "u v" with
// 0 <= u < v < n, ASCII decimal separated by single spaces. Lines starting
// with '#' are comments and may appear anywhere.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace k2l
