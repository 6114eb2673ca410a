#pragma once

#include <iosfwd>
#include <string>

#include "eds/graph.hpp"

namespace eds {

// Text format, strict in both directions:
//
//   eds-graph 1
//   n <count>
//   sides <string of X/Y, length n>
//   e <u> <v>        (u < v, lines ascending lexicographic)
//
// Full-line comments start with '#'. Any other deviation is a FormatError.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_file(const std::string& path);

std::string format_graph(const BipartiteGraph& g);
void write_graph_file(const BipartiteGraph& g, const std::string& path);

} // namespace eds
