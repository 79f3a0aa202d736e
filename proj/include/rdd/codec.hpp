#pragma once

// graph6 and "n; u-v, ..." edge-list codecs.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/graph.hpp"

namespace rdd {

// Canonical graph6: size header then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, big-endian, plus 63.
std::string write_graph6(const Graph& g);

// Accepts one record, optionally preceded by ">>graph6<<" and followed by a
// line terminator. Throws ParseError carrying the byte offset.
Graph parse_graph6(std::string_view text);

// Reads newline-delimited graph6; blank lines are skipped. fn receives the
// graph and its 1-based line number. ParseError messages cite the line.
void read_graph6_stream(std::istream& in, const std::function<void(const Graph&, std::size_t line)>& fn);

struct EdgeListResult {
  Graph graph;
  std::vector<std::string> warnings;
};

// "n; u-v, u-v, ..." with 0-based indices. Duplicate edges produce warnings.
EdgeListResult parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace rdd
