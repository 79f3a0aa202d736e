#pragma once

// Labeled enumeration of connected graphs by edge bitmask. Bit i of a mask
// is the i-th vertex pair in graph6 order: (0,1), (0,2), (1,2), (0,3), ...

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rdd/graph.hpp"

namespace rdd {

inline constexpr int kMaxEnumerationOrder = 8;
// n = 8 means 2^28 masks and has to be requested explicitly.
inline constexpr int kBigEnumerationOrder = 8;

int pair_count(int n);
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

// Throws RangeError unless 1 <= n <= 8 (n == 8 only with allow_big).
void check_enumeration_order(int n, bool allow_big);

using MaskVisitor = std::function<void(const Graph&, std::uint64_t mask)>;

// Connected graphs among masks in [begin, end), ascending.
void enumerate_connected_range(int n, std::uint64_t begin, std::uint64_t end, const MaskVisitor& fn);
void enumerate_connected(int n, const MaskVisitor& fn, bool allow_big = false);
std::vector<Graph> connected_graphs(int n, bool allow_big = false);

// Newline-delimited graph6 file. fn receives each graph and its line number.
void enumerate_from_file(const std::string& path, const std::function<void(const Graph&, std::size_t line)>& fn);

}  // namespace rdd
