#include "rdd/enumerate.hpp"

#include <fstream>

#include "rdd/codec.hpp"

namespace rdd {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) b.connect(i, j);
    }
  }
  return b.build();
}

std::uint64_t mask_of(const Graph& g) {
  if (pair_count(g.order()) > 64) throw CapacityError("graph too large for a 64-bit edge mask");
  std::uint64_t mask = 0;
  int bit = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

void check_enumeration_order(int n, bool allow_big) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw RangeError("built-in enumeration supports 1 <= n <= 8, got " + std::to_string(n));
  }
  if (n == kBigEnumerationOrder && !allow_big) throw RangeError("n = 8 enumeration requires the big flag");
}

void enumerate_connected_range(int n, std::uint64_t begin, std::uint64_t end, const MaskVisitor& fn) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const Graph g = graph_from_mask(n, mask);
    if (is_connected(g)) fn(g, mask);
  }
}

void enumerate_connected(int n, const MaskVisitor& fn, bool allow_big) {
  check_enumeration_order(n, allow_big);
  enumerate_connected_range(n, 0, std::uint64_t{1} << pair_count(n), fn);
}

std::vector<Graph> connected_graphs(int n, bool allow_big) {
  std::vector<Graph> out;
  enumerate_connected(n, [&](const Graph& g, std::uint64_t) { out.push_back(g); }, allow_big);
  return out;
}

void enumerate_from_file(const std::string& path, const std::function<void(const Graph&, std::size_t)>& fn) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open graph6 file '" + path + "'");
  read_graph6_stream(in, fn);
}

}  // namespace rdd
