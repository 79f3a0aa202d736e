#pragma once

// Simple undirected graphs on at most 64 vertices, one 64-bit adjacency row
// per vertex. Graph values are immutable; edits return new graphs.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdd/error.hpp"

namespace rdd {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

// Calls fn(v) for every vertex in s, ascending.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

std::vector<int> to_vertex_list(VertexSet s);
VertexSet to_vertex_set(std::span<const int> vertices);

// Undirected edge stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Orders the endpoints; throws InvalidEdgeError for a loop or negative index.
Edge make_edge(int a, int b);

std::string to_string(const Edge& e);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept;

  VertexSet vertices() const noexcept { return first_vertices(n_); }
  VertexSet neighbors(int u) const;
  bool has_edge(int u, int v) const;
  int degree(int u) const;
  int min_degree() const;
  int max_degree() const;

  std::span<const VertexSet> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check_vertex(int u) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Mutable staging area used by constructors and rewrites.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return g_.n_; }
  bool connect(int u, int v);
  bool disconnect(int u, int v);
  void isolate(int u);
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  VertexSet neighbors(int u) const { return g_.neighbors(u); }

  Graph build() const { return g_; }

 private:
  Graph g_;
};

struct EditResult {
  Graph graph;
  bool unchanged = false;
};

EditResult add_edge(const Graph& g, Edge e);
EditResult remove_edge(const Graph& g, Edge e);

int degree(const Graph& g, int u);

// Vertices reachable from `start` using only vertices inside `allowed`.
VertexSet reachable_from(const Graph& g, int start, VertexSet allowed);

// Connected components ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// Subgraph induced by `keep`, vertices renumbered ascending. `old_to_new`
// receives -1 for dropped vertices when non-null.
Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_to_new = nullptr);

// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

// Throws InvalidArgumentError unless the graph satisfies symmetry and has no loops.
void check_invariants(const Graph& g);

}  // namespace rdd
