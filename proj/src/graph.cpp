#include "rdd/graph.hpp"

#include <algorithm>

namespace rdd {

std::vector<int> to_vertex_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

VertexSet to_vertex_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
    s |= singleton(v);
  }
  return s;
}

Edge make_edge(int a, int b) {
  if (a == b) throw InvalidEdgeError("loop at vertex " + std::to_string(a));
  if (a < 0 || b < 0) throw InvalidEdgeError("negative vertex index");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n) {
  if (n < 0) throw CapacityError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapacityError("vertex count " + std::to_string(n) + " exceeds maximum " + std::to_string(kMaxVertices));
  }
  n_ = n;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.connect(e.u, e.v);
  return b.build();
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (int u = 0; u < n_; ++u) twice += static_cast<std::size_t>(std::popcount(adj_[u]));
  return twice / 2;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw InvalidVertexError("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n_));
  }
}

VertexSet Graph::neighbors(int u) const {
  check_vertex(u);
  return adj_[u];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return contains(adj_[u], v);
}

int Graph::degree(int u) const {
  check_vertex(u);
  return std::popcount(adj_[u]);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int u = 0; u < n_; ++u) best = std::min(best, std::popcount(adj_[u]));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int u = 0; u < n_; ++u) best = std::max(best, std::popcount(adj_[u]));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~first_vertices(u + 1), [&](int v) { out.push_back({u, v}); });
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

bool GraphBuilder::connect(int u, int v) {
  if (u == v) throw InvalidEdgeError("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw InvalidEdgeError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                           std::to_string(g_.n_));
  }
  const bool fresh = !contains(g_.adj_[u], v);
  g_.adj_[u] |= singleton(v);
  g_.adj_[v] |= singleton(u);
  return fresh;
}

bool GraphBuilder::disconnect(int u, int v) {
  if (u == v) throw InvalidEdgeError("loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw InvalidEdgeError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                           std::to_string(g_.n_));
  }
  const bool present = contains(g_.adj_[u], v);
  g_.adj_[u] &= ~singleton(v);
  g_.adj_[v] &= ~singleton(u);
  return present;
}

void GraphBuilder::isolate(int u) {
  g_.check_vertex(u);
  for_each_vertex(g_.adj_[u], [&](int v) { g_.adj_[v] &= ~singleton(u); });
  g_.adj_[u] = 0;
}

EditResult add_edge(const Graph& g, Edge e) {
  GraphBuilder b(g);
  const bool fresh = b.connect(e.u, e.v);
  return {b.build(), !fresh};
}

EditResult remove_edge(const Graph& g, Edge e) {
  GraphBuilder b(g);
  const bool present = b.disconnect(e.u, e.v);
  return {b.build(), !present};
}

int degree(const Graph& g, int u) { return g.degree(u); }

VertexSet reachable_from(const Graph& g, int start, VertexSet allowed) {
  const auto rows = g.rows();
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= rows[static_cast<std::size_t>(v)]; });
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet left = g.vertices();
  while (left != 0) {
    const VertexSet part = reachable_from(g, std::countr_zero(left), g.vertices());
    parts.push_back(part);
    left &= ~part;
  }
  return parts;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable_from(g, 0, g.vertices()) == g.vertices();
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_to_new) {
  keep &= g.vertices();
  std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { map[static_cast<std::size_t>(v)] = next++; });
  GraphBuilder b(next);
  for (const Edge& e : g.edges()) {
    if (contains(keep, e.u) && contains(keep, e.v)) {
      b.connect(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
    }
  }
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InvalidArgumentError("permutation size mismatch");
  VertexSet image = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || contains(image, p)) throw InvalidArgumentError("not a permutation");
    image |= singleton(p);
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    b.connect(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return b.build();
}

void check_invariants(const Graph& g) {
  const auto rows = g.rows();
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet row = rows[static_cast<std::size_t>(u)];
    if (contains(row, u)) throw InvalidArgumentError("loop at " + std::to_string(u));
    if ((row & ~g.vertices()) != 0) throw InvalidArgumentError("row " + std::to_string(u) + " exceeds n");
    for_each_vertex(row, [&](int v) {
      if (!contains(rows[static_cast<std::size_t>(v)], u)) throw InvalidArgumentError("asymmetric adjacency");
    });
  }
}

}  // namespace rdd
