#include "rdd/structure.hpp"

#include <algorithm>
#include <array>

namespace rdd {

namespace {

// Recursive lowpoint DFS; depth is bounded by kMaxVertices.
class LowpointSearch {
 public:
  LowpointSearch(const Graph& g, bool collect_blocks) : g_(g), collect_(collect_blocks) {
    disc_.fill(-1);
  }

  void run() {
    for (int root = 0; root < g_.order(); ++root) {
      if (disc_[static_cast<std::size_t>(root)] >= 0) continue;
      int children = 0;
      visit(root, -1, children);
      if (children >= 2) cut_vertices_ |= singleton(root);
    }
  }

  VertexSet cut_vertices() const { return cut_vertices_; }
  int cut_edge_count() const { return bridge_count_; }
  std::vector<Edge>& bridges() { return bridges_; }
  std::vector<std::vector<Edge>>& blocks() { return blocks_; }

 private:
  void visit(int u, int parent, int& root_children) {
    const auto su = static_cast<std::size_t>(u);
    disc_[su] = low_[su] = clock_++;
    for_each_vertex(g_.rows()[su], [&](int v) {
      const auto sv = static_cast<std::size_t>(v);
      if (v == parent) return;
      if (disc_[sv] < 0) {
        if (collect_) stack_.push_back(make_edge(u, v));
        if (parent < 0) ++root_children;
        int unused = 0;
        visit(v, u, unused);
        low_[su] = std::min(low_[su], low_[sv]);
        if (low_[sv] > disc_[su]) {
          ++bridge_count_;
          if (collect_) bridges_.push_back(make_edge(u, v));
        }
        if (low_[sv] >= disc_[su]) {
          if (parent >= 0) cut_vertices_ |= singleton(u);
          if (collect_) pop_block(make_edge(u, v));
        }
      } else if (disc_[sv] < disc_[su]) {
        if (collect_) stack_.push_back(make_edge(u, v));
        low_[su] = std::min(low_[su], disc_[sv]);
      }
    });
  }

  void pop_block(Edge until) {
    std::vector<Edge> block;
    while (true) {
      const Edge e = stack_.back();
      stack_.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  bool collect_;
  int clock_ = 0;
  std::array<int, kMaxVertices> disc_{};
  std::array<int, kMaxVertices> low_{};
  VertexSet cut_vertices_ = 0;
  int bridge_count_ = 0;
  std::vector<Edge> stack_;
  std::vector<Edge> bridges_;
  std::vector<std::vector<Edge>> blocks_;
};

}  // namespace

CutStructure cut_structure(const Graph& g) {
  LowpointSearch search(g, true);
  search.run();
  CutStructure s;
  s.cut_vertices = search.cut_vertices();
  s.cut_edges = std::move(search.bridges());
  std::sort(s.cut_edges.begin(), s.cut_edges.end());
  s.blocks = std::move(search.blocks());
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

CutCounts cut_counts(const Graph& g) {
  LowpointSearch search(g, false);
  search.run();
  return {set_size(search.cut_vertices()), search.cut_edge_count()};
}

int count_cut_vertices(const Graph& g) { return cut_counts(g).cut_vertices; }
int count_cut_edges(const Graph& g) { return cut_counts(g).cut_edges; }

std::vector<PendantPath> pendant_paths(const Graph& g) {
  std::vector<PendantPath> out;
  for (int anchor = 0; anchor < g.order(); ++anchor) {
    if (g.degree(anchor) < 3) continue;
    for_each_vertex(g.neighbors(anchor), [&](int first) {
      PendantPath path{anchor, {}};
      int prev = anchor;
      int cur = first;
      while (true) {
        const int deg = g.degree(cur);
        if (deg > 2) return;
        path.vertices.push_back(cur);
        if (deg == 1) break;
        const int next = std::countr_zero(g.neighbors(cur) & ~singleton(prev));
        if (next == anchor) return;  // closes a cycle through the anchor
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(path));
    });
  }
  return out;
}

VertexSet block_vertices(std::span<const Edge> block) {
  VertexSet s = 0;
  for (const Edge& e : block) s |= singleton(e.u) | singleton(e.v);
  return s;
}

bool is_block_complete(const Graph& g, std::span<const Edge> block) {
  std::vector<Edge> sorted(block.begin(), block.end());
  std::sort(sorted.begin(), sorted.end());
  const auto blocks = cut_structure(g).blocks;
  if (std::find(blocks.begin(), blocks.end(), sorted) == blocks.end()) {
    throw InvalidArgumentError("edge set is not a block of this graph");
  }
  const VertexSet members = block_vertices(sorted);
  bool complete = true;
  for_each_vertex(members, [&](int v) {
    if ((g.neighbors(v) & members) != (members & ~singleton(v))) complete = false;
  });
  return complete;
}

}  // namespace rdd
