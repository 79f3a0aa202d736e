#pragma once

#include <vector>

#include "rdd/graph.hpp"

namespace rdd {

struct CutStructure {
  VertexSet cut_vertices = 0;
  std::vector<Edge> cut_edges;  // ascending
  // Each block is an ascending edge list; blocks are ordered by first edge.
  std::vector<std::vector<Edge>> blocks;
};

// Articulation points, bridges and blocks from one lowpoint DFS per component.
CutStructure cut_structure(const Graph& g);

struct CutCounts {
  int cut_vertices = 0;
  int cut_edges = 0;
};

// Same DFS without block bookkeeping.
CutCounts cut_counts(const Graph& g);
int count_cut_vertices(const Graph& g);
int count_cut_edges(const Graph& g);

// A path hanging at `anchor` (degree >= 3). `vertices` excludes the anchor and
// runs outward; the last one has degree 1, the others degree 2.
struct PendantPath {
  int anchor = 0;
  std::vector<int> vertices;

  friend bool operator==(const PendantPath&, const PendantPath&) = default;
};

// All maximal pendant paths, ordered by (anchor, first vertex).
std::vector<PendantPath> pendant_paths(const Graph& g);

VertexSet block_vertices(std::span<const Edge> block);

// Throws InvalidArgumentError if `block` is not one of cut_structure(g).blocks.
bool is_block_complete(const Graph& g, std::span<const Edge> block);

}  // namespace rdd
