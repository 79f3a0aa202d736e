#pragma once

// Distance-degree indices: reciprocal degree distance (RDD), Wiener, Harary
// and degree distance. Pairs in different components contribute 0 to the
// reciprocal indices; Wiener and degree distance reject disconnected input.

#include <cstdint>
#include <optional>
#include <vector>

#include "rdd/graph.hpp"
#include "rdd/kernels.hpp"
#include "rdd/rational.hpp"

namespace rdd {

class DistanceMatrix {
 public:
  static constexpr std::uint8_t kUnreachable = 0xFF;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n);

  int order() const noexcept { return n_; }
  std::uint8_t at(int u, int v) const { return dist_[index(u, v)]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
  void set(int u, int v, std::uint8_t d) { dist_[index(u, v)] = d; }

 private:
  std::size_t index(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> dist_;
};

// Breadth-first search from every vertex.
DistanceMatrix bfs_distances(const Graph& g);

// D(u) = sum over reachable v != u of 1 / dist(u, v).
Rational reciprocal_transmission(const Graph& g, int u, const DistanceMatrix& dist);

// Pairwise definition evaluated from the level profile.
Rational rdd(const Graph& g);
Rational rdd(const kernels::LevelProfile& profile);

// Sum over u of deg(u) * D(u), from the distance matrix. Must equal rdd(g).
Rational rdd_via_transmission(const Graph& g);
Rational rdd_via_transmission(const Graph& g, const DistanceMatrix& dist);

// rdd(g) * scale as an integer, where scale is a multiple of lcm(1..n-1).
// Used for exact comparisons in tight loops.
Int128 scaled_rdd(const kernels::LevelProfile& profile, Int128 scale);
// rdd_via_transmission(g, dist) * scale, in integers.
Int128 scaled_rdd_via_transmission(const Graph& g, const DistanceMatrix& dist, Int128 scale);

Rational wiener(const Graph& g);
Rational wiener(const kernels::LevelProfile& profile);
Rational harary(const Graph& g);
Rational harary(const kernels::LevelProfile& profile);
Rational degree_distance(const Graph& g);
Rational degree_distance(const kernels::LevelProfile& profile);

struct IndexReport {
  int order = 0;
  std::size_t edge_count = 0;
  Rational rdd;
  Rational harary;
  // Absent for disconnected graphs.
  std::optional<Rational> wiener;
  std::optional<Rational> degree_distance;
};

// All four indices from one shared level profile.
IndexReport index_report(const Graph& g);

}  // namespace rdd
