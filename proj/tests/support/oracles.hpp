#pragma once

// Definitional reference implementations used by the unit and acceptance
// tests. Deliberately naive: Floyd-Warshall distances, pairwise index sums,
// union-find connectivity, delete-and-recount cut structure.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "rdd/codec.hpp"
#include "rdd/graph.hpp"
#include "rdd/rational.hpp"

namespace rdd {
inline void PrintTo(const Graph& g, std::ostream* os) { *os << write_edge_list(g); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.to_string(); }
}  // namespace rdd

namespace oracle {

inline constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const rdd::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) d[u][v] = 1;
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    }
  }
  return d;
}

inline int degree_of(const rdd::Graph& g, int u) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) c += g.has_edge(u, v) ? 1 : 0;
  return c;
}

inline rdd::Rational rdd_index(const rdd::Graph& g) {
  const auto d = floyd_warshall(g);
  rdd::Rational sum;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (d[u][v] < kInf) sum += rdd::Rational(degree_of(g, u) + degree_of(g, v), d[u][v]);
    }
  }
  return sum;
}

inline rdd::Rational harary_index(const rdd::Graph& g) {
  const auto d = floyd_warshall(g);
  rdd::Rational sum;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (d[u][v] < kInf) sum += rdd::Rational(1, d[u][v]);
    }
  }
  return sum;
}

// Assumes g connected.
inline rdd::Rational wiener_index(const rdd::Graph& g) {
  const auto d = floyd_warshall(g);
  rdd::Int128 sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) sum += d[u][v];
  }
  return sum;
}

inline rdd::Rational dd_index(const rdd::Graph& g) {
  const auto d = floyd_warshall(g);
  rdd::Int128 sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) sum += (degree_of(g, u) + degree_of(g, v)) * d[u][v];
  }
  return sum;
}

// Number of components of g restricted to `alive` vertices, by union-find
// over edges with `skip_u`-`skip_v` removed.
inline int count_components(const rdd::Graph& g, std::uint64_t alive, int skip_u = -1, int skip_v = -1) {
  const int n = g.order();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!((alive >> u) & 1U) || !((alive >> v) & 1U) || !g.has_edge(u, v)) continue;
      if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) continue;
      parent[find(u)] = find(v);
    }
  }
  int c = 0;
  for (int u = 0; u < n; ++u) c += ((alive >> u) & 1U) && find(u) == u ? 1 : 0;
  return c;
}

inline std::uint64_t all_of(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline bool connected(const rdd::Graph& g) { return g.order() == 0 || count_components(g, all_of(g.order())) == 1; }

inline std::vector<int> cut_vertices(const rdd::Graph& g) {
  const auto all = all_of(g.order());
  const int base = count_components(g, all);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (count_components(g, all & ~(std::uint64_t{1} << v)) > base) out.push_back(v);
  }
  return out;
}

inline std::vector<rdd::Edge> cut_edges(const rdd::Graph& g) {
  const auto all = all_of(g.order());
  const int base = count_components(g, all);
  std::vector<rdd::Edge> out;
  for (const auto& e : g.edges()) {
    if (count_components(g, all, e.u, e.v) > base) out.push_back(e);
  }
  return out;
}

// A vertex set S with |S| >= 2 spans a block iff G[S] is connected, has no
// cut vertex, and no proper superset has the same property. Each block is
// returned as its sorted edge list; the list of blocks is sorted.
inline std::vector<std::vector<rdd::Edge>> blocks(const rdd::Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> biconnected;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) < 2) continue;
    if (count_components(g, s) != 1) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (((s >> v) & 1U) && __builtin_popcountll(s) > 2 &&
          count_components(g, s & ~(std::uint64_t{1} << v)) > 1) {
        ok = false;
      }
    }
    if (ok) biconnected.push_back(s);
  }
  std::vector<std::vector<rdd::Edge>> out;
  for (auto s : biconnected) {
    bool maximal = true;
    for (auto t : biconnected) {
      if (t != s && (t & s) == s) maximal = false;
    }
    if (!maximal) continue;
    std::vector<rdd::Edge> edges;
    for (const auto& e : g.edges()) {
      if (((s >> e.u) & 1U) && ((s >> e.v) & 1U)) edges.push_back(e);
    }
    out.push_back(edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline rdd::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<rdd::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return rdd::Graph::from_edges(n, edges);
}

inline rdd::Graph random_relabel(const rdd::Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return rdd::relabel(g, perm);
}

// Connected labeled graphs on n vertices by filtering every edge subset.
inline std::uint64_t connected_count(int n) {
  std::vector<rdd::Edge> pairs;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) pairs.push_back({u, v});
  }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<rdd::Edge> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
    }
    if (connected(rdd::Graph::from_edges(n, chosen))) ++count;
  }
  return count;
}

}  // namespace oracle
