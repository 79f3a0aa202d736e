#include "rdd/metrics.hpp"

#include <algorithm>
#include <array>

namespace rdd {

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), dist_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

std::size_t DistanceMatrix::index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidVertexError("distance query out of range");
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
}

DistanceMatrix bfs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dist(n);
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    dist.set(s, s, 0);
    while (head < tail) {
      const int x = queue[head++];
      const std::uint8_t dx = dist.at(s, x);
      for_each_vertex(g.neighbors(x), [&](int y) {
        if (!dist.reachable(s, y)) {
          dist.set(s, y, static_cast<std::uint8_t>(dx + 1));
          queue[tail++] = y;
        }
      });
    }
  }
  return dist;
}

Rational reciprocal_transmission(const Graph& g, int u, const DistanceMatrix& dist) {
  if (u < 0 || u >= g.order()) throw InvalidVertexError("vertex " + std::to_string(u) + " out of range");
  if (dist.order() != g.order()) throw InvalidArgumentError("distance matrix does not match graph");
  std::array<std::int64_t, kMaxVertices> at_distance{};
  int farthest = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (v == u || !dist.reachable(u, v)) continue;
    const int d = dist.at(u, v);
    ++at_distance[static_cast<std::size_t>(d)];
    farthest = std::max(farthest, d);
  }
  Rational sum;
  for (int d = 1; d <= farthest; ++d) {
    if (at_distance[static_cast<std::size_t>(d)] != 0) sum += Rational(at_distance[static_cast<std::size_t>(d)], d);
  }
  return sum;
}

Rational rdd(const Graph& g) { return rdd(kernels::level_profile(g)); }

Rational rdd(const kernels::LevelProfile& profile) {
  // Ordered pairs: sum of deg(u) over ordered (u, v) equals the sum of
  // deg(u) + deg(v) over unordered pairs.
  Rational sum;
  for (int d = 1; d <= profile.max_level; ++d) {
    sum += Rational(static_cast<Int128>(profile.degree_weighted[static_cast<std::size_t>(d)]), d);
  }
  return sum;
}

Rational rdd_via_transmission(const Graph& g) { return rdd_via_transmission(g, bfs_distances(g)); }

Rational rdd_via_transmission(const Graph& g, const DistanceMatrix& dist) {
  Rational sum;
  for (int u = 0; u < g.order(); ++u) {
    const int deg = g.degree(u);
    if (deg == 0) continue;
    sum += Rational(deg) * reciprocal_transmission(g, u, dist);
  }
  return sum;
}

Int128 scaled_rdd_via_transmission(const Graph& g, const DistanceMatrix& dist, Int128 scale) {
  if (dist.order() != g.order()) throw InvalidArgumentError("distance matrix does not match graph");
  // share[d] = scale / d, or -1 when d does not divide scale.
  std::array<Int128, kMaxVertices> share{};
  for (int d = 1; d < g.order(); ++d) share[static_cast<std::size_t>(d)] = scale % d == 0 ? scale / d : -1;
  Int128 sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    const int deg = g.degree(u);
    if (deg == 0) continue;
    Int128 transmission = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (v == u || !dist.reachable(u, v)) continue;
      const Int128 part = share[dist.at(u, v)];
      if (part < 0) throw InvalidArgumentError("scale is not a multiple of every distance");
      transmission = checked_add(transmission, part);
    }
    sum = checked_add(sum, checked_mul(transmission, deg));
  }
  return sum;
}

Int128 scaled_rdd(const kernels::LevelProfile& profile, Int128 scale) {
  Int128 sum = 0;
  for (int d = 1; d <= profile.max_level; ++d) {
    if (scale % d != 0) throw InvalidArgumentError("scale is not a multiple of every distance");
    sum = checked_add(sum, checked_mul(static_cast<Int128>(profile.degree_weighted[static_cast<std::size_t>(d)]),
                                       scale / d));
  }
  return sum;
}

namespace {

void require_connected(const kernels::LevelProfile& profile, const char* index) {
  if (profile.unreachable_pairs != 0) {
    throw DomainError(std::string(index) + " is undefined for a disconnected graph");
  }
}

}  // namespace

Rational wiener(const Graph& g) { return wiener(kernels::level_profile(g)); }

Rational wiener(const kernels::LevelProfile& profile) {
  require_connected(profile, "Wiener index");
  Int128 ordered = 0;
  for (int d = 1; d <= profile.max_level; ++d) {
    ordered = checked_add(ordered, checked_mul(d, static_cast<Int128>(profile.pairs[static_cast<std::size_t>(d)])));
  }
  return Rational(ordered, 2);
}

Rational harary(const Graph& g) { return harary(kernels::level_profile(g)); }

Rational harary(const kernels::LevelProfile& profile) {
  Rational sum;
  for (int d = 1; d <= profile.max_level; ++d) {
    sum += Rational(static_cast<Int128>(profile.pairs[static_cast<std::size_t>(d)]), 2 * d);
  }
  return sum;
}

Rational degree_distance(const Graph& g) { return degree_distance(kernels::level_profile(g)); }

Rational degree_distance(const kernels::LevelProfile& profile) {
  require_connected(profile, "degree distance");
  Int128 sum = 0;
  for (int d = 1; d <= profile.max_level; ++d) {
    sum = checked_add(sum, checked_mul(d, static_cast<Int128>(profile.degree_weighted[static_cast<std::size_t>(d)])));
  }
  return Rational(sum);
}

IndexReport index_report(const Graph& g) {
  const auto profile = kernels::level_profile(g);
  IndexReport r;
  r.order = g.order();
  r.edge_count = g.size();
  r.rdd = rdd(profile);
  r.harary = harary(profile);
  if (profile.unreachable_pairs == 0) {
    r.wiener = wiener(profile);
    r.degree_distance = degree_distance(profile);
  }
  return r;
}

}  // namespace rdd
