#include "rdd/kernels.hpp"

namespace rdd::kernels {

LevelProfile level_profile_scalar(const Graph& g) {
  LevelProfile p;
  const int n = g.order();
  p.order = n;
  const auto rows = g.rows();
  for (int source = 0; source < n; ++source) {
    const auto deg = static_cast<std::uint64_t>(set_size(rows[static_cast<std::size_t>(source)]));
    VertexSet seen = singleton(source);
    VertexSet frontier = seen;
    for (int d = 1;; ++d) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= rows[static_cast<std::size_t>(v)]; });
      frontier = next & ~seen;
      if (frontier == 0) break;
      seen |= frontier;
      const auto count = static_cast<std::uint64_t>(set_size(frontier));
      p.pairs[static_cast<std::size_t>(d)] += count;
      p.degree_weighted[static_cast<std::size_t>(d)] += deg * count;
      if (d > p.max_level) p.max_level = d;
    }
    p.unreachable_pairs += static_cast<std::uint64_t>(n - set_size(seen));
  }
  return p;
}

}  // namespace rdd::kernels
