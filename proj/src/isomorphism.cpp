#include "rdd/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "rdd/metrics.hpp"

namespace rdd {

namespace {

using Colors = std::array<int, kMaxVertices>;
using Signature = std::vector<int>;

std::vector<Signature> distance_signatures(const Graph& g) {
  const int n = g.order();
  const auto dist = bfs_distances(g);
  std::vector<Signature> out(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    Signature s(static_cast<std::size_t>(n) + 1, 0);
    s[0] = g.degree(u);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const int d = dist.reachable(u, v) ? dist.at(u, v) : n;
      ++s[static_cast<std::size_t>(d)];
    }
    out[static_cast<std::size_t>(u)] = std::move(s);
  }
  return out;
}

// Assigns shared colour ids to the signatures of both graphs. Returns false
// when the colour histograms differ.
bool assign(const std::vector<Signature>& sg, const std::vector<Signature>& sh, Colors& cg, Colors& ch, int& classes) {
  std::map<Signature, int> ids;
  for (const auto& s : sg) ids.emplace(s, 0);
  for (const auto& s : sh) ids.emplace(s, 0);
  int next = 0;
  for (auto& [sig, id] : ids) id = next++;
  classes = next;
  std::vector<int> hist(static_cast<std::size_t>(next), 0);
  for (std::size_t i = 0; i < sg.size(); ++i) {
    cg[i] = ids[sg[i]];
    ++hist[static_cast<std::size_t>(cg[i])];
  }
  for (std::size_t i = 0; i < sh.size(); ++i) {
    ch[i] = ids[sh[i]];
    --hist[static_cast<std::size_t>(ch[i])];
  }
  return std::all_of(hist.begin(), hist.end(), [](int c) { return c == 0; });
}

std::vector<Signature> refine(const Graph& g, const Colors& c) {
  std::vector<Signature> out(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u) {
    Signature s{c[static_cast<std::size_t>(u)]};
    for_each_vertex(g.neighbors(u), [&](int v) { s.push_back(c[static_cast<std::size_t>(v)]); });
    std::sort(s.begin() + 1, s.end());
    out[static_cast<std::size_t>(u)] = std::move(s);
  }
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, const Colors& cg, const Colors& ch) : g_(g), h_(h), cg_(cg), ch_(ch) {
    map_.fill(-1);
    order_ = search_order();
  }

  bool run() { return extend(0); }

  std::vector<int> mapping() const {
    return {map_.begin(), map_.begin() + g_.order()};
  }

 private:
  // Rare colours first, then prefer vertices adjacent to those already placed.
  std::vector<int> search_order() const {
    const int n = g_.order();
    std::vector<int> class_size(static_cast<std::size_t>(kMaxVertices) * 2, 0);
    std::map<int, int> size_of;
    for (int u = 0; u < n; ++u) ++size_of[cg_[static_cast<std::size_t>(u)]];
    std::vector<int> order;
    VertexSet placed = 0;
    while (static_cast<int>(order.size()) < n) {
      int best = -1;
      auto key = [&](int u) {
        const int touching = set_size(g_.neighbors(u) & placed);
        return std::make_tuple(touching > 0 ? 0 : 1, size_of[cg_[static_cast<std::size_t>(u)]], -touching, u);
      };
      for (int u = 0; u < n; ++u) {
        if (contains(placed, u)) continue;
        if (best < 0 || key(u) < key(best)) best = u;
      }
      order.push_back(best);
      placed |= singleton(best);
    }
    return order;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    VertexSet image_nbrs = 0;
    for_each_vertex(g_.neighbors(v) & mapped_g_, [&](int a) { image_nbrs |= singleton(map_[static_cast<std::size_t>(a)]); });
    for (int cand = 0; cand < h_.order(); ++cand) {
      if (contains(used_h_, cand) || ch_[static_cast<std::size_t>(cand)] != cg_[static_cast<std::size_t>(v)]) continue;
      if ((h_.neighbors(cand) & used_h_) != image_nbrs) continue;
      map_[static_cast<std::size_t>(v)] = cand;
      mapped_g_ |= singleton(v);
      used_h_ |= singleton(cand);
      if (extend(depth + 1)) return true;
      mapped_g_ &= ~singleton(v);
      used_h_ &= ~singleton(cand);
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const Colors& cg_;
  const Colors& ch_;
  std::array<int, kMaxVertices> map_{};
  std::vector<int> order_;
  VertexSet mapped_g_ = 0;
  VertexSet used_h_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  Colors cg{};
  Colors ch{};
  int classes = 0;
  if (!assign(distance_signatures(g), distance_signatures(h), cg, ch, classes)) return std::nullopt;
  while (true) {
    int refined = 0;
    Colors ng{};
    Colors nh{};
    if (!assign(refine(g, cg), refine(h, ch), ng, nh, refined)) return std::nullopt;
    cg = ng;
    ch = nh;
    if (refined == classes) break;
    classes = refined;
  }
  Matcher m(g, h, cg, ch);
  if (!m.run()) return std::nullopt;
  return m.mapping();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace rdd
