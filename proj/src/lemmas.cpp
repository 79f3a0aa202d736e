#include "rdd/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rdd/codec.hpp"
#include "rdd/metrics.hpp"

namespace rdd {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Edge list on locally numbered vertices, assembled before relabeling.
struct Draft {
  int n = 0;
  std::vector<Edge> edges;

  int add_vertex() { return n++; }
  void connect(int a, int b) { edges.push_back(make_edge(a, b)); }

  // Random connected graph on fresh vertices plus `root` (if >= 0): a random
  // recursive tree followed by extra edges with probability p.
  std::vector<int> grow(Rng& rng, int root, int fresh, double p) {
    std::vector<int> vs;
    if (root >= 0) vs.push_back(root);
    for (int i = 0; i < fresh; ++i) {
      const int v = add_vertex();
      if (!vs.empty()) connect(v, vs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vs.size()) - 1))]);
      vs.push_back(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (coin(rng, p)) connect(vs[i], vs[j]);
      }
    }
    return vs;
  }

  Graph graph() const {
    GraphBuilder b(n);
    for (const Edge& e : edges) b.connect(e.u, e.v);
    return b.build();
  }
};

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void map_all(std::vector<int>& vs, const std::vector<int>& perm) {
  for (int& v : vs) v = perm[static_cast<std::size_t>(v)];
}

void map_one(int& v, const std::vector<int>& perm) { v = perm[static_cast<std::size_t>(v)]; }

GraftInstance relabeled(Rng& rng, Lemma lemma, const Graph& g, Roles roles) {
  const auto perm = random_permutation(rng, g.order());
  std::visit(
      [&](auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, L31Roles>) {
          map_one(r.u, perm), map_one(r.v, perm);
          map_all(r.g1, perm), map_all(r.g2, perm), map_all(r.x, perm), map_all(r.z, perm);
        } else if constexpr (std::is_same_v<T, C33Roles>) {
          map_one(r.u, perm), map_one(r.v, perm);
          map_all(r.path_u, perm), map_all(r.path_v, perm);
        } else if constexpr (std::is_same_v<T, L34Roles>) {
          map_one(r.u, perm), map_one(r.v1, perm), map_one(r.w1, perm);
          map_all(r.kp, perm), map_all(r.kq, perm), map_all(r.path_w, perm), map_all(r.path_v, perm);
        } else if constexpr (std::is_same_v<T, L41Roles>) {
          map_one(r.w1, perm), map_one(r.w2, perm);
        } else {
          map_one(r.u, perm), map_one(r.v, perm);
          map_all(r.g0, perm), map_all(r.g1, perm), map_all(r.g2, perm);
        }
      },
      roles);
  return {lemma, relabel(g, perm), std::move(roles), false};
}

// u, v adjacent twins over W = {w_1..w_k}, plus extra vertices hanging off W.
// Returns the vertex list of the piece.
std::vector<int> twin_core(Rng& rng, Draft& d, int u, int v, int k, int extras) {
  d.connect(u, v);
  std::vector<int> members{u, v};
  std::vector<int> ws;
  for (int i = 0; i < k; ++i) {
    const int w = d.add_vertex();
    d.connect(u, w);
    d.connect(v, w);
    ws.push_back(w);
    members.push_back(w);
  }
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      if (coin(rng, 0.5)) d.connect(ws[i], ws[j]);
    }
  }
  std::vector<int> hosts = ws;
  for (int i = 0; i < extras; ++i) {
    const int e = d.add_vertex();
    d.connect(e, hosts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hosts.size()) - 1))]);
    for (int h : hosts) {
      if (coin(rng, 0.3)) d.connect(e, h);
    }
    hosts.push_back(e);
    members.push_back(e);
  }
  // The random extra edges above can repeat a tree edge; Draft::graph() dedups.
  return members;
}

std::vector<int> attach_path(Draft& d, int anchor, int length) {
  std::vector<int> path;
  int prev = anchor;
  for (int i = 0; i < length; ++i) {
    const int p = d.add_vertex();
    d.connect(prev, p);
    path.push_back(p);
    prev = p;
  }
  return path;
}

std::optional<GraftInstance> draw_l31(Rng& rng) {
  const int k = uniform(rng, 1, 3);
  const int s = uniform(rng, 1, 3);
  const int t = uniform(rng, s + 2, s + 3);
  Draft d;
  L31Roles r;
  r.u = d.add_vertex();
  r.v = d.add_vertex();
  r.g1 = twin_core(rng, d, r.u, r.v, k, uniform(rng, 0, 2));
  r.x = {r.u};
  const auto xs = attach_path(d, r.u, t - 1);
  r.x.insert(r.x.end(), xs.begin(), xs.end());
  r.g2 = r.x;
  const int extras = uniform(rng, 0, 2);
  for (int i = 0; i < extras; ++i) {
    const int e = d.add_vertex();
    d.connect(e, r.g2[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r.g2.size()) - 1))]);
    for (int h : r.g2) {
      if (coin(rng, 0.25)) d.connect(e, h);
    }
    r.g2.push_back(e);
  }
  r.z = {r.v};
  const auto zs = attach_path(d, r.v, s - 1);
  r.z.insert(r.z.end(), zs.begin(), zs.end());
  if (d.n > kMaxInstanceOrder) return std::nullopt;
  return relabeled(rng, Lemma::kL31, d.graph(), r);
}

std::optional<GraftInstance> draw_c33(Rng& rng) {
  const int k = uniform(rng, 1, 3);
  const int s = uniform(rng, 1, 3);
  const int t = uniform(rng, s + 2, s + 4);
  Draft d;
  C33Roles r;
  r.u = d.add_vertex();
  r.v = d.add_vertex();
  twin_core(rng, d, r.u, r.v, k, uniform(rng, 0, 3));
  r.path_u = attach_path(d, r.u, t);
  r.path_v = attach_path(d, r.v, s);
  if (d.n > kMaxInstanceOrder) return std::nullopt;
  return relabeled(rng, Lemma::kC33, d.graph(), r);
}

std::optional<GraftInstance> draw_l34(Rng& rng) {
  const int p = uniform(rng, 3, 5);
  const int q = uniform(rng, 3, 5);
  const int s = uniform(rng, 1, 3);
  const int t = uniform(rng, s, s + 2);
  Draft d;
  L34Roles r;
  r.u = d.add_vertex();
  r.kp = {r.u};
  r.kq = {r.u};
  for (int i = 1; i < p; ++i) r.kp.push_back(d.add_vertex());
  for (int i = 1; i < q; ++i) r.kq.push_back(d.add_vertex());
  for (const auto* clique : {&r.kp, &r.kq}) {
    for (std::size_t i = 0; i < clique->size(); ++i) {
      for (std::size_t j = i + 1; j < clique->size(); ++j) d.connect((*clique)[i], (*clique)[j]);
    }
  }
  r.w1 = r.kp[1];
  r.v1 = r.kq[1];
  r.path_w = attach_path(d, r.w1, t);
  r.path_v = attach_path(d, r.v1, s);
  std::vector<int> hosts(r.kp.begin() + 2, r.kp.end());
  hosts.insert(hosts.end(), r.kq.begin() + 2, r.kq.end());
  for (int h : hosts) {
    if (coin(rng, 0.3)) d.grow(rng, h, uniform(rng, 1, 2), 0.5);
  }
  if (d.n > kMaxInstanceOrder) return std::nullopt;
  return relabeled(rng, Lemma::kL34, d.graph(), r);
}

std::optional<GraftInstance> draw_l41(Rng& rng) {
  Draft d;
  const auto a = d.grow(rng, -1, uniform(rng, 2, 6), 0.4);
  const auto b = d.grow(rng, -1, uniform(rng, 2, 6), 0.4);
  L41Roles r;
  r.w1 = a[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(a.size()) - 1))];
  r.w2 = b[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(b.size()) - 1))];
  d.connect(r.w1, r.w2);
  return relabeled(rng, Lemma::kL41, d.graph(), r);
}

std::optional<GraftInstance> draw_l42(Rng& rng) {
  Draft d;
  L42Roles r;
  const int m = uniform(rng, 2, 6);
  // G0: random connected graph containing u, then v as a twin of u.
  r.g0 = d.grow(rng, -1, m - 1, 0.4);
  r.u = r.g0[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(r.g0.size()) - 1))];
  r.v = d.add_vertex();
  {
    const Graph partial = d.graph();
    for_each_vertex(partial.neighbors(r.u), [&](int x) { d.connect(r.v, x); });
    if (partial.degree(r.u) == 0 || coin(rng, 0.5)) d.connect(r.u, r.v);
  }
  r.g0.push_back(r.v);
  r.g1 = d.grow(rng, r.u, uniform(rng, 1, 3), 0.5);
  r.g2 = d.grow(rng, r.v, uniform(rng, 1, 3), 0.5);
  if (d.n > kMaxInstanceOrder) return std::nullopt;
  return relabeled(rng, Lemma::kL42, d.graph(), r);
}

}  // namespace

std::vector<GraftInstance> random_lemma_instances(Lemma lemma, int trials, std::uint64_t seed) {
  if (trials < 1) throw RangeError("trials must be at least 1");
  if (lemma == Lemma::kL21) throw InvalidArgumentError("l21 has no graft instances; use check_lemma");
  Rng rng(seed);
  std::vector<GraftInstance> out;
  out.reserve(static_cast<std::size_t>(trials));
  while (static_cast<int>(out.size()) < trials) {
    std::optional<GraftInstance> draw;
    switch (lemma) {
      case Lemma::kL31:
        draw = draw_l31(rng);
        break;
      case Lemma::kC33:
        draw = draw_c33(rng);
        break;
      case Lemma::kL34:
        draw = draw_l34(rng);
        break;
      case Lemma::kL41:
        draw = draw_l41(rng);
        break;
      default:
        draw = draw_l42(rng);
        break;
    }
    if (!draw) continue;
    auto checked = validate_instance(std::move(*draw));
    if (checked.ok()) out.push_back(std::move(checked.instance));
  }
  return out;
}

namespace {

std::string join(const std::vector<int>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

class GapTracker {
 public:
  explicit GapTracker(LemmaReport& report) : report_(report) {}

  void compare(const Graph& before, const Graph& after, const std::string& context) {
    const Rational lo = identity_checked(before);
    const Rational hi = identity_checked(after);
    const Rational gap = hi - lo;
    ++report_.comparisons;
    if (!report_.min_gap || gap < *report_.min_gap) report_.min_gap = gap;
    if (gap <= Rational(0)) {
      report_.failures.push_back(context + " before=" + write_graph6(before) + " after=" + write_graph6(after) +
                                 " gap=" + gap.to_string());
    }
  }

 private:
  Rational identity_checked(const Graph& g) {
    const Rational value = rdd(g);
    if (value != rdd_via_transmission(g)) ++report_.transmission_mismatches;
    return value;
  }

  LemmaReport& report_;
};

Graph random_graph(Rng& rng, int n, double p) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng, p)) b.connect(u, v);
    }
  }
  return b.build();
}

}  // namespace

std::string describe_instance(const GraftInstance& inst) {
  std::string out = std::string(lemma_name(inst.lemma)) + " g6=" + write_graph6(inst.graph);
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, L31Roles>) {
          out += " u=" + std::to_string(r.u) + " v=" + std::to_string(r.v) + " g1=" + join(r.g1) +
                 " g2=" + join(r.g2) + " x=" + join(r.x) + " z=" + join(r.z);
        } else if constexpr (std::is_same_v<T, C33Roles>) {
          out += " u=" + std::to_string(r.u) + " v=" + std::to_string(r.v) + " path_u=" + join(r.path_u) +
                 " path_v=" + join(r.path_v);
        } else if constexpr (std::is_same_v<T, L34Roles>) {
          out += " u=" + std::to_string(r.u) + " v1=" + std::to_string(r.v1) + " w1=" + std::to_string(r.w1) +
                 " kp=" + join(r.kp) + " kq=" + join(r.kq) + " path_w=" + join(r.path_w) +
                 " path_v=" + join(r.path_v);
        } else if constexpr (std::is_same_v<T, L41Roles>) {
          out += " w1=" + std::to_string(r.w1) + " w2=" + std::to_string(r.w2);
        } else {
          out += " u=" + std::to_string(r.u) + " v=" + std::to_string(r.v) + " g0=" + join(r.g0) +
                 " g1=" + join(r.g1) + " g2=" + join(r.g2);
        }
      },
      inst.roles);
  return out;
}

LemmaReport check_lemma(Lemma lemma, int trials, std::uint64_t seed) {
  if (trials < 1) throw RangeError("trials must be at least 1");
  LemmaReport report;
  report.lemma = lemma;
  report.trials = trials;
  report.seed = seed;
  GapTracker tracker(report);

  if (lemma == Lemma::kL21) {
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      const int n = uniform(rng, 2, 10);
      const double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
      const Graph g = random_graph(rng, n, p);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const std::string context = "trial " + std::to_string(trial) + " pair " + std::to_string(u) + "-" + std::to_string(v);
          if (g.has_edge(u, v)) {
            tracker.compare(remove_edge(g, {u, v}).graph, g, context);
          } else {
            tracker.compare(g, add_edge(g, {u, v}).graph, context);
          }
        }
      }
    }
    return report;
  }

  const auto instances = random_lemma_instances(lemma, trials, seed);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const std::string context = "trial " + std::to_string(i) + " " + describe_instance(inst);
    switch (lemma) {
      case Lemma::kL31:
        tracker.compare(inst.graph, graft_l31(inst).graph, context);
        break;
      case Lemma::kC33:
        tracker.compare(inst.graph, shift_pendant_paths_c33(inst).graph, context);
        break;
      case Lemma::kL34:
        tracker.compare(inst.graph, graft_l34(inst).graph, context);
        break;
      case Lemma::kL41:
        tracker.compare(inst.graph, contract_cut_edge_l41(inst).graph, context);
        break;
      default: {
        const auto merged = merge_blocks_l42(inst);
        tracker.compare(inst.graph, merged.h1, context + " H1");
        tracker.compare(inst.graph, merged.h2, context + " H2");
        break;
      }
    }
  }
  return report;
}

}  // namespace rdd
