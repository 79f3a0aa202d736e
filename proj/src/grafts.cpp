#include <algorithm>
#include <numeric>

#include "rdd/extremal.hpp"
#include "rdd/structure.hpp"

namespace rdd {

namespace {

class HypothesisCheck {
 public:
  explicit HypothesisCheck(const Graph& g) : g_(g) {}

  void require(bool condition, const char* name) {
    if (!condition && std::find(violations_.begin(), violations_.end(), name) == violations_.end()) {
      violations_.emplace_back(name);
    }
  }

  bool vertex(int v) {
    const bool ok = v >= 0 && v < g_.order();
    require(ok, "vertex range");
    return ok;
  }

  // Converts a role list to a set; reports out-of-range or repeated vertices.
  bool vertex_set(std::span<const int> list, VertexSet& out) {
    out = 0;
    for (int v : list) {
      if (!vertex(v)) return false;
      if (contains(out, v)) {
        require(false, "distinct role vertices");
        return false;
      }
      out |= singleton(v);
    }
    return true;
  }

  bool connected_within(VertexSet s) const {
    return s != 0 && reachable_from(g_, std::countr_zero(s), s) == s;
  }

  bool clique(VertexSet s) const {
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && (g_.neighbors(v) & s) == (s & ~singleton(v)); });
    return ok;
  }

  // Path hanging at anchor: each listed vertex is adjacent to exactly its
  // predecessor (the anchor for the first) and its successor.
  bool pendant_path(int anchor, std::span<const int> path) const {
    if (path.empty()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      VertexSet expected = singleton(i == 0 ? anchor : path[i - 1]);
      if (i + 1 < path.size()) expected |= singleton(path[i + 1]);
      if (g_.neighbors(path[i]) != expected) return false;
    }
    return true;
  }

  // Every edge lies inside one of the parts.
  bool edges_inside(std::initializer_list<VertexSet> parts) const {
    for (const Edge& e : g_.edges()) {
      const VertexSet ends = singleton(e.u) | singleton(e.v);
      bool inside = false;
      for (VertexSet p : parts) inside = inside || (ends & p) == ends;
      if (!inside) return false;
    }
    return true;
  }

  std::vector<std::string> take() { return std::move(violations_); }
  bool clean() const { return violations_.empty(); }

 private:
  const Graph& g_;
  std::vector<std::string> violations_;
};

// Distance between a and b inside the subgraph induced by `within`, or -1.
int distance_within(const Graph& g, int a, int b, VertexSet within) {
  VertexSet seen = singleton(a);
  VertexSet frontier = seen;
  for (int d = 0; frontier != 0; ++d) {
    if (contains(frontier, b)) return d;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return -1;
}

void check_l31(const Graph& g, const L31Roles& r, HypothesisCheck& c) {
  VertexSet g1 = 0;
  VertexSet g2 = 0;
  VertexSet z = 0;
  VertexSet x = 0;
  if (!c.vertex(r.u) || !c.vertex(r.v) || !c.vertex_set(r.g1, g1) || !c.vertex_set(r.g2, g2) ||
      !c.vertex_set(r.z, z) || !c.vertex_set(r.x, x)) {
    return;
  }
  const int t = static_cast<int>(r.x.size());
  const int s = static_cast<int>(r.z.size());
  c.require(t >= 1 && r.x.front() == r.u, "x_1 = u");
  c.require(s >= 1 && r.z.front() == r.v, "z_1 = v");
  c.require(contains(g1, r.u) && contains(g1, r.v) && r.u != r.v, "u, v in G_1");
  c.require((x & ~g2) == 0, "x in G_2");
  c.require((g1 & g2) == singleton(r.u) && (g1 & z) == singleton(r.v) && (g2 & z) == 0 &&
                (g1 | g2 | z) == g.vertices(),
            "vertex partition");
  if (!c.clean()) return;

  c.require(c.edges_inside({g1, g2, z}), "no cross edges");
  c.require(c.connected_within(g1), "G_1 connected");
  c.require(c.connected_within(g2), "G_2 connected");
  c.require(g.has_edge(r.u, r.v), "uv edge");
  const VertexSet nu = g.neighbors(r.u) & g1 & ~singleton(r.v);
  const VertexSet nv = g.neighbors(r.v) & g1 & ~singleton(r.u);
  c.require(nu == nv, "neighborhood equality");
  c.require(nu != 0, "k >= 1");
  bool walk = true;
  for (int i = 0; i + 1 < t; ++i) walk = walk && g.has_edge(r.x[static_cast<std::size_t>(i)], r.x[static_cast<std::size_t>(i + 1)]);
  c.require(walk && distance_within(g, r.x.front(), r.x.back(), g2) == t - 1, "geodesic");
  bool path = (g.neighbors(r.v) & z) == (s > 1 ? singleton(r.z[1]) : 0);
  for (int i = 1; i < s; ++i) {
    VertexSet expected = singleton(r.z[static_cast<std::size_t>(i - 1)]);
    if (i + 1 < s) expected |= singleton(r.z[static_cast<std::size_t>(i + 1)]);
    path = path && g.neighbors(r.z[static_cast<std::size_t>(i)]) == expected;
  }
  c.require(path, "P_s path");
  c.require(t >= s + 2, "t >= s+2");
}

void check_c33(const Graph& g, const C33Roles& r, HypothesisCheck& c) {
  VertexSet pu = 0;
  VertexSet pv = 0;
  if (!c.vertex(r.u) || !c.vertex(r.v) || !c.vertex_set(r.path_u, pu) || !c.vertex_set(r.path_v, pv)) return;
  const VertexSet paths = pu | pv;
  c.require(r.u != r.v && (pu & pv) == 0 && !contains(paths, r.u) && !contains(paths, r.v), "distinct role vertices");
  if (!c.clean()) return;
  c.require(c.pendant_path(r.u, r.path_u), "pendant path at u");
  c.require(c.pendant_path(r.v, r.path_v), "pendant path at v");
  const VertexSet base = g.vertices() & ~paths;
  c.require(c.connected_within(base), "base connected");
  c.require(g.has_edge(r.u, r.v), "uv edge");
  const VertexSet nu = g.neighbors(r.u) & base & ~singleton(r.v);
  const VertexSet nv = g.neighbors(r.v) & base & ~singleton(r.u);
  c.require(nu == nv, "neighborhood equality");
  c.require(nu != 0, "neighborhood nonempty");
  const auto t = r.path_u.size();
  const auto s = r.path_v.size();
  c.require(t >= s + 2 && s + 2 >= 3, "t >= s+2 >= 3");
}

void check_l34(const Graph& g, const L34Roles& r, HypothesisCheck& c) {
  VertexSet kp = 0;
  VertexSet kq = 0;
  VertexSet pw = 0;
  VertexSet pv = 0;
  if (!c.vertex(r.u) || !c.vertex(r.v1) || !c.vertex(r.w1) || !c.vertex_set(r.kp, kp) ||
      !c.vertex_set(r.kq, kq) || !c.vertex_set(r.path_w, pw) || !c.vertex_set(r.path_v, pv)) {
    return;
  }
  const VertexSet core = kp | kq;
  c.require((kp & kq) == singleton(r.u), "cliques share exactly u");
  c.require(contains(kp, r.w1) && r.w1 != r.u, "w_1 in K_p");
  c.require(contains(kq, r.v1) && r.v1 != r.u, "v_1 in K_q");
  c.require((pw & pv) == 0 && ((pw | pv) & core) == 0, "distinct role vertices");
  if (!c.clean()) return;

  c.require(set_size(kp) >= 3, "p >= 3");
  c.require(set_size(kq) >= 3, "q >= 3");
  c.require(c.clique(kp), "K_p complete");
  c.require(c.clique(kq), "K_q complete");
  bool separated = true;
  for_each_vertex(kp & ~singleton(r.u), [&](int a) { separated = separated && (g.neighbors(a) & kq & ~singleton(r.u)) == 0; });
  c.require(separated, "cliques share exactly u");
  c.require(c.pendant_path(r.w1, r.path_w), "pendant path at w_1");
  c.require(c.pendant_path(r.v1, r.path_v), "pendant path at v_1");
  c.require(r.path_w.size() >= r.path_v.size() && !r.path_v.empty(), "t >= s >= 1");
  c.require(g.neighbors(r.u) == (core & ~singleton(r.u)), "nothing attached at u");
  const VertexSet w_expected = (kp & ~singleton(r.w1)) | (r.path_w.empty() ? 0 : singleton(r.path_w[0]));
  const VertexSet v_expected = (kq & ~singleton(r.v1)) | (r.path_v.empty() ? 0 : singleton(r.path_v[0]));
  c.require(g.neighbors(r.w1) == w_expected, "pendant path at w_1");
  c.require(g.neighbors(r.v1) == v_expected, "pendant path at v_1");

  // Whatever remains hangs off the other clique vertices, one attachment
  // point per connected piece.
  const VertexSet hosts = core & ~(singleton(r.u) | singleton(r.v1) | singleton(r.w1));
  VertexSet rest = g.vertices() & ~(core | pw | pv);
  bool attached = true;
  while (rest != 0) {
    const VertexSet piece = reachable_from(g, std::countr_zero(rest), rest);
    rest &= ~piece;
    VertexSet boundary = 0;
    for_each_vertex(piece, [&](int v) { boundary |= g.neighbors(v); });
    boundary &= ~piece;
    attached = attached && set_size(boundary) == 1 && (boundary & hosts) == boundary;
  }
  c.require(attached, "attachments");
}

void check_l41(const Graph& g, const L41Roles& r, HypothesisCheck& c) {
  if (!c.vertex(r.w1) || !c.vertex(r.w2)) return;
  c.require(r.w1 != r.w2 && g.has_edge(r.w1, r.w2), "w_1w_2 edge");
  if (!c.clean()) return;
  c.require(is_connected(g), "G connected");
  const Graph cut = remove_edge(g, make_edge(r.w1, r.w2)).graph;
  const VertexSet side1 = reachable_from(cut, r.w1, cut.vertices());
  c.require(!contains(side1, r.w2), "cut edge");
  if (!c.clean()) return;
  const VertexSet side2 = reachable_from(cut, r.w2, cut.vertices());
  c.require(set_size(side1) >= 2 && set_size(side2) >= 2, "G_i is nontrivial");
}

void check_l42(const Graph& g, const L42Roles& r, HypothesisCheck& c) {
  VertexSet g0 = 0;
  VertexSet g1 = 0;
  VertexSet g2 = 0;
  if (!c.vertex(r.u) || !c.vertex(r.v) || !c.vertex_set(r.g0, g0) || !c.vertex_set(r.g1, g1) ||
      !c.vertex_set(r.g2, g2)) {
    return;
  }
  c.require(r.u != r.v && contains(g0, r.u) && contains(g0, r.v), "u, v in G_0");
  c.require((g0 & g1) == singleton(r.u) && (g0 & g2) == singleton(r.v) && (g1 & g2) == 0 &&
                (g0 | g1 | g2) == g.vertices(),
            "vertex partition");
  if (!c.clean()) return;
  c.require(c.edges_inside({g0, g1, g2}), "no cross edges");
  c.require(c.connected_within(g0), "G_0 connected");
  c.require(c.connected_within(g1), "G_1 connected");
  c.require(c.connected_within(g2), "G_2 connected");
  c.require(set_size(g1) >= 2 && set_size(g2) >= 2, "G_i is nontrivial");
  const VertexSet nu = g.neighbors(r.u) & g0 & ~singleton(r.v);
  const VertexSet nv = g.neighbors(r.v) & g0 & ~singleton(r.u);
  c.require(nu == nv, "neighborhood equality");
}

void require_validated(const GraftInstance& inst, Lemma expected) {
  if (inst.lemma != expected || lemma_of(inst.roles) != expected) {
    throw InvalidArgumentError("instance is for " + std::string(lemma_name(inst.lemma)) + ", expected " +
                               std::string(lemma_name(expected)));
  }
  if (!inst.validated) throw PreconditionError({"instance not validated"});
}

std::vector<int> identity_map(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  std::iota(map.begin(), map.end(), 0);
  return map;
}

}  // namespace

ValidationResult validate_instance(GraftInstance instance) {
  HypothesisCheck check(instance.graph);
  if (lemma_of(instance.roles) != instance.lemma) {
    check.require(false, "roles match lemma");
  } else {
    std::visit(
        [&](const auto& roles) {
          using T = std::decay_t<decltype(roles)>;
          if constexpr (std::is_same_v<T, L31Roles>) check_l31(instance.graph, roles, check);
          if constexpr (std::is_same_v<T, C33Roles>) check_c33(instance.graph, roles, check);
          if constexpr (std::is_same_v<T, L34Roles>) check_l34(instance.graph, roles, check);
          if constexpr (std::is_same_v<T, L41Roles>) check_l41(instance.graph, roles, check);
          if constexpr (std::is_same_v<T, L42Roles>) check_l42(instance.graph, roles, check);
        },
        instance.roles);
  }
  ValidationResult result;
  result.violations = check.take();
  instance.validated = result.violations.empty();
  result.instance = std::move(instance);
  return result;
}

GraftResult graft_l31(const GraftInstance& inst) {
  require_validated(inst, Lemma::kL31);
  const auto& r = std::get<L31Roles>(inst.roles);
  const Graph& g = inst.graph;
  const VertexSet w = g.neighbors(r.u) & to_vertex_set(r.g1) & ~singleton(r.v);
  const int x2 = r.x[1];
  GraphBuilder b(g);
  for_each_vertex(w, [&](int wi) {
    b.disconnect(r.v, wi);
    b.connect(x2, wi);
  });
  return {b.build(), identity_map(g.order())};
}

GraftResult shift_pendant_paths_c33(const GraftInstance& inst) {
  require_validated(inst, Lemma::kC33);
  const auto& r = std::get<C33Roles>(inst.roles);
  const int tail = r.path_u.back();
  const int before = r.path_u[r.path_u.size() - 2];
  GraphBuilder b(inst.graph);
  b.disconnect(before, tail);
  b.connect(r.path_v.back(), tail);
  return {b.build(), identity_map(inst.graph.order())};
}

GraftResult shift_pendant_paths_c33(const Graph& g, int u, int v, int t, int s) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw PreconditionError({"vertex range"});
  const auto paths = pendant_paths(g);
  auto find = [&](int anchor, int length, int avoid) -> std::vector<int> {
    for (const auto& p : paths) {
      if (p.anchor == anchor && static_cast<int>(p.vertices.size()) == length && p.vertices.front() != avoid) {
        return p.vertices;
      }
    }
    return {};
  };
  const auto path_u = find(u, t, v);
  const auto path_v = find(v, s, u);
  std::vector<std::string> missing;
  if (path_u.empty()) missing.emplace_back("pendant path at u");
  if (path_v.empty()) missing.emplace_back("pendant path at v");
  if (!missing.empty()) throw PreconditionError(std::move(missing));

  auto validated = validate_instance({Lemma::kC33, g, C33Roles{u, v, path_u, path_v}, false});
  if (!validated.ok()) throw PreconditionError(validated.violations);
  return shift_pendant_paths_c33(validated.instance);
}

GraftResult graft_l34(const GraftInstance& inst) {
  require_validated(inst, Lemma::kL34);
  const auto& r = std::get<L34Roles>(inst.roles);
  GraphBuilder b(inst.graph);
  for (int y : r.kq) {
    if (y != r.v1 && y != r.u) b.disconnect(r.v1, y);
  }
  for (int x : r.kq) {
    if (x == r.v1) continue;
    for (int y : r.kp) {
      if (x != y) b.connect(x, y);
    }
  }
  return {b.build(), identity_map(inst.graph.order())};
}

GraftResult contract_cut_edge_l41(const GraftInstance& inst) {
  require_validated(inst, Lemma::kL41);
  const auto& r = std::get<L41Roles>(inst.roles);
  GraphBuilder b(inst.graph);
  for_each_vertex(inst.graph.neighbors(r.w2) & ~singleton(r.w1), [&](int y) {
    b.disconnect(r.w2, y);
    b.connect(r.w1, y);
  });
  return {b.build(), identity_map(inst.graph.order())};
}

BlockMergeResult merge_blocks_l42(const GraftInstance& inst) {
  require_validated(inst, Lemma::kL42);
  const auto& r = std::get<L42Roles>(inst.roles);
  const Graph& g = inst.graph;
  const VertexSet g1_rest = to_vertex_set(r.g1) & ~singleton(r.u);
  const VertexSet g2_rest = to_vertex_set(r.g2) & ~singleton(r.v);

  GraphBuilder h1(g);
  for_each_vertex(g.neighbors(r.v) & g2_rest, [&](int z) {
    h1.disconnect(r.v, z);
    h1.connect(r.u, z);
  });
  GraphBuilder h2(g);
  for_each_vertex(g.neighbors(r.u) & g1_rest, [&](int y) {
    h2.disconnect(r.u, y);
    h2.connect(r.v, y);
  });
  return {h1.build(), h2.build(), identity_map(g.order())};
}

}  // namespace rdd
