#pragma once

// Extremal graph families for RDD under a fixed number of cut vertices or
// cut edges, and the edge-grafting rewrites that strictly increase RDD.
//
// Each rewrite takes an explicit instance naming the special vertices. An
// instance must pass validate_instance() before a rewrite accepts it.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rdd/graph.hpp"
#include "rdd/rational.hpp"

namespace rdd {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

enum class Family {
  kCutVertex,  // maximiser G(n,k): clique with near-equal pendant paths
  kCutEdge,    // maximiser Gbar(n,k): clique with k pendants at one vertex
};

std::string_view family_name(Family f);
Family parse_family(std::string_view text);

// True when (n, k) lies in the range where the family's extremal
// construction is defined: cut-vertex 0 <= k <= n-2, cut-edge 0 <= k <= n-3.
bool family_in_range(Family f, int n, int k);

// K_{n-k} on 0..n-k-1; with q = k / (n-k) and r = k % (n-k), clique vertices
// 0..r-1 carry paths of q+1 vertices and the rest paths of q vertices.
Graph build_g_nk(int n, int k);

// K_{n-k} on 0..n-k-1 with pendants n-k..n-1 attached to vertex 0.
// Throws RangeError unless 0 <= k <= n-3: beyond that the graph is a star
// with n-1 cut edges.
Graph build_gbar_nk(int n, int k);

Graph build_extremal(Family f, int n, int k);

// Equals rdd(build_gbar_nk(n, k)) for k <= n-3 and the RDD of the star
// K_{1,n-1} for k in {n-2, n-1}; accepts 0 <= k <= n-1.
// n^3 - (5k/2 + 2) n^2 + (2k^2 + 11k/2 + 1) n - (k^3/2 + 2k^2 + 5k/2)
Rational closed_form_gbar(int n, int k);

enum class Lemma { kL21, kL31, kC33, kL34, kL41, kL42 };

std::string_view lemma_name(Lemma l);
Lemma parse_lemma(std::string_view text);

// Path-side grafting. G1 holds the edge uv whose endpoints share the
// neighbourhood {w_1..w_k}; G2 holds the geodesic x (x[0] == u); z is the
// path P_s with z[0] == v. g1, g2 list the vertex sets of G1 and G2.
struct L31Roles {
  int u = 0;
  int v = 0;
  std::vector<int> g1;
  std::vector<int> g2;
  std::vector<int> x;
  std::vector<int> z;
};

// Pendant-path shift. path_u / path_v list the t and s vertices hanging at
// u and v (anchors excluded), outward.
struct C33Roles {
  int u = 0;
  int v = 0;
  std::vector<int> path_u;
  std::vector<int> path_v;
};

// Clique sliding. kp, kq are the two cliques sharing u; path_w (t vertices)
// hangs at w1 in kp, path_v (s vertices) at v1 in kq.
struct L34Roles {
  int u = 0;
  int v1 = 0;
  int w1 = 0;
  std::vector<int> kp;
  std::vector<int> kq;
  std::vector<int> path_w;
  std::vector<int> path_v;
};

// Bridge contraction: w1w2 is a cut edge.
struct L41Roles {
  int w1 = 0;
  int w2 = 0;
};

// Block identification. g0 contains twins u, v; g1 hangs at u, g2 at v.
struct L42Roles {
  int u = 0;
  int v = 0;
  std::vector<int> g0;
  std::vector<int> g1;
  std::vector<int> g2;
};

using Roles = std::variant<L31Roles, C33Roles, L34Roles, L41Roles, L42Roles>;

struct GraftInstance {
  Lemma lemma = Lemma::kL31;
  Graph graph;
  Roles roles;
  bool validated = false;
};

Lemma lemma_of(const Roles& roles);

struct ValidationResult {
  GraftInstance instance;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every hypothesis of the instance's lemma. On success the returned
// instance has validated == true.
ValidationResult validate_instance(GraftInstance instance);

struct GraftResult {
  Graph graph;
  // old vertex -> new vertex
  std::vector<int> vertex_map;
};

// G - {z1 w_i} + {x2 w_i}.
GraftResult graft_l31(const GraftInstance& inst);

// Moves the outer end of the u-path to the end of the v-path: (t, s) -> (t-1, s+1).
GraftResult shift_pendant_paths_c33(const GraftInstance& inst);

// Locates pendant paths of exactly t vertices at u and s vertices at v,
// validates, and shifts. Throws PreconditionError naming violations.
GraftResult shift_pendant_paths_c33(const Graph& g, int u, int v, int t, int s);

// Drops the K_q edges at v1 except v1u and joins K_q - v1 completely to K_p.
GraftResult graft_l34(const GraftInstance& inst);

// Identifies w1 with w2 (kept as w1); the vertex w2 becomes the new pendant
// w0 hanging at w1, so the map is the identity.
GraftResult contract_cut_edge_l41(const GraftInstance& inst);

struct BlockMergeResult {
  Graph h1;  // G2 re-rooted at u
  Graph h2;  // G1 re-rooted at v
  std::vector<int> vertex_map;
};

BlockMergeResult merge_blocks_l42(const GraftInstance& inst);

}  // namespace rdd
