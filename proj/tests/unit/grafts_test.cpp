#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "rdd/codec.hpp"
#include "rdd/error.hpp"
#include "rdd/extremal.hpp"
#include "rdd/isomorphism.hpp"
#include "rdd/metrics.hpp"
#include "rdd/structure.hpp"

namespace rdd {
namespace {

GraftInstance make(Lemma lemma, const std::string& edges, Roles roles) {
  return {lemma, parse_edge_list(edges).graph, std::move(roles), false};
}

// G_1 = K_4 on {0=u, 1=v, 2, 3}; G_2 = path 0-4-5-6-7; z = 1-8.
GraftInstance l31_k4_p5(int t) {
  std::string edges = "9; 0-1, 0-2, 0-3, 1-2, 1-3, 2-3, 1-8";
  std::vector<int> x = {0};
  std::vector<int> g2 = {0};
  int prev = 0;
  for (int i = 0; i < 4; ++i) {
    const int next = 4 + i;
    if (i < t - 1) {
      edges += ", " + std::to_string(prev) + "-" + std::to_string(next);
      x.push_back(next);
      prev = next;
    } else {
      edges += ", " + std::to_string(prev) + "-" + std::to_string(next);
      prev = next;
    }
    g2.push_back(next);
  }
  return make(Lemma::kL31, edges, L31Roles{0, 1, {0, 1, 2, 3}, g2, x, {1, 8}});
}

TEST(Validation, L31Boundary) {
  const auto ok = validate_instance(l31_k4_p5(5));
  EXPECT_TRUE(ok.ok()) << ::testing::PrintToString(ok.violations);
  EXPECT_TRUE(ok.instance.validated);
  const auto bad = validate_instance(l31_k4_p5(3));
  EXPECT_EQ(bad.violations, (std::vector<std::string>{"t >= s+2"}));
  EXPECT_FALSE(bad.instance.validated);
}

TEST(Validation, UnvalidatedRejected) {
  EXPECT_THROW(graft_l31(l31_k4_p5(5)), PreconditionError);
  auto inst = validate_instance(l31_k4_p5(5)).instance;
  EXPECT_THROW(graft_l34(inst), InvalidArgumentError);
}

TEST(Validation, RolesMustMatchLemma) {
  auto inst = l31_k4_p5(5);
  inst.lemma = Lemma::kL41;
  EXPECT_EQ(validate_instance(inst).violations, (std::vector<std::string>{"roles match lemma"}));
  auto range = make(Lemma::kL41, "3; 0-1, 1-2", L41Roles{0, 7});
  EXPECT_EQ(validate_instance(range).violations, (std::vector<std::string>{"vertex range"}));
}

TEST(GraftL31, MovesNeighbourhood) {
  // K_3 on {0=u, 1=v, 2=w_1}; geodesic 0-3-4-5; P_1 = {1}.
  auto inst = validate_instance(make(Lemma::kL31, "6; 0-1, 0-2, 1-2, 0-3, 3-4, 4-5",
                                     L31Roles{0, 1, {0, 1, 2}, {0, 3, 4, 5}, {0, 3, 4, 5}, {1}}));
  ASSERT_TRUE(inst.ok()) << ::testing::PrintToString(inst.violations);
  const auto h = graft_l31(inst.instance);
  EXPECT_FALSE(h.graph.has_edge(1, 2));
  EXPECT_TRUE(h.graph.has_edge(3, 2));
  EXPECT_EQ(h.graph.size(), inst.instance.graph.size());
  EXPECT_GT(rdd(h.graph), rdd(inst.instance.graph));
  EXPECT_EQ(h.vertex_map, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(ShiftC33, Triangle) {
  // K_3 on {0=u, 1=v, 2=w}; three vertices hang at u, one at v.
  const Graph g = parse_edge_list("7; 0-1, 0-2, 1-2, 0-3, 3-4, 4-5, 1-6").graph;
  const auto h = shift_pendant_paths_c33(g, 0, 1, 3, 1);
  EXPECT_GT(rdd(h.graph), rdd(g));
  const auto paths = pendant_paths(h.graph);
  ASSERT_EQ(paths.size(), 2U);
  EXPECT_EQ(paths[0].vertices.size(), 2U);
  EXPECT_EQ(paths[1].vertices.size(), 2U);
}

TEST(ShiftC33, BoundaryChain) {
  const Graph g = parse_edge_list("8; 0-1, 0-2, 1-2, 0-3, 3-4, 4-5, 5-6, 1-7").graph;
  const auto once = shift_pendant_paths_c33(g, 0, 1, 4, 1);
  EXPECT_GT(rdd(once.graph), rdd(g));
  try {
    shift_pendant_paths_c33(once.graph, 0, 1, 3, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.violations(), (std::vector<std::string>{"t >= s+2 >= 3"}));
  }
  EXPECT_THROW(shift_pendant_paths_c33(g, 0, 1, 2, 1), PreconditionError);
}

TEST(GraftL34, TwoTriangles) {
  // K_p = {0=u, 1=w_1, 2}, K_q = {0, 3=v_1, 4}; 5 hangs at w_1, 6 at v_1.
  auto inst = validate_instance(make(Lemma::kL34, "7; 0-1, 0-2, 1-2, 0-3, 0-4, 3-4, 1-5, 3-6",
                                     L34Roles{0, 3, 1, {0, 1, 2}, {0, 3, 4}, {5}, {6}}));
  ASSERT_TRUE(inst.ok()) << ::testing::PrintToString(inst.violations);
  const auto h = graft_l34(inst.instance);
  EXPECT_EQ(h.graph.neighbors(3), singleton(0) | singleton(6));
  for (int a : {0, 1, 2, 4}) {
    for (int b : {0, 1, 2, 4}) {
      if (a != b) EXPECT_TRUE(h.graph.has_edge(a, b)) << a << "-" << b;
    }
  }
  EXPECT_GT(rdd(h.graph), rdd(inst.instance.graph));
}

TEST(GraftL34, Violations) {
  auto bad = validate_instance(make(Lemma::kL34, "7; 0-1, 0-2, 1-2, 0-3, 0-4, 3-4, 1-5, 3-6, 0-5",
                                    L34Roles{0, 3, 1, {0, 1, 2}, {0, 3, 4}, {5}, {6}}));
  EXPECT_FALSE(bad.ok());
}

TEST(ContractL41, TrianglesOnBridge) {
  const Graph g = parse_edge_list("6; 0-1, 0-2, 1-2, 3-4, 3-5, 4-5, 2-3").graph;
  auto inst = validate_instance({Lemma::kL41, g, L41Roles{2, 3}, false});
  ASSERT_TRUE(inst.ok());
  const auto h = contract_cut_edge_l41(inst.instance);
  const Graph expected = parse_edge_list("6; 0-1, 0-2, 1-2, 2-4, 2-5, 4-5, 2-3").graph;
  EXPECT_TRUE(is_isomorphic(h.graph, expected));
  EXPECT_EQ(h.graph.degree(3), 1);
  EXPECT_GT(rdd(h.graph), rdd(g));
}

TEST(ContractL41, Violations) {
  const Graph pendant = parse_edge_list("4; 0-1, 0-2, 1-2, 2-3").graph;
  EXPECT_EQ(validate_instance({Lemma::kL41, pendant, L41Roles{2, 3}, false}).violations,
            (std::vector<std::string>{"G_i is nontrivial"}));
  EXPECT_EQ(validate_instance({Lemma::kL41, cycle_graph(5), L41Roles{0, 1}, false}).violations,
            (std::vector<std::string>{"cut edge"}));
}

TEST(MergeL42, SquareWithTriangleAndEdge) {
  // G_0 = C_4 on 0-1-2-3 with u=0, v=2; G_1 = K_3 on {0,4,5}; G_2 = P_2 on {2,6}.
  auto inst = validate_instance(make(Lemma::kL42, "7; 0-1, 1-2, 2-3, 3-0, 0-4, 0-5, 4-5, 2-6",
                                     L42Roles{0, 2, {0, 1, 2, 3}, {0, 4, 5}, {2, 6}}));
  ASSERT_TRUE(inst.ok()) << ::testing::PrintToString(inst.violations);
  const auto merged = merge_blocks_l42(inst.instance);
  const Rational before = rdd(inst.instance.graph);
  EXPECT_GT(rdd(merged.h1), before);
  EXPECT_GT(rdd(merged.h2), before);
  EXPECT_EQ(merged.h1.order(), 7);
  EXPECT_EQ(merged.h2.order(), 7);
  EXPECT_EQ(merged.h1.size(), inst.instance.graph.size());
}

}  // namespace
}  // namespace rdd
