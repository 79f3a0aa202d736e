#include <gtest/gtest.h>

#include <random>

#include "rdd/codec.hpp"
#include "rdd/error.hpp"
#include "rdd/extremal.hpp"
#include "rdd/metrics.hpp"
#include "support/oracles.hpp"

namespace rdd {
namespace {

Graph two_k2() { return parse_edge_list("4; 0-1, 2-3").graph; }

TEST(Distances, Bfs) {
  const auto d = bfs_distances(path_graph(4));
  EXPECT_EQ(d.at(0, 3), 3);
  EXPECT_EQ(d.at(1, 1), 0);
  const auto split = bfs_distances(two_k2());
  EXPECT_FALSE(split.reachable(0, 2));
  EXPECT_EQ(split.at(1, 3), DistanceMatrix::kUnreachable);
}

TEST(Transmission, SmallGraphs) {
  const Graph p3 = path_graph(3);
  const auto d = bfs_distances(p3);
  EXPECT_EQ(reciprocal_transmission(p3, 1, d), Rational(2));
  EXPECT_EQ(reciprocal_transmission(p3, 0, d), Rational(3, 2));
  const Graph k5 = complete_graph(5);
  EXPECT_EQ(reciprocal_transmission(k5, 2, bfs_distances(k5)), Rational(4));
  const Graph k2k1 = parse_edge_list("3; 0-1").graph;
  EXPECT_EQ(reciprocal_transmission(k2k1, 2, bfs_distances(k2k1)), Rational(0));
}

TEST(Rdd, GroundTruth) {
  EXPECT_EQ(rdd(path_graph(3)), Rational(7));
  EXPECT_EQ(rdd(path_graph(4)), Rational(41, 3));
  EXPECT_EQ(rdd(cycle_graph(4)), Rational(20));
  EXPECT_EQ(rdd(complete_graph(4)), Rational(36));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(rdd(complete_graph(n)), Rational(n * (n - 1) * (n - 1)));
  EXPECT_EQ(rdd(two_k2()), Rational(4));
  EXPECT_EQ(rdd(Graph(0)), Rational(0));
  EXPECT_EQ(rdd_via_transmission(path_graph(3)), Rational(7));
  EXPECT_EQ(rdd_via_transmission(complete_graph(4)), Rational(36));
  EXPECT_EQ(rdd_via_transmission(Graph(6)), Rational(0));
}

TEST(OtherIndices, GroundTruth) {
  EXPECT_EQ(wiener(path_graph(4)), Rational(10));
  EXPECT_EQ(wiener(complete_graph(3)), Rational(3));
  EXPECT_THROW(wiener(two_k2()), DomainError);
  EXPECT_EQ(harary(path_graph(4)), Rational(13, 3));
  EXPECT_EQ(harary(complete_graph(3)), Rational(3));
  EXPECT_EQ(harary(path_graph(3)), Rational(5, 2));
  EXPECT_EQ(degree_distance(path_graph(3)), Rational(10));
  EXPECT_EQ(degree_distance(complete_graph(3)), Rational(12));
  EXPECT_EQ(degree_distance(path_graph(4)), Rational(28));
  EXPECT_THROW(degree_distance(two_k2()), DomainError);
}

TEST(IndexReport, SharesOneProfile) {
  const auto p3 = index_report(path_graph(3));
  EXPECT_EQ(p3.rdd, Rational(7));
  EXPECT_EQ(p3.wiener, Rational(4));
  EXPECT_EQ(p3.harary, Rational(5, 2));
  EXPECT_EQ(p3.degree_distance, Rational(10));
  const auto k4 = index_report(complete_graph(4));
  EXPECT_EQ(k4.rdd, Rational(36));
  EXPECT_EQ(k4.wiener, Rational(6));
  EXPECT_EQ(k4.harary, Rational(6));
  EXPECT_EQ(k4.degree_distance, Rational(36));
  const auto split = index_report(parse_edge_list("3; 0-1").graph);
  EXPECT_EQ(split.rdd, Rational(2));
  EXPECT_EQ(split.harary, Rational(1));
  EXPECT_FALSE(split.wiener.has_value());
  EXPECT_FALSE(split.degree_distance.has_value());
}

TEST(Metrics, MatchPairwiseOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    ASSERT_EQ(rdd(g), oracle::rdd_index(g)) << write_graph6(g);
    ASSERT_EQ(rdd_via_transmission(g), oracle::rdd_index(g)) << write_graph6(g);
    ASSERT_EQ(harary(g), oracle::harary_index(g)) << write_graph6(g);
    if (oracle::connected(g)) {
      ASSERT_EQ(wiener(g), oracle::wiener_index(g)) << write_graph6(g);
      ASSERT_EQ(degree_distance(g), oracle::dd_index(g)) << write_graph6(g);
    }
  }
}

TEST(Metrics, LongPathsAndLargeGraphs) {
  // Distances up to 63 and the full 64-vertex capacity.
  const Graph p64 = path_graph(64);
  EXPECT_EQ(rdd(p64), oracle::rdd_index(p64));
  EXPECT_EQ(wiener(p64), Rational(63 * 64 * 65 / 6));
  EXPECT_EQ(rdd(complete_graph(64)), Rational(64 * 63 * 63));
  EXPECT_EQ(rdd(cycle_graph(64)), rdd_via_transmission(cycle_graph(64)));
}

TEST(Metrics, ScaledRddIsExact) {
  const Graph g = build_g_nk(8, 3);
  const auto profile = kernels::level_profile(g);
  const Int128 scale = lcm_up_to(7);
  EXPECT_EQ(Rational(scaled_rdd(profile, scale), scale), rdd(g));
  EXPECT_EQ(scaled_rdd_via_transmission(g, bfs_distances(g), scale), scaled_rdd(profile, scale));
  EXPECT_THROW(scaled_rdd(profile, 7), InvalidArgumentError);
  EXPECT_THROW(scaled_rdd_via_transmission(g, bfs_distances(g), 7), InvalidArgumentError);
}

}  // namespace
}  // namespace rdd
