#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <unistd.h>

#include "rdd/codec.hpp"
#include "rdd/enumerate.hpp"
#include "rdd/extremal.hpp"
#include "rdd/isomorphism.hpp"
#include "rdd/metrics.hpp"
#include "rdd/report.hpp"
#include "rdd/structure.hpp"
#include "rdd/verify.hpp"
#include "support/oracles.hpp"

namespace rdd {
namespace {

// Maximum RDD over the (n, k) class by direct enumeration and the pairwise oracle.
std::optional<Rational> brute_max(int n, int k, Family f) {
  std::optional<Rational> best;
  enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
    const int count = f == Family::kCutVertex ? static_cast<int>(oracle::cut_vertices(g).size())
                                              : static_cast<int>(oracle::cut_edges(g).size());
    if (count != k) return;
    const Rational r = oracle::rdd_index(g);
    if (!best || r > *best) best = r;
  });
  return best;
}

TEST(Verify, SpotCertificates) {
  const auto labeled = GraphSource::labeled();
  const auto c51 = max_rdd_over_family(5, 1, Family::kCutVertex, labeled, {});
  EXPECT_EQ(c51.max_rdd, Rational(50));
  EXPECT_TRUE(c51.all_maximizers_isomorphic_to_theory);
  EXPECT_TRUE(c51.matches_theory);

  const auto c50 = max_rdd_over_family(5, 0, Family::kCutVertex, labeled, {});
  EXPECT_EQ(c50.max_rdd, Rational(80));
  EXPECT_EQ(c50.maximizer_count_labeled, 1U);
  ASSERT_EQ(c50.maximizers_graph6.size(), 1U);
  EXPECT_EQ(parse_graph6(c50.maximizers_graph6[0]), complete_graph(5));

  const auto e41 = max_rdd_over_family(4, 1, Family::kCutEdge, labeled, {});
  EXPECT_EQ(e41.max_rdd, Rational(21));
  EXPECT_EQ(e41.closed_form, Rational(21));
  EXPECT_TRUE(e41.matches_theory);
  for (const auto& g6 : e41.maximizers_graph6) EXPECT_TRUE(is_isomorphic(parse_graph6(g6), build_gbar_nk(4, 1)));
}

TEST(Verify, MaximaMatchBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    const OrderScan scan = scan_labeled(n, {});
    for (int k = 0; k < n; ++k) {
      for (Family f : {Family::kCutVertex, Family::kCutEdge}) {
        const auto c = make_certificate(scan, f, k);
        const auto expected = brute_max(n, k, f);
        EXPECT_EQ(c.empty_family, !expected.has_value()) << n << "," << k;
        if (expected) EXPECT_EQ(c.max_rdd, *expected) << n << "," << k << "," << family_name(f);
      }
    }
  }
}

TEST(Verify, EmptyFamilyIsNotAnError) {
  const auto c = max_rdd_over_family(5, 3, Family::kCutEdge, GraphSource::labeled(), {});
  EXPECT_TRUE(c.empty_family);
  EXPECT_FALSE(c.max_rdd.has_value());
  EXPECT_FALSE(c.theory_applicable);
  EXPECT_FALSE(certificate_failed(c));
  EXPECT_TRUE(certificate_json(c)["match"].is_null());
}

TEST(Verify, Theorem36SmallOrders) {
  const auto certs = verify_theorem_36(6);
  EXPECT_EQ(certs.size(), 15U);
  for (const auto& c : certs) {
    EXPECT_TRUE(c.matches_theory) << c.n << "," << c.k;
    EXPECT_FALSE(certificate_failed(c));
    EXPECT_EQ(c.transmission_identity_mismatches, 0U);
  }
  // n = 4: K_4, paw, P_4.
  EXPECT_EQ(certs[3].max_rdd, Rational(36));
  EXPECT_EQ(certs[4].max_rdd, Rational(21));
  EXPECT_EQ(certs[5].max_rdd, Rational(41, 3));
  EXPECT_EQ(certs[0].n, 2);
  EXPECT_EQ(certs[0].family_size, 1U);
}

TEST(Verify, Theorem43SmallOrders) {
  const auto certs = verify_theorem_43(6);
  EXPECT_EQ(certs.size(), 10U);
  for (const auto& c : certs) {
    EXPECT_TRUE(c.matches_theory) << c.n << "," << c.k;
    EXPECT_EQ(c.max_rdd, c.closed_form);
    if (c.k == 0) {
      EXPECT_EQ(c.maximizer_count_labeled, 1U);
      EXPECT_EQ(c.max_rdd, Rational(c.n * (c.n - 1) * (c.n - 1)));
    }
  }
}

TEST(Verify, ParallelMatchesSequential) {
  ScanOptions one;
  ScanOptions eight;
  eight.jobs = 8;
  for (int n = 1; n <= 6; ++n) {
    const OrderScan a = scan_labeled(n, one);
    const OrderScan b = scan_labeled(n, eight);
    EXPECT_EQ(a.graphs_scanned, b.graphs_scanned);
    for (int k = 0; k < n; ++k) {
      for (Family f : {Family::kCutVertex, Family::kCutEdge}) {
        EXPECT_EQ(certificate_json(make_certificate(a, f, k), false), certificate_json(make_certificate(b, f, k), false));
      }
    }
  }
}

TEST(Verify, AccumulatorMergeIsOrderIndependent) {
  // Paths on 6 vertices: 360 labeled maximizers of the 4-cut-vertex class.
  std::vector<Graph> graphs;
  enumerate_connected(6, [&](const Graph& g, std::uint64_t) {
    if (oracle::cut_vertices(g).size() == 4) graphs.push_back(g);
  });
  ASSERT_EQ(graphs.size(), 360U);
  auto run = [&](const std::vector<std::size_t>& order, int splits) {
    std::vector<FamilyAccumulator> parts(static_cast<std::size_t>(splits), FamilyAccumulator(path_graph(6), 5));
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Graph& g = graphs[order[i]];
      const Int128 scaled = scaled_rdd(kernels::level_profile(g), lcm_up_to(5));
      parts[i % static_cast<std::size_t>(splits)].offer(scaled, mask_of(g), g);
    }
    FamilyAccumulator total(path_graph(6), 5);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) total.merge(*it);
    return total;
  };
  std::vector<std::size_t> order(graphs.size());
  std::iota(order.begin(), order.end(), 0);
  const auto a = run(order, 1);
  std::mt19937_64 rng(8);
  std::shuffle(order.begin(), order.end(), rng);
  const auto b = run(order, 7);
  EXPECT_EQ(a.members(), 360U);
  EXPECT_EQ(a.maximizers(), 360U);
  EXPECT_EQ(a.maximizers_isomorphic(), 360U);
  EXPECT_EQ(a.members(), b.members());
  EXPECT_EQ(a.best_scaled(), b.best_scaled());
  EXPECT_EQ(a.maximizers(), b.maximizers());
  ASSERT_EQ(a.retained().size(), 5U);
  ASSERT_EQ(b.retained().size(), 5U);
  for (std::size_t i = 0; i < a.retained().size(); ++i) {
    EXPECT_EQ(a.retained()[i].key, b.retained()[i].key);
    EXPECT_EQ(a.retained()[i].key, mask_of(graphs[i]));
  }
}

TEST(Verify, RetentionCapKeepsExactCount) {
  ScanOptions opts;
  opts.retain_cap = 2;
  const auto c = max_rdd_over_family(6, 4, Family::kCutVertex, GraphSource::labeled(), opts);
  EXPECT_GT(c.maximizer_count_labeled, 2U);
  EXPECT_EQ(c.maximizers_graph6.size(), 2U);
  EXPECT_EQ(c.maximizers_isomorphic_to_theory, c.maximizer_count_labeled);
}

TEST(Verify, Graph6FileSource) {
  char name[] = "/tmp/rdd_verify_XXXXXX";
  const int fd = mkstemp(name);
  {
    std::ofstream out(name);
    for (int n = 2; n <= 5; ++n) {
      for (const auto& g : connected_graphs(n)) out << write_graph6(g) << "\n";
    }
  }
  const auto from_file = verify_theorem_36(5, {}, GraphSource::file(name));
  const auto labeled = verify_theorem_36(5);
  ASSERT_EQ(from_file.size(), labeled.size());
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    EXPECT_EQ(from_file[i].max_rdd, labeled[i].max_rdd);
    EXPECT_EQ(from_file[i].maximizer_count_labeled, labeled[i].maximizer_count_labeled);
    EXPECT_TRUE(from_file[i].matches_theory);
  }
  std::remove(name);
  if (fd >= 0) close(fd);
}

}  // namespace
}  // namespace rdd
