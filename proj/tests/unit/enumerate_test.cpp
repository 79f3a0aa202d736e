#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <unistd.h>

#include "rdd/codec.hpp"
#include "rdd/enumerate.hpp"
#include "rdd/error.hpp"
#include "rdd/structure.hpp"
#include "support/oracles.hpp"

namespace rdd {
namespace {

TEST(Enumerate, ConnectedCounts) {
  const std::vector<std::uint64_t> expected = {1, 1, 4, 38, 728};
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t count = 0;
    enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      EXPECT_TRUE(oracle::connected(g));
      ++count;
    });
    EXPECT_EQ(count, expected[static_cast<std::size_t>(n - 1)]) << n;
    EXPECT_EQ(count, oracle::connected_count(n)) << n;
  }
  EXPECT_EQ(connected_graphs(6).size(), 26704U);
}

TEST(Enumerate, MaskOrderMatchesGraph6) {
  EXPECT_EQ(pair_count(4), 6);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = graph_from_mask(4, mask);
    EXPECT_EQ(mask_of(g), mask);
  }
  EXPECT_EQ(write_graph6(graph_from_mask(3, 0b101)), "Bg");
}

TEST(Enumerate, Ranges) {
  EXPECT_THROW(check_enumeration_order(0, false), RangeError);
  EXPECT_THROW(check_enumeration_order(8, false), RangeError);
  EXPECT_NO_THROW(check_enumeration_order(8, true));
  EXPECT_THROW(check_enumeration_order(9, true), RangeError);
}

TEST(Enumerate, CutCountsPartitionTheFamily) {
  for (int n = 2; n <= 6; ++n) {
    std::map<int, std::uint64_t> by_vertices;
    std::map<int, std::uint64_t> by_edges;
    std::uint64_t total = 0;
    enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      const auto c = cut_counts(g);
      ++by_vertices[c.cut_vertices];
      ++by_edges[c.cut_edges];
      ++total;
    });
    std::uint64_t sum_v = 0;
    std::uint64_t sum_e = 0;
    for (auto [k, c] : by_vertices) {
      EXPECT_LE(k, n - 2);
      sum_v += c;
    }
    for (auto [k, c] : by_edges) {
      EXPECT_LE(k, n - 1);
      sum_e += c;
    }
    EXPECT_EQ(sum_v, total);
    EXPECT_EQ(sum_e, total);
    if (n >= 3) {
      EXPECT_EQ(by_edges.count(n - 2), 0U) << "n-2 bridges force a tree";
    }
  }
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    char name[] = "/tmp/rdd_enum_XXXXXX";
    const int fd = mkstemp(name);
    path_ = name;
    std::ofstream(path_) << content;
    if (fd >= 0) close(fd);
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

TEST(Enumerate, FromFile) {
  TempFile two("A_\nBg\n");
  std::size_t count = 0;
  enumerate_from_file(two.path(), [&](const Graph&, std::size_t) { ++count; });
  EXPECT_EQ(count, 2U);

  TempFile empty("");
  count = 0;
  enumerate_from_file(empty.path(), [&](const Graph&, std::size_t) { ++count; });
  EXPECT_EQ(count, 0U);

  TempFile bad("A_\nBg\nB\n");
  try {
    enumerate_from_file(bad.path(), [](const Graph&, std::size_t) {});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(enumerate_from_file("/nonexistent/graphs.g6", [](const Graph&, std::size_t) {}), Error);
}

}  // namespace
}  // namespace rdd
