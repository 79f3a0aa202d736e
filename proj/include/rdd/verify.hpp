#pragma once

// Exhaustive certification of the RDD maximisers over connected graphs with
// a fixed number of cut vertices or cut edges.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdd/extremal.hpp"
#include "rdd/graph.hpp"
#include "rdd/rational.hpp"

namespace rdd {

inline constexpr std::size_t kDefaultRetainedMaximizers = 64;

struct ScanOptions {
  int jobs = 1;
  bool allow_big = false;
  std::size_t retain_cap = kDefaultRetainedMaximizers;
  // Recompute every scanned graph's RDD through the transmission identity.
  bool check_transmission = true;
};

// Where graphs come from: the built-in labeled enumeration, or a graph6 file.
struct GraphSource {
  std::optional<std::string> graph6_path;

  static GraphSource labeled() { return {}; }
  static GraphSource file(std::string path) { return {std::move(path)}; }
};

struct RetainedGraph {
  std::uint64_t key = 0;  // edge mask, or line number for file input
  Graph graph;
};

// Running maximum of RDD over one (n, family, k) class. Merging is
// associative and commutative, so any split of the input gives the same result.
class FamilyAccumulator {
 public:
  FamilyAccumulator() = default;
  FamilyAccumulator(std::optional<Graph> theory, std::size_t retain_cap)
      : theory_(std::move(theory)), retain_cap_(retain_cap) {}

  // scaled_rdd is rdd(g) multiplied by the scan's common scale.
  void offer(Int128 scaled_rdd, std::uint64_t key, const Graph& g);
  void merge(const FamilyAccumulator& other);

  std::uint64_t members() const { return members_; }
  bool has_max() const { return members_ > 0; }
  Int128 best_scaled() const { return best_; }
  std::uint64_t maximizers() const { return maximizers_; }
  std::uint64_t maximizers_isomorphic() const { return isomorphic_; }
  const std::vector<RetainedGraph>& retained() const { return retained_; }

 private:
  std::optional<Graph> theory_;
  std::size_t retain_cap_ = kDefaultRetainedMaximizers;
  std::uint64_t members_ = 0;
  Int128 best_ = 0;
  std::uint64_t maximizers_ = 0;
  std::uint64_t isomorphic_ = 0;
  std::vector<RetainedGraph> retained_;
};

// One pass over all connected graphs of order n, tallied by cut-vertex count
// and by cut-edge count (index k of each vector).
struct OrderScan {
  int n = 0;
  Int128 scale = 1;  // lcm(1..n-1)
  std::uint64_t graphs_scanned = 0;
  std::uint64_t transmission_mismatches = 0;
  double elapsed_ms = 0.0;
  std::vector<FamilyAccumulator> cut_vertex;
  std::vector<FamilyAccumulator> cut_edge;
};

OrderScan scan_labeled(int n, const ScanOptions& options);

// Scans every graph of order <= n_max in a graph6 file, grouped by order.
std::vector<OrderScan> scan_graph6_file(const std::string& path, int n_max, const ScanOptions& options);

struct ExtremalCertificate {
  int n = 0;
  int k = 0;
  Family family = Family::kCutVertex;
  bool empty_family = true;
  std::optional<Rational> max_rdd;
  std::uint64_t maximizer_count_labeled = 0;
  std::uint64_t maximizers_isomorphic_to_theory = 0;
  std::vector<std::string> maximizers_graph6;
  // False when (n, k) lies outside the range of the extremal construction.
  bool theory_applicable = false;
  std::string theory_graph6;
  std::optional<Rational> theory_rdd;
  std::optional<Rational> closed_form;
  bool all_maximizers_isomorphic_to_theory = false;
  // Meaningful only when theory_applicable.
  bool matches_theory = false;
  std::uint64_t family_size = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t transmission_identity_mismatches = 0;
  double elapsed_ms = 0.0;
};

ExtremalCertificate make_certificate(const OrderScan& scan, Family family, int k);

ExtremalCertificate max_rdd_over_family(int n, int k, Family family, const GraphSource& source,
                                        const ScanOptions& options);

std::vector<ExtremalCertificate> verify_theorem(Family family, int n_max, const GraphSource& source,
                                                const ScanOptions& options);

// Cut-vertex family: every n <= n_max, 0 <= k <= n-2.
std::vector<ExtremalCertificate> verify_theorem_36(int n_max, const ScanOptions& options = {},
                                                   const GraphSource& source = GraphSource::labeled());

// Cut-edge family: every n <= n_max, 0 <= k <= n-3.
std::vector<ExtremalCertificate> verify_theorem_43(int n_max, const ScanOptions& options = {},
                                                   const GraphSource& source = GraphSource::labeled());

// A certificate fails when the theory applies and is not matched, or when
// the transmission identity broke on some scanned graph.
bool certificate_failed(const ExtremalCertificate& c);

}  // namespace rdd
