#include "rdd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "rdd/codec.hpp"
#include "rdd/enumerate.hpp"
#include "rdd/isomorphism.hpp"
#include "rdd/kernels.hpp"
#include "rdd/metrics.hpp"
#include "rdd/structure.hpp"

namespace rdd {

void FamilyAccumulator::offer(Int128 scaled_rdd, std::uint64_t key, const Graph& g) {
  if (members_++ == 0 || scaled_rdd > best_) {
    best_ = scaled_rdd;
    maximizers_ = 0;
    isomorphic_ = 0;
    retained_.clear();
  }
  if (scaled_rdd != best_) return;
  ++maximizers_;
  if (theory_ && is_isomorphic(g, *theory_)) ++isomorphic_;
  // Keep the retain_cap_ smallest keys whatever the arrival order.
  if (retained_.size() == retain_cap_ && (retain_cap_ == 0 || key >= retained_.back().key)) return;
  const auto at = std::lower_bound(retained_.begin(), retained_.end(), key,
                                   [](const RetainedGraph& r, std::uint64_t k) { return r.key < k; });
  retained_.insert(at, {key, g});
  if (retained_.size() > retain_cap_) retained_.pop_back();
}

void FamilyAccumulator::merge(const FamilyAccumulator& other) {
  if (other.members_ == 0) return;
  if (members_ == 0) {
    *this = other;
    return;
  }
  const std::uint64_t total = members_ + other.members_;
  if (other.best_ > best_) {
    *this = other;
  } else if (other.best_ == best_) {
    maximizers_ += other.maximizers_;
    isomorphic_ += other.isomorphic_;
    retained_.insert(retained_.end(), other.retained_.begin(), other.retained_.end());
    std::sort(retained_.begin(), retained_.end(),
              [](const RetainedGraph& a, const RetainedGraph& b) { return a.key < b.key; });
    if (retained_.size() > retain_cap_) retained_.resize(retain_cap_);
  }
  members_ = total;
}

namespace {

OrderScan empty_scan(int n, const ScanOptions& options) {
  OrderScan scan;
  scan.n = n;
  scan.scale = lcm_up_to(std::max(n - 1, 1));
  const auto slots = static_cast<std::size_t>(std::max(n, 1));
  scan.cut_vertex.reserve(slots);
  scan.cut_edge.reserve(slots);
  for (int k = 0; k < static_cast<int>(slots); ++k) {
    std::optional<Graph> tv;
    std::optional<Graph> te;
    if (family_in_range(Family::kCutVertex, n, k)) tv = build_g_nk(n, k);
    if (family_in_range(Family::kCutEdge, n, k)) te = build_gbar_nk(n, k);
    scan.cut_vertex.emplace_back(tv, options.retain_cap);
    scan.cut_edge.emplace_back(te, options.retain_cap);
  }
  return scan;
}

void absorb(OrderScan& scan, const Graph& g, std::uint64_t key, bool check_transmission) {
  ++scan.graphs_scanned;
  const auto profile = kernels::level_profile(g);
  const Int128 scaled = scaled_rdd(profile, scan.scale);
  if (check_transmission && scaled_rdd_via_transmission(g, bfs_distances(g), scan.scale) != scaled) {
    ++scan.transmission_mismatches;
  }
  const CutCounts counts = cut_counts(g);
  scan.cut_vertex[static_cast<std::size_t>(counts.cut_vertices)].offer(scaled, key, g);
  scan.cut_edge[static_cast<std::size_t>(counts.cut_edges)].offer(scaled, key, g);
}

void merge_into(OrderScan& into, const OrderScan& from) {
  into.graphs_scanned += from.graphs_scanned;
  into.transmission_mismatches += from.transmission_mismatches;
  for (std::size_t k = 0; k < into.cut_vertex.size(); ++k) {
    into.cut_vertex[k].merge(from.cut_vertex[k]);
    into.cut_edge[k].merge(from.cut_edge[k]);
  }
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

OrderScan scan_labeled(int n, const ScanOptions& options) {
  check_enumeration_order(n, options.allow_big);
  const auto start = std::chrono::steady_clock::now();
  const int bits = pair_count(n);
  const std::uint64_t total = std::uint64_t{1} << bits;
  // Fixed chunking (top 12 mask bits at most), independent of the job count.
  const int chunk_bits = std::min(bits, 12);
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t chunk_len = total / chunks;
  const int jobs = std::max(1, options.jobs);

  std::vector<OrderScan> partial;
  partial.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) partial.push_back(empty_scan(n, options));
  std::atomic<std::uint64_t> next{0};
  auto work = [&](OrderScan& local) {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      enumerate_connected_range(n, c * chunk_len, (c + 1) * chunk_len, [&](const Graph& g, std::uint64_t mask) {
        absorb(local, g, mask, options.check_transmission);
      });
    }
  };
  if (jobs == 1) {
    work(partial[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work, std::ref(partial[static_cast<std::size_t>(j)]));
    for (auto& t : threads) t.join();
  }
  OrderScan result = std::move(partial[0]);
  for (std::size_t j = 1; j < partial.size(); ++j) merge_into(result, partial[j]);
  result.elapsed_ms = millis_since(start);
  return result;
}

std::vector<OrderScan> scan_graph6_file(const std::string& path, int n_max, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::map<int, OrderScan> by_order;
  enumerate_from_file(path, [&](const Graph& g, std::size_t line) {
    if (g.order() > n_max || g.order() == 0 || !is_connected(g)) return;
    auto it = by_order.find(g.order());
    if (it == by_order.end()) it = by_order.emplace(g.order(), empty_scan(g.order(), options)).first;
    absorb(it->second, g, line, options.check_transmission);
  });
  std::vector<OrderScan> out;
  for (auto& [n, scan] : by_order) {
    scan.elapsed_ms = millis_since(start);
    out.push_back(std::move(scan));
  }
  return out;
}

ExtremalCertificate make_certificate(const OrderScan& scan, Family family, int k) {
  ExtremalCertificate c;
  c.n = scan.n;
  c.k = k;
  c.family = family;
  c.graphs_scanned = scan.graphs_scanned;
  c.transmission_identity_mismatches = scan.transmission_mismatches;
  c.elapsed_ms = scan.elapsed_ms;

  const auto& slots = family == Family::kCutVertex ? scan.cut_vertex : scan.cut_edge;
  FamilyAccumulator none;
  const FamilyAccumulator& acc = k >= 0 && static_cast<std::size_t>(k) < slots.size() ? slots[static_cast<std::size_t>(k)] : none;
  c.family_size = acc.members();
  c.empty_family = !acc.has_max();
  if (acc.has_max()) {
    c.max_rdd = Rational(acc.best_scaled(), scan.scale);
    c.maximizer_count_labeled = acc.maximizers();
    c.maximizers_isomorphic_to_theory = acc.maximizers_isomorphic();
    for (const auto& r : acc.retained()) c.maximizers_graph6.push_back(write_graph6(r.graph));
  }

  c.theory_applicable = family_in_range(family, scan.n, k);
  if (c.theory_applicable) {
    const Graph theory = build_extremal(family, scan.n, k);
    c.theory_graph6 = write_graph6(theory);
    c.theory_rdd = rdd(theory);
    if (family == Family::kCutEdge) c.closed_form = closed_form_gbar(scan.n, k);
    c.all_maximizers_isomorphic_to_theory = acc.has_max() && acc.maximizers_isomorphic() == acc.maximizers();
    c.matches_theory = c.all_maximizers_isomorphic_to_theory && c.max_rdd == c.theory_rdd &&
                       (!c.closed_form || c.max_rdd == c.closed_form);
  }
  return c;
}

namespace {

std::vector<OrderScan> scans_for(int n_min, int n_max, const GraphSource& source, const ScanOptions& options) {
  std::vector<OrderScan> scans;
  if (source.graph6_path) {
    for (auto& s : scan_graph6_file(*source.graph6_path, n_max, options)) {
      if (s.n >= n_min) scans.push_back(std::move(s));
    }
  } else {
    for (int n = n_min; n <= n_max; ++n) scans.push_back(scan_labeled(n, options));
  }
  return scans;
}

}  // namespace

ExtremalCertificate max_rdd_over_family(int n, int k, Family family, const GraphSource& source,
                                        const ScanOptions& options) {
  if (k < 0) throw RangeError("k must be nonnegative");
  auto scans = scans_for(n, n, source, options);
  if (scans.empty()) {
    OrderScan empty = empty_scan(n, options);
    return make_certificate(empty, family, k);
  }
  return make_certificate(scans.front(), family, k);
}

std::vector<ExtremalCertificate> verify_theorem(Family family, int n_max, const GraphSource& source,
                                                const ScanOptions& options) {
  const int n_min = family == Family::kCutVertex ? 2 : 3;
  if (!source.graph6_path) check_enumeration_order(n_max, options.allow_big);
  std::vector<ExtremalCertificate> out;
  for (const auto& scan : scans_for(n_min, n_max, source, options)) {
    const int k_max = family == Family::kCutVertex ? scan.n - 2 : scan.n - 3;
    for (int k = 0; k <= k_max; ++k) out.push_back(make_certificate(scan, family, k));
  }
  return out;
}

std::vector<ExtremalCertificate> verify_theorem_36(int n_max, const ScanOptions& options, const GraphSource& source) {
  return verify_theorem(Family::kCutVertex, n_max, source, options);
}

std::vector<ExtremalCertificate> verify_theorem_43(int n_max, const ScanOptions& options, const GraphSource& source) {
  return verify_theorem(Family::kCutEdge, n_max, source, options);
}

bool certificate_failed(const ExtremalCertificate& c) {
  return (c.theory_applicable && !c.matches_theory) || c.transmission_identity_mismatches != 0;
}

}  // namespace rdd
