#pragma once

// Seeded random instances of each grafting rewrite, and the monotonicity
// check that RDD strictly increases under every one of them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdd/extremal.hpp"
#include "rdd/rational.hpp"

namespace rdd {

inline constexpr std::string_view kPrngName = "mt19937_64";
inline constexpr int kMaxInstanceOrder = 14;

// Every returned instance passed validate_instance(). Ranges:
//   l31: k in [1,3], s in [1,3], t in [s+2, s+3], up to 2 extra vertices in G1 and G2
//   c33: k in [1,3], s in [1,3], t in [s+2, s+4], up to 3 extra base vertices
//   l34: p, q in [3,5], s in [1,3], t in [s, s+2], random attachments of 1-2 vertices
//   l41: both sides random connected graphs on 2..6 vertices
//   l42: G0 on 2..6 vertices, G1 and G2 on 2..4 vertices
// All instances have at most kMaxInstanceOrder vertices and are randomly relabeled.
std::vector<GraftInstance> random_lemma_instances(Lemma lemma, int trials, std::uint64_t seed);

struct LemmaReport {
  Lemma lemma = Lemma::kL21;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string prng{kPrngName};
  // Number of (before, after) comparisons made.
  std::uint64_t comparisons = 0;
  std::vector<std::string> failures;
  std::optional<Rational> min_gap;
  // Graphs where rdd and the transmission form disagreed.
  std::uint64_t transmission_mismatches = 0;
};

// l21 samples random graphs (including disconnected ones) and compares every
// edge deletion and every edge insertion; other lemmas apply their rewrite.
LemmaReport check_lemma(Lemma lemma, int trials, std::uint64_t seed);

std::string describe_instance(const GraftInstance& inst);

}  // namespace rdd
