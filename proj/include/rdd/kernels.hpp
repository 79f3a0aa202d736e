#pragma once

// Distance level profiles: for every hop distance d, the number of ordered
// vertex pairs at distance d and the degree-weighted count
// sum over ordered (u, v) at distance d of deg(u). All four distance-degree
// indices are linear in these counts.
//
// Two implementations produce identical profiles: a scalar per-source BFS
// reference and an AVX2 variant that advances the frontiers of four sources
// per 256-bit vector. The dispatcher picks the best one the CPU supports.

#include <array>
#include <cstdint>
#include <string_view>

#include "rdd/graph.hpp"

namespace rdd::kernels {

struct LevelProfile {
  int order = 0;
  // Largest d with pairs[d] > 0 (0 for graphs without edges).
  int max_level = 0;
  // Indexed by distance; entry 0 is unused.
  std::array<std::uint64_t, kMaxVertices> pairs{};
  std::array<std::uint64_t, kMaxVertices> degree_weighted{};
  std::uint64_t unreachable_pairs = 0;

  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

LevelProfile level_profile_scalar(const Graph& g);

// Only callable when isa_supported(Isa::kAvx2).
LevelProfile level_profile_avx2(const Graph& g);

bool isa_supported(Isa isa);
Isa best_isa();

// Current dispatch target. Defaults to best_isa(), or kScalar when the
// environment variable RDD_FORCE_SCALAR is set.
Isa active_isa();
// Throws InvalidArgumentError when the CPU lacks the requested ISA.
void set_active_isa(Isa isa);

LevelProfile level_profile(const Graph& g);

}  // namespace rdd::kernels
