#include "rdd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace rdd::kernels {

namespace {

// Per-64-bit-lane popcount: nibble lookup, then SAD folds the eight byte
// counts of each lane into that lane.
inline __m256i popcount_lanes(__m256i x) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1,
                                          2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0F);
  const __m256i lo = _mm256_shuffle_epi8(lookup, _mm256_and_si256(x, low_mask));
  const __m256i hi = _mm256_shuffle_epi8(lookup, _mm256_and_si256(_mm256_srli_epi16(x, 4), low_mask));
  return _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i x) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), x);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

constexpr int kLanes = 4;
constexpr int kMaxGroups = kMaxVertices / kLanes;

}  // namespace

LevelProfile level_profile_avx2(const Graph& g) {
  LevelProfile p;
  const int n = g.order();
  p.order = n;
  if (n == 0) return p;

  const int groups = (n + kLanes - 1) / kLanes;
  alignas(32) std::uint64_t adj[kMaxVertices] = {};
  alignas(32) std::uint64_t frontier[kMaxVertices] = {};
  alignas(32) std::uint64_t degree[kMaxVertices] = {};
  const auto rows = g.rows();
  for (int u = 0; u < n; ++u) {
    adj[u] = rows[static_cast<std::size_t>(u)];
    degree[u] = static_cast<std::uint64_t>(set_size(adj[u]));
  }

  __m256i seen[kMaxGroups];
  __m256i front[kMaxGroups];
  const __m256i one = _mm256_set1_epi64x(1);
  for (int gi = 0; gi < groups; ++gi) {
    alignas(32) std::uint64_t self[kLanes];
    for (int l = 0; l < kLanes; ++l) {
      const int u = gi * kLanes + l;
      self[l] = u < n ? singleton(u) : 0;
    }
    front[gi] = _mm256_load_si256(reinterpret_cast<const __m256i*>(&adj[gi * kLanes]));
    seen[gi] = _mm256_or_si256(front[gi], _mm256_load_si256(reinterpret_cast<const __m256i*>(self)));
  }

  for (int d = 1;; ++d) {
    __m256i count_acc = _mm256_setzero_si256();
    __m256i weight_acc = _mm256_setzero_si256();
    __m256i any = _mm256_setzero_si256();
    for (int gi = 0; gi < groups; ++gi) {
      const __m256i pc = popcount_lanes(front[gi]);
      const __m256i deg = _mm256_load_si256(reinterpret_cast<const __m256i*>(&degree[gi * kLanes]));
      count_acc = _mm256_add_epi64(count_acc, pc);
      weight_acc = _mm256_add_epi64(weight_acc, _mm256_mul_epu32(pc, deg));
      any = _mm256_or_si256(any, front[gi]);
      _mm256_store_si256(reinterpret_cast<__m256i*>(&frontier[gi * kLanes]), front[gi]);
    }
    if (_mm256_testz_si256(any, any)) break;
    p.pairs[static_cast<std::size_t>(d)] = horizontal_sum(count_acc);
    p.degree_weighted[static_cast<std::size_t>(d)] = horizontal_sum(weight_acc);
    p.max_level = d;

    // next[u] = (union of frontier[v] over neighbours v of u) minus seen[u]
    VertexSet active = 0;
    for (int v = 0; v < n; ++v) active |= frontier[v] != 0 ? singleton(v) : 0;
    for (int gi = 0; gi < groups; ++gi) {
      const __m256i rowvec = _mm256_load_si256(reinterpret_cast<const __m256i*>(&adj[gi * kLanes]));
      __m256i acc = _mm256_setzero_si256();
      for_each_vertex(active, [&](int v) {
        const __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(rowvec, _mm256_set1_epi64x(v)), one);
        const __m256i mask = _mm256_sub_epi64(_mm256_setzero_si256(), bit);
        acc = _mm256_or_si256(acc, _mm256_and_si256(mask, _mm256_set1_epi64x(static_cast<long long>(frontier[v]))));
      });
      front[gi] = _mm256_andnot_si256(seen[gi], acc);
      seen[gi] = _mm256_or_si256(seen[gi], front[gi]);
    }
  }

  std::uint64_t reached = 0;
  for (int gi = 0; gi < groups; ++gi) reached += horizontal_sum(popcount_lanes(seen[gi]));
  // Each source also sees itself.
  p.unreachable_pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) - reached;
  return p;
}

}  // namespace rdd::kernels

#else

namespace rdd::kernels {

LevelProfile level_profile_avx2(const Graph&) { throw InvalidArgumentError("AVX2 kernel not built for this target"); }

}  // namespace rdd::kernels

#endif
