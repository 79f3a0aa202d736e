#include "rdd/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace rdd::kernels {

namespace {

Isa initial_isa() {
  if (std::getenv("RDD_FORCE_SCALAR") != nullptr) return Isa::kScalar;
  return best_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw InvalidArgumentError("ISA not supported on this CPU: " + std::string(isa_name(isa)));
  active().store(isa, std::memory_order_relaxed);
}

LevelProfile level_profile(const Graph& g) {
  return active_isa() == Isa::kAvx2 ? level_profile_avx2(g) : level_profile_scalar(g);
}

}  // namespace rdd::kernels
