#include "dualg/simd/lpp_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dualg::simd {

bool avx2_available() {
#if defined(DUALG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

namespace {

Isa initial_isa() {
  const char* env = std::getenv("DUALG_SIMD");
  if (env && std::string(env) == "scalar") return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) throw std::invalid_argument("AVX2 kernels are not available");
  current().store(isa, std::memory_order_relaxed);
}

LppRowKernel row_kernel(Isa isa) {
#if defined(DUALG_HAVE_AVX2)
  if (isa == Isa::avx2) {
    if (!avx2_available()) throw std::invalid_argument("AVX2 kernels are not available");
    return &lpp_row_avx2;
  }
#else
  if (isa == Isa::avx2) throw std::invalid_argument("AVX2 kernels were not built");
#endif
  return &lpp_row_scalar;
}

LppRowKernel row_kernel() { return row_kernel(active_isa()); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace dualg::simd
