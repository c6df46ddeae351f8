#pragma once

// Row update of the last-passage table:
//   out[j] = max(prev[j], out[j-1]) + w[j],   out[-1] = 0,
// with prev = the previous row (all zeros for the first row) and every entry >= 0.
// out may alias prev.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dualg::simd {

enum class Isa { scalar, avx2 };

using LppRowKernel = void (*)(const std::int32_t* prev, const std::int32_t* w, std::int32_t* out,
                              std::size_t n);

void lpp_row_scalar(const std::int32_t* prev, const std::int32_t* w, std::int32_t* out, std::size_t n);

/// 64-bit reference used when 32-bit sums could overflow.
void lpp_row_scalar64(const std::int64_t* prev, const std::int64_t* w, std::int64_t* out, std::size_t n);

#if defined(DUALG_HAVE_AVX2)
void lpp_row_avx2(const std::int32_t* prev, const std::int32_t* w, std::int32_t* out, std::size_t n);
#endif

/// True if the build has the AVX2 variant and the CPU reports AVX2.
bool avx2_available();

/// Kernel chosen at first use: AVX2 when available unless DUALG_SIMD=scalar.
Isa active_isa();
/// Override for tests and benchmarks; throws std::invalid_argument if unavailable.
void force_isa(Isa isa);
LppRowKernel row_kernel();
LppRowKernel row_kernel(Isa isa);

std::string_view isa_name(Isa isa);

}  // namespace dualg::simd
