// Compiled with -mavx2; only reached through the runtime dispatcher.
#include "dualg/simd/lpp_kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <climits>

namespace dualg::simd {

// out[j] = S_j + max(0, max_{k<=j} (prev[k] - S_{k-1})) where S is the running sum of w,
// so one row is a prefix sum followed by a prefix max, 8 lanes at a time.
void lpp_row_avx2(const std::int32_t* prev, const std::int32_t* w, std::int32_t* out, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i neg_inf = _mm256_set1_epi32(INT_MIN);
  const __m256i idx3 = _mm256_set1_epi32(3);
  const __m256i idx7 = _mm256_set1_epi32(7);
  __m256i carry_sum = zero;
  __m256i carry_max = zero;

  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    const __m256i wv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + j));
    const __m256i pv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + j));

    __m256i s = _mm256_add_epi32(wv, _mm256_slli_si256(wv, 4));
    s = _mm256_add_epi32(s, _mm256_slli_si256(s, 8));
    s = _mm256_add_epi32(s, _mm256_blend_epi32(zero, _mm256_permutevar8x32_epi32(s, idx3), 0xF0));
    s = _mm256_add_epi32(s, carry_sum);

    __m256i t = _mm256_sub_epi32(pv, _mm256_sub_epi32(s, wv));
    t = _mm256_max_epi32(t, _mm256_alignr_epi8(t, neg_inf, 12));
    t = _mm256_max_epi32(t, _mm256_alignr_epi8(t, neg_inf, 8));
    t = _mm256_max_epi32(t, _mm256_blend_epi32(neg_inf, _mm256_permutevar8x32_epi32(t, idx3), 0xF0));
    t = _mm256_max_epi32(t, carry_max);

    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), _mm256_add_epi32(s, t));
    carry_sum = _mm256_permutevar8x32_epi32(s, idx7);
    carry_max = _mm256_permutevar8x32_epi32(t, idx7);
  }

  std::int32_t left = j == 0 ? 0 : out[j - 1];
  for (; j < n; ++j) {
    left = std::max(prev[j], left) + w[j];
    out[j] = left;
  }
}

}  // namespace dualg::simd
