#include "dualg/simd/lpp_kernels.hpp"

#include <algorithm>

namespace dualg::simd {

void lpp_row_scalar(const std::int32_t* prev, const std::int32_t* w, std::int32_t* out, std::size_t n) {
  std::int32_t left = 0;
  for (std::size_t j = 0; j < n; ++j) {
    left = std::max(prev[j], left) + w[j];
    out[j] = left;
  }
}

void lpp_row_scalar64(const std::int64_t* prev, const std::int64_t* w, std::int64_t* out, std::size_t n) {
  std::int64_t left = 0;
  for (std::size_t j = 0; j < n; ++j) {
    left = std::max(prev[j], left) + w[j];
    out[j] = left;
  }
}

}  // namespace dualg::simd
