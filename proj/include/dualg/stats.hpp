#pragma once

// Goodness-of-fit helpers for sampler audits.

#include <cstdint>
#include <span>
#include <vector>

namespace dualg {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double critical = 0.0;  // upper quantile at the requested level
  double p_value = 1.0;
  bool passed = true;
  int bins = 0;
};

/// Pearson test of `observed` counts against `expected` probabilities (same order).
/// Probability mass not covered by `expected` forms one extra bin with observed
/// count `observed_rest`. Bins with expected count below `min_expected` are pooled
/// into their neighbour so every tested bin has enough mass.
ChiSquareResult chi_square_test(std::span<const std::int64_t> observed, std::span<const double> expected,
                                std::int64_t observed_rest = 0, double level = 0.01, double min_expected = 5.0);

/// Σ |p - r| / 2 over the union of supports; entries beyond either vector count as 0.
double total_variation(std::span<const double> p, std::span<const double> r);

double normal_cdf(double z);

}  // namespace dualg
