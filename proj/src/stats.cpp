#include "dualg/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dualg {

ChiSquareResult chi_square_test(std::span<const std::int64_t> observed, std::span<const double> expected,
                                std::int64_t observed_rest, double level, double min_expected) {
  if (observed.size() != expected.size()) throw std::invalid_argument("chi_square_test: size mismatch");
  const double n = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::int64_t{0}) +
                                       observed_rest);
  if (n <= 0) throw std::invalid_argument("chi_square_test: no observations");

  std::vector<double> exp_counts, obs_counts;
  double pending_e = 0.0, pending_o = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    pending_e += expected[i] * n;
    pending_o += static_cast<double>(observed[i]);
    if (pending_e >= min_expected) {
      exp_counts.push_back(pending_e);
      obs_counts.push_back(pending_o);
      pending_e = pending_o = 0.0;
    }
  }
  const double rest_p = std::max(0.0, 1.0 - std::accumulate(expected.begin(), expected.end(), 0.0));
  pending_e += rest_p * n;
  pending_o += static_cast<double>(observed_rest);
  if (pending_e >= min_expected || exp_counts.empty()) {
    exp_counts.push_back(pending_e);
    obs_counts.push_back(pending_o);
  } else {
    exp_counts.back() += pending_e;
    obs_counts.back() += pending_o;
  }

  ChiSquareResult r;
  r.bins = static_cast<int>(exp_counts.size());
  for (std::size_t i = 0; i < exp_counts.size(); ++i) {
    if (exp_counts[i] <= 0.0) {
      if (obs_counts[i] > 0.0) r.statistic = INFINITY;
      continue;
    }
    const double d = obs_counts[i] - exp_counts[i];
    r.statistic += d * d / exp_counts[i];
  }
  r.dof = r.bins - 1;
  if (r.dof < 1) {
    r.critical = 0.0;
    r.p_value = 1.0;
    r.passed = r.statistic == 0.0;
    return r;
  }
  boost::math::chi_squared dist(r.dof);
  r.critical = boost::math::quantile(boost::math::complement(dist, level));
  r.p_value = std::isfinite(r.statistic) ? boost::math::cdf(boost::math::complement(dist, r.statistic)) : 0.0;
  r.passed = r.statistic <= r.critical;
  return r;
}

double total_variation(std::span<const double> p, std::span<const double> r) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::max(p.size(), r.size()); ++i) {
    const double a = i < p.size() ? p[i] : 0.0;
    const double b = i < r.size() ? r[i] : 0.0;
    s += std::abs(a - b);
  }
  return s / 2.0;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace dualg
