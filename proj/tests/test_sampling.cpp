#include "dualg/bijection.hpp"
#include "dualg/measures.hpp"
#include "dualg/sampling.hpp"
#include "dualg/simd/lpp_kernels.hpp"
#include "dualg/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <map>

using namespace dualg;

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(7, 0), b(7, 0), c(7, 1), d(8, 0);
  for (int i = 0; i < 100; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  RngStream u(1, 2);
  for (int i = 0; i < 10000; ++i) {
    double v = u.uniform_open0();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
    CHECK(u.below(3) < 3);
  }
  CHECK_THROWS_AS(u.below(0), std::invalid_argument);
}

TEST_CASE("geometric sampler mean and pmf") {
  RngStream rng(11, 0);
  const double q = 0.05;
  const int n = 1'000'000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = static_cast<double>(sample_geometric(q, rng));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sq / n - mean * mean) / n);
  CHECK(std::abs(mean - q / (1 - q)) < 3 * se);
  CHECK_THROWS_AS(sample_geometric(1.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_geometric(0.0, rng), std::invalid_argument);

  for (bool exact : {false, true}) {
    RngStream r(12, exact ? 1 : 0);
    std::vector<std::int64_t> hist(12, 0);
    std::int64_t rest = 0;
    for (int i = 0; i < 100'000; ++i) {
      auto k = exact ? sample_geometric_exact(make_rational(1, 2), r) : sample_geometric_matrix(1, 1, 0.5, r).w(0, 0);
      if (k < 12) ++hist[static_cast<std::size_t>(k)];
      else ++rest;
    }
    std::vector<double> pmf;
    for (int k = 0; k < 12; ++k) pmf.push_back(std::pow(0.5, k + 1));
    auto res = chi_square_test(hist, pmf, rest);
    CHECK_MESSAGE(res.passed, "chi2 = " << res.statistic << " critical " << res.critical);
  }
}

TEST_CASE("geometric matrices replay under a fixed seed") {
  RngStream a(5, 3), b(5, 3);
  CHECK(sample_geometric_matrix(4, 6, 0.3, a).w == sample_geometric_matrix(4, 6, 0.3, b).w);
}

TEST_CASE("performance table") {
  CHECK(performance_table(NMatrix(3, 4)).at(3, 4) == 0);
  NMatrix d{{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}};
  PerformanceTable t = performance_table(d);
  CHECK(t.at(3, 4) == 3);
  CHECK(t.at(0, 2) == 0);
  RngStream rng(9, 0);
  for (int rep = 0; rep < 20; ++rep) {
    auto w = sample_geometric_matrix(7, 19, 0.6, rng);
    PerformanceTable g = performance_table(w);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 19; ++j) {
        CHECK(g.at(i, j) >= g.at(i - 1, j));
        CHECK(g.at(i, j) >= g.at(i, j - 1));
        CHECK(g.at(i, j) == last_passage(w.w, {1, 1}, {i, j}));
      }
    CHECK(last_passage_corner(w.w) == g.at(7, 19));
  }
  NMatrix huge{{std::int64_t{1} << 40, 1}, {1, std::int64_t{1} << 40}};
  CHECK(performance_table(huge).at(2, 2) == (std::int64_t{1} << 41) + 1);
}

TEST_CASE("performance table is identical under both kernels") {
  const auto before = simd::active_isa();
  RngStream rng(10, 0);
  auto w = sample_geometric_matrix(50, 77, 0.7, rng);
  simd::force_isa(simd::Isa::scalar);
  PerformanceTable scalar = performance_table(w);
  if (simd::avx2_available()) {
    simd::force_isa(simd::Isa::avx2);
    PerformanceTable fast = performance_table(w);
    CHECK(fast.raw() == scalar.raw());
  }
  simd::force_isa(before);
}

TEST_CASE("streaming corner equals the stored-matrix corner") {
  RngStream a(21, 4), b(21, 4);
  for (int rep = 0; rep < 5; ++rep) {
    auto w = sample_geometric_matrix(30, 41, 0.25, a);
    CHECK(sample_lpp_corner(30, 41, 0.25, b) == performance_table(w).at(30, 41));
  }
}

TEST_CASE("g-measure sampler") {
  RngStream rng(13, 0);
  std::int64_t empty = 0;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) empty += sample_g_measure(1, 1, 0.5, rng).empty();
  std::vector<std::int64_t> obs{empty};
  std::vector<double> p{0.5};
  CHECK(chi_square_test(obs, p, n - empty).passed);

  RngStream a(14, 0), b(14, 0);
  CHECK(sample_g_measure(3, 3, 0.4, a) == sample_g_measure(3, 3, 0.4, b));
}

TEST_CASE("g-measure pushforward on plane partitions") {
  // P(π) = (1-q)^{bc} q^{des(π)} on π with <= 2 rows and entries <= 2.
  // 197 bins at level 0.01: run 10 independent streams, allow at most 2 rejections
  int rejections = 0;
  for (std::uint64_t stream = 0; stream < 10; ++stream) {
    RngStream rng(15, stream);
    const int n = 100'000;
    std::map<PlanePartition, std::int64_t> by_pp;
    for (int i = 0; i < n; ++i) ++by_pp[sample_g_measure(2, 2, 0.5, rng)];
    std::vector<std::int64_t> obs;
    std::vector<double> exp;
    std::int64_t seen = 0;
    for_each_pp(make_box(5, 2, 2), [&](const PlanePartition& pi) {
      obs.push_back(by_pp[pi]);
      exp.push_back(std::pow(0.5, 4 + descent_count(pi)));
      seen += by_pp[pi];
    });
    auto res = chi_square_test(obs, exp, n - seen);
    if (!res.passed) ++rejections;
  }
  CHECK(rejections <= 2);
}

TEST_CASE("g-measure shape law") {
  RngStream rng(15, 100);
  const int n = 100'000;
  std::map<Partition, std::int64_t> by_shape;
  for (int i = 0; i < n; ++i) ++by_shape[sample_g_measure(2, 2, 0.5, rng).shape()];
  auto params = make_gmeasure(2, 2, {make_rational(1, 2), make_rational(1, 2)});
  std::vector<std::int64_t> obs;
  std::vector<double> exp;
  std::int64_t seen = 0;
  for (const auto& lam : partitions_in_box(8, 2)) {
    obs.push_back(by_shape[lam]);
    exp.push_back(to_double(g_measure_shape_prob(params, lam)));
    seen += by_shape[lam];
  }
  auto res = chi_square_test(obs, exp, n - seen);
  CHECK_MESSAGE(res.passed, "chi2 = " << res.statistic << " critical " << res.critical);
}

TEST_CASE("last passage rows follow the g-measure shape law") {
  RngStream rng(16, 0);
  const int n = 100'000;
  std::map<Partition, std::int64_t> hist;
  std::vector<std::int64_t> row_hist(20, 0);
  std::int64_t row_rest = 0;
  for (int i = 0; i < n; ++i) {
    auto w = sample_geometric_matrix(2, 3, 0.5, rng);
    PerformanceTable g = performance_table(w);
    ++hist[Partition({static_cast<int>(g.at(2, 3)), static_cast<int>(g.at(1, 3))})];
    auto top = g.at(1, 3);
    if (top < 20) ++row_hist[static_cast<std::size_t>(top)];
    else ++row_rest;
  }
  auto params = make_gmeasure(2, 3, {make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)});
  std::vector<std::int64_t> obs;
  std::vector<double> exp;
  std::int64_t seen = 0;
  for (const auto& lam : partitions_in_box(10, 2)) {
    obs.push_back(hist[lam]);
    exp.push_back(to_double(g_measure_shape_prob(params, lam)));
    seen += hist[lam];
  }
  auto res = chi_square_test(obs, exp, n - seen);
  CHECK_MESSAGE(res.passed, "chi2 = " << res.statistic << " critical " << res.critical);

  // G(1,c) is a sum of c geometric variables: negative binomial NB(c, q)
  std::vector<double> nb;
  for (int k = 0; k < 20; ++k) nb.push_back(to_double(Rational(binomial(k + 2, k))) * std::pow(0.5, k + 3));
  res = chi_square_test(row_hist, nb, row_rest);
  CHECK_MESSAGE(res.passed, "chi2 = " << res.statistic << " critical " << res.critical);
}

TEST_CASE("uniform plane partition samplers") {
  RngStream rng(17, 0);
  UniformPPSampler one(make_box(1, 1, 1));
  std::int64_t empties = 0;
  const int n = 100'000;
  for (int i = 0; i < n; ++i) empties += one.draw(rng).empty();
  CHECK(std::abs(empties - n / 2.0) < 3 * std::sqrt(n / 4.0));
  CHECK_THROWS_AS(UniformPPSampler(make_box(4, 4, 4), 1000), BudgetExceeded);

  RngStream a(18, 0), b(18, 0);
  CHECK(sample_uniform_pp(make_box(2, 2, 2), a, Mcmc{500}) == sample_uniform_pp(make_box(2, 2, 2), b, Mcmc{500}));
  CHECK(sample_uniform_pp(make_box(2, 2, 2), a, Exhaustive{}).fits(make_box(2, 2, 2)));
  CHECK_THROWS_AS(sample_uniform_pp(make_box(2, 2, 2), a, Mcmc{0}), std::invalid_argument);

  // MCMC shape law against the exhaustive uniform law
  std::map<Partition, double> exact;
  for_each_pp(make_box(2, 2, 2), [&](const PlanePartition& pi) { exact[pi.shape()] += 1.0 / 20; });
  std::map<Partition, double> empirical;
  const int chains = 20'000;
  for (int c = 0; c < chains; ++c) {
    RngStream chain(19, static_cast<std::uint64_t>(c));
    auto pi = sample_uniform_pp(make_box(2, 2, 2), chain, Mcmc{1000});
    CHECK(pi.fits(make_box(2, 2, 2)));
    empirical[pi.shape()] += 1.0 / chains;
  }
  double tv = 0.0;
  for (const auto& [lam, p] : exact) tv += std::abs(p - empirical[lam]) / 2;
  CHECK(tv < 0.02);
}
