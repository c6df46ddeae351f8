#include "oracles.hpp"

#include "dualg/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace dualg;

namespace {

std::vector<Rational> scaled(const std::vector<Rational>& x, const Rational& t) {
  std::vector<Rational> out;
  for (const auto& v : x) out.push_back(v * t);
  return out;
}

}  // namespace

TEST_CASE("elementary symmetric values") {
  const Rational q1 = make_rational(1, 2), q2 = make_rational(2, 7);
  CHECK(elementary(1, {0, {q1, q2}}) == q1 + q2);
  CHECK(elementary(2, {2, {q1}}) == 1 + 2 * q1);
  CHECK(elementary(5, {2, {q1, q2}}) == 0);
  CHECK(elementary(0, {0, {}}) == 1);
  CHECK(elementary(-1, {3, {}}) == 0);
  oracle::RationalSource src(21);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Rational> x{src.any(), src.any(), src.any()};
    std::vector<Rational> all{1, 1, x[0], x[1], x[2]};
    for (long k = 0; k <= 6; ++k) CHECK(elementary(k, {2, x}) == oracle::monomial_elementary(k, all));
  }
}

TEST_CASE("Schur evaluation") {
  CHECK(schur_eval(Partition{2, 2}, {4, {}}) == 20);
  const Rational x = make_rational(3, 5);
  CHECK(schur_eval(Partition{1}, {0, {x}}) == x);
  CHECK(schur_eval(Partition{2, 1}, {3, {}}) == 8);
  CHECK(schur_eval(Partition{}, {0, {x}}) == 1);
  CHECK(schur_eval(Partition{1, 1}, {0, {x}}) == 0);
  for (const auto& mu : partitions_in_box(3, 3)) {
    for (int n = mu.length(); n <= 4; ++n) CHECK(schur_eval(mu, {n, {}}) == Rational(schur_dim(mu, n)));
  }
}

TEST_CASE("dual Grothendieck examples") {
  const Rational x1 = make_rational(1, 3), x2 = make_rational(2, 5);
  std::vector<Rational> x{x1, x2};
  CHECK(grothendieck_eval(Partition{1}, x) == x1 + x2);
  const Rational five_terms = x1 * x1 + x1 * x1 * x2 + x1 * x2 * x2 + x1 * x2 + x2 * x2;
  CHECK(grothendieck_eval(Partition{2, 1}, x) == five_terms);
  CHECK(grothendieck_eval_combinatorial(Partition{2, 1}, x, 2) == five_terms);
  CHECK(grothendieck_eval_combinatorial(Partition{1}, x, 2) == x1 + x2);
  CHECK(grothendieck_eval(Partition{}, x) == 1);
  std::vector<Rational> ones{1, 1};
  // PP_2((2,2)): fillings of the 2x2 square by 1..2 weakly decreasing both ways
  CHECK(grothendieck_eval_combinatorial(Partition{2, 2}, ones, 2) == 6);
  CHECK_THROWS_AS(grothendieck_eval_combinatorial(Partition{3, 3, 3}, std::vector<Rational>(3, 1), 3, 10),
                  BudgetExceeded);
}

TEST_CASE("Jacobi-Trudi agrees with the plane partition sum") {
  oracle::RationalSource src(22);
  for (const auto& lam : partitions_in_box(3, 3)) {
    for (int n = 1; n <= 3; ++n) {
      for (int rep = 0; rep < 2; ++rep) {
        auto x = src.units(n);
        CHECK(grothendieck_eval(lam, x) == grothendieck_eval_combinatorial(lam, x, n));
      }
    }
  }
}

TEST_CASE("coincidence of g and s on rectangles") {
  oracle::RationalSource src(23);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int n = 1; n <= 4; ++n) {
        auto x = src.units(n);
        const Partition rho = Partition::rectangle(a, b);
        CHECK(grothendieck_eval(rho, x) == schur_eval(rho, {b - 1, x}));
      }
}

TEST_CASE("sum of g over a rectangle is a Schur value") {
  oracle::RationalSource src(24);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int n = 1; n <= 3; ++n) {
        auto x = src.units(n);
        Rational sum = 0;
        for (const auto& lam : partitions_in_box(a, b)) sum += grothendieck_eval(lam, x);
        CHECK(sum == schur_eval(Partition::rectangle(a, b), {b, x}));
      }
}

TEST_CASE("truncated sums of g increase towards the product") {
  const std::vector<Rational> q{make_rational(1, 3), make_rational(1, 5)};
  const int b = 2;
  Rational limit = 1;
  for (const auto& v : q) limit /= pow(1 - v, b);
  std::map<int, Rational> by_first;
  for (const auto& lam : partitions_in_box(12, b)) by_first[lam.first()] += grothendieck_eval(lam, q);
  Rational partial = 0, previous = -1;
  for (const auto& [first, mass] : by_first) {
    partial += mass;
    CHECK(partial > previous);
    CHECK(partial < limit);
    previous = partial;
  }
  CHECK(to_double(limit - partial) < 1e-3);
}

TEST_CASE("top-degree part of g is the Schur polynomial") {
  oracle::RationalSource src(25);
  for (const auto& lam : partitions_in_box(3, 2)) {
    auto x = src.units(3);
    const long d = lam.size();
    // leading coefficient of t -> g_λ(t x) by the order-d divided difference at t = 0..d
    Rational lead = 0;
    for (long i = 0; i <= d; ++i) {
      Rational denom = 1;
      for (long j = 0; j <= d; ++j) {
        if (j != i) denom *= i - j;
      }
      lead += grothendieck_eval(lam, scaled(x, i)) / denom;
    }
    CHECK(lead == schur_eval(lam, {0, x}));
  }
}

TEST_CASE("g is symmetric in its arguments") {
  oracle::RationalSource src(26);
  for (const auto& lam : partitions_in_box(3, 3)) {
    auto x = src.units(3);
    auto y = x;
    std::rotate(y.begin(), y.begin() + 1, y.end());
    CHECK(grothendieck_eval(lam, x) == grothendieck_eval(lam, y));
    std::swap(y[0], y[1]);
    CHECK(grothendieck_eval(lam, x) == grothendieck_eval(lam, y));
  }
}

TEST_CASE("normalized Schur") {
  CHECK(normalized_schur(Partition{2, 2}, std::vector<Rational>{1, 1}, 4) == 1);
  CHECK(normalized_schur(Partition{}, std::vector<Rational>{make_rational(1, 3)}, 4) == 1);
  CHECK_THROWS_AS(normalized_schur(Partition{1, 1, 1}, std::vector<Rational>{1}, 2), std::invalid_argument);
  // Γ_1 over PP(2,2,2) takes the values 0, 1, 2 on 6, 8, 6 tilings
  const Rational x = make_rational(2, 7);
  CHECK(normalized_schur(Partition{2, 2}, std::vector<Rational>{x}, 4) == (6 + 8 * x + 6 * x * x) / 20);
}

TEST_CASE("single corner law") {
  CHECK(gamma_law_polynomial(make_box(1, 1, 1)) == UniPoly({make_rational(1, 2), make_rational(1, 2)}));
  CHECK(gamma_law_polynomial(make_box(2, 2, 2)) ==
        UniPoly({make_rational(6, 20), make_rational(8, 20), make_rational(6, 20)}));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const BoxDims box = make_box(a, b, c);
        std::vector<long> hist(static_cast<std::size_t>(a + 1), 0);
        for_each_pp(box, [&](const PlanePartition& pi) { ++hist[static_cast<std::size_t>(x_stat(pi, 1))]; });
        const Rational z(macmahon_count(box));
        UniPoly law = gamma_law_polynomial(box);
        auto fl = gamma_law_floating(box);
        Rational total = 0;
        for (int n = 0; n <= a; ++n) {
          CHECK(law.coeff(n) == Rational(hist[static_cast<std::size_t>(n)]) / z);
          CHECK(fl[static_cast<std::size_t>(n)] == doctest::Approx(to_double(law.coeff(n))).epsilon(1e-10));
          total += law.coeff(n);
        }
        CHECK(total == 1);
      }
  GammaLaw big = gamma_law(make_box(30, 40, 40));
  CHECK_FALSE(big.exact);
  CHECK(big.probs.size() == 31);
}

TEST_CASE("pair law of two corner counts matches enumeration") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 2; c <= 3; ++c) {
        const BoxDims box = make_box(a, b, c);
        std::map<std::pair<int, int>, long> hist;
        for_each_pp(box, [&](const PlanePartition& pi) { ++hist[{x_stat(pi, 1), x_stat(pi, 2)}]; });
        const Rational z(macmahon_count(box));
        auto exact = gamma_pair_law_exact(box);
        auto fl = gamma_pair_law_floating(box);
        for (int i = 0; i <= a; ++i)
          for (int j = 0; j <= a; ++j) {
            auto it = hist.find({i, j});
            Rational expect = it == hist.end() ? Rational(0) : Rational(it->second) / z;
            CHECK(exact[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == expect);
            CHECK(fl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                  doctest::Approx(to_double(expect)).epsilon(1e-10));
          }
      }
}
