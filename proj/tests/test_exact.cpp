#include "oracles.hpp"

#include "dualg/exact.hpp"
#include "dualg/matrix.hpp"
#include "dualg/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace dualg;

TEST_CASE("binomial small values and range convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial matches factorial ratio") {
  CHECK(binomial(40, 20) == oracle::factorial_ratio_binomial(40, 20));
  for (long n = 0; n <= 30; ++n) {
    for (long k = -1; k <= n + 1; ++k) CHECK(binomial(n, k) == oracle::factorial_ratio_binomial(n, k));
  }
}

TEST_CASE("factorial and log_factorial agree") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(log_factorial(20) == doctest::Approx(std::log(factorial(20).get_d())).epsilon(1e-12));
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational(" -7 ") == -7);
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-1.5") == make_rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_decimal(make_rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
}

TEST_CASE("determinant small cases") {
  CHECK(determinant(SquareMatrix::identity(3)) == 1);
  CHECK(determinant(SquareMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(SquareMatrix(0)) == 1);
  CHECK(determinant(SquareMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(SquareMatrix{{0, 0}, {1, 0}}) == 0);
}

namespace {

std::vector<std::vector<Rational>> random_grid(oracle::RationalSource& src, std::size_t n) {
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (auto& row : g) {
    for (auto& v : row) v = src.any();
  }
  return g;
}

SquareMatrix to_matrix(const std::vector<std::vector<Rational>>& g) {
  SquareMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
  }
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on random rational matrices") {
  oracle::RationalSource src(11);
  for (int rep = 0; rep < 10; ++rep) {
    for (std::size_t n : {1u, 2u, 3u, 5u, 6u}) {
      auto g = random_grid(src, n);
      CHECK(determinant(to_matrix(g)) == oracle::cofactor_det(g));
    }
  }
}

TEST_CASE("determinant is multiplicative on block-diagonal matrices") {
  oracle::RationalSource src(12);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_grid(src, 3), b = random_grid(src, 2);
    SquareMatrix m(5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = a[i][j];
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(3 + i, 3 + j) = b[i][j];
    CHECK(determinant(m) == determinant(to_matrix(a)) * determinant(to_matrix(b)));
  }
}

TEST_CASE("determinant vanishes with a duplicated row") {
  oracle::RationalSource src(13);
  for (int rep = 0; rep < 10; ++rep) {
    auto g = random_grid(src, 5);
    g[3] = g[1];
    CHECK(determinant(to_matrix(g)) == 0);
  }
}

TEST_CASE("polynomial products") {
  UniPoly one_plus_z = UniPoly::linear_factor(1);
  std::vector<UniPoly> two{one_plus_z, one_plus_z};
  CHECK(poly_product_coeffs(two, 5) == UniPoly({1, 2, 1}));
  CHECK(poly_product_coeffs({}, 3) == UniPoly({1}));
  CHECK(poly_product_coeffs(two, 1) == UniPoly({1, 2}));
  CHECK_THROWS_AS(poly_product_coeffs(two, -1), std::invalid_argument);
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly({1, 0, 0}).degree() == 0);

  const Rational q1 = make_rational(1, 2), q2 = make_rational(1, 3);
  std::vector<UniPoly> f{UniPoly::linear_factor(q1), UniPoly::linear_factor(q2), one_plus_z, one_plus_z};
  CHECK(poly_product_coeffs(f, 4).coeff(2) == oracle::monomial_elementary(2, {1, 1, q1, q2}));
}

TEST_CASE("polynomial product is order independent and associative") {
  oracle::RationalSource src(14);
  std::vector<UniPoly> f;
  for (int i = 0; i < 5; ++i) f.push_back(UniPoly({src.any(), src.any(), src.any()}));
  UniPoly whole = poly_product_coeffs(f, 20);
  auto perm = f;
  std::reverse(perm.begin(), perm.end());
  std::swap(perm[0], perm[2]);
  CHECK(poly_product_coeffs(perm, 20) == whole);
  std::vector<UniPoly> left(f.begin(), f.begin() + 2), right(f.begin() + 2, f.end());
  CHECK(poly_product_coeffs(left, 20) * poly_product_coeffs(right, 20) == whole);
  CHECK(whole.evaluate(make_rational(1, 3)) ==
        f[0].evaluate(make_rational(1, 3)) * f[1].evaluate(make_rational(1, 3)) *
            f[2].evaluate(make_rational(1, 3)) * f[3].evaluate(make_rational(1, 3)) *
            f[4].evaluate(make_rational(1, 3)));
}
