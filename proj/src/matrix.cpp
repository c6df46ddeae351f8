#include "dualg/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dualg {

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : order_(rows.size()), entries_() {
  entries_.reserve(order_ * order_);
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("SquareMatrix: rows must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

Rational determinant(const SquareMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;

  std::vector<BigInt> a(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    const BigInt& pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& target = a[i * n + j];
        target = target * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev_pivot = pivot;
  }

  Rational det(a[n * n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

}  // namespace dualg
