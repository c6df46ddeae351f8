#pragma once

#include "dualg/exact.hpp"

#include <cstddef>
#include <vector>

namespace dualg {

/// Square matrix of rationals, row-major. Order 0 is allowed (determinant 1).
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order) : order_(order), entries_(order * order) {}
  SquareMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static SquareMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * order_ + col];
  }

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant. Each row is scaled to integers by the lcm of its denominators,
/// then reduced with fraction-free Bareiss elimination (row pivoting on zero pivots).
Rational determinant(const SquareMatrix& m);

}  // namespace dualg
