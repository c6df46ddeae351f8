#pragma once

#include "dualg/exact.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace dualg {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies z^i.
/// Trailing zero coefficients are stripped, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// 1 + c z
  static UniPoly linear_factor(const Rational& c) { return UniPoly({Rational(1), c}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of z^k, zero outside the stored range.
  Rational coeff(long k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& z) const;
  double evaluate(double z) const;

  UniPoly truncated(long max_degree) const;

  friend UniPoly operator+(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Product of `factors` keeping only degrees 0..up_to_degree. The empty product is 1.
UniPoly poly_product_coeffs(std::span<const UniPoly> factors, long up_to_degree);

}  // namespace dualg
