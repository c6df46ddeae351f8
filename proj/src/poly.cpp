#include "dualg/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualg {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double UniPoly::evaluate(double z) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

UniPoly UniPoly::truncated(long max_degree) const {
  if (max_degree < 0) return {};
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min<long>(max_degree + 1, degree() + 1));
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& lhs, const UniPoly& rhs) {
  std::vector<Rational> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) c[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) c[i] += rhs.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly poly_product_coeffs(std::span<const UniPoly> factors, long up_to_degree) {
  if (up_to_degree < 0) throw std::invalid_argument("poly_product_coeffs: negative degree bound");
  UniPoly acc = UniPoly::constant(1);
  for (const auto& f : factors) {
    acc = (acc * f.truncated(up_to_degree)).truncated(up_to_degree);
    if (acc.is_zero()) break;
  }
  return acc;
}

}  // namespace dualg
