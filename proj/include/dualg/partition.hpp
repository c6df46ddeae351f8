#pragma once

#include "dualg/exact.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dualg {

/// Integer partition: strictly positive, weakly decreasing parts. Trailing zeros
/// passed to the constructor are dropped; the empty partition is valid.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// (width^height), e.g. rectangle(3, 2) == (3, 3).
  static Partition rectangle(int width, int height);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long size() const;
  /// λ_i for 1-based i, 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int first() const { return part(1); }

  Partition conjugate() const;
  bool contains(const Partition& other) const;
  /// Parts padded with zeros to exactly `n` entries; throws if length() > n.
  std::vector<int> padded(int n) const;
  /// Complement inside (width^height): (width - λ_height, ..., width - λ_1).
  Partition complement(int width, int height) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Every partition fitting inside (width^height), in reverse lexicographic order starting at ∅.
std::vector<Partition> partitions_in_box(int width, int height);

/// s_λ(1^n) by the hook-content product. Throws std::invalid_argument if n < ℓ(λ).
BigInt schur_dim(const Partition& lambda, int n);

/// log s_λ(1^n), double precision, O(|λ|). Requires n >= ℓ(λ).
double log_schur_dim(const Partition& lambda, int n);

/// log s_λ(1^n) for λ = (width^rows, tail...), tail weakly decreasing with entries <= width.
/// Runs in O(rows * tail.size()) using log-factorials; used for large rectangles.
double log_schur_dim_rect_tail(int width, int rows, std::span<const int> tail, int n);

/// Number of semistandard tableaux of shape μ and content γ (γ may contain zeros).
BigInt kostka(const Partition& mu, std::span<const int> content);

/// True iff β dominates α: equal totals and every partial sum of β is >= that of α.
/// Throws std::invalid_argument on length mismatch.
bool dominance_leq(std::span<const int> alpha, std::span<const int> beta);

}  // namespace dualg
