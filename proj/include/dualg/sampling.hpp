#pragma once

#include "dualg/exact.hpp"
#include "dualg/nmatrix.hpp"
#include "dualg/plane_partition.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace dualg {

/// Counter-based stream: draw number n is mix(seed, stream, n), so streams with
/// different ids never share state and any draw can be replayed.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  /// Uniform on (0, 1]: never returns 0.
  double uniform_open0();
  /// Uniform integer in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// P(w = k) = (1 - q) q^k via floor(log U / log q).
std::int64_t sample_geometric(double q, RngStream& rng);

/// Same law with exact acceptance: repeated Bernoulli(q) trials on integer draws.
/// q's denominator must fit in 63 bits.
std::int64_t sample_geometric_exact(const Rational& q, RngStream& rng);

struct GeomMatrixSample {
  NMatrix w;
  double q = 0.0;
};

/// b x c i.i.d. geometric(q) entries, filled row by row. Throws unless 0 < q < 1.
GeomMatrixSample sample_geometric_matrix(int b, int c, double q, RngStream& rng);

/// G(i, j) for 1 <= i <= m, 1 <= j <= n, stored row-major.
class PerformanceTable {
 public:
  PerformanceTable() = default;
  PerformanceTable(int rows, int cols) : rows_(rows), cols_(cols), g_(static_cast<std::size_t>(rows * cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 1-based; G(i, 0) = G(0, j) = 0.
  std::int64_t at(int i, int j) const {
    return i < 1 || j < 1 ? 0 : g_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }
  std::vector<std::int64_t>& raw() { return g_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> g_;
};

/// G(i,j) = max(G(i-1,j), G(i,j-1)) + w_ij, rows computed by the dispatched SIMD kernel
/// when the entries fit 32-bit sums, otherwise by the 64-bit scalar kernel.
PerformanceTable performance_table(const NMatrix& w);
PerformanceTable performance_table(const GeomMatrixSample& w);

/// G(m, n) only, keeping a single row.
std::int64_t last_passage_corner(const NMatrix& w);

/// G(m, n) of a fresh geometric(q) matrix; consumes the stream exactly like
/// sample_geometric_matrix(m, n, q, rng) but never stores the matrix.
std::int64_t sample_lpp_corner(int m, int n, double q, RngStream& rng);

/// G(1, n), ..., G(m, n) of a fresh geometric(q) matrix, same stream use as above.
std::vector<std::int64_t> sample_lpp_last_column(int m, int n, double q, RngStream& rng);

/// Φ^{-1} of a geometric(q) matrix on the b x c frame.
PlanePartition sample_g_measure(int b, int c, double q, RngStream& rng);

/// Uniform element of PP(a,b,c) by indexing into the enumeration (built once).
class UniformPPSampler {
 public:
  /// Throws BudgetExceeded when |PP(a,b,c)| > budget.
  explicit UniformPPSampler(const BoxDims& box, long budget = 5'000'000);
  const PlanePartition& draw(RngStream& rng) const;
  std::size_t size() const { return all_.size(); }

 private:
  std::vector<PlanePartition> all_;
};

struct Exhaustive {
  long budget = 5'000'000;
};
struct Mcmc {
  long steps = 10'000;
};
using UniformMethod = std::variant<Exhaustive, Mcmc>;

/// Exhaustive: one uniform index into the enumeration. Mcmc: `steps` single-site
/// ±1 proposals from the empty plane partition, accepted iff the result stays in the box.
PlanePartition sample_uniform_pp(const BoxDims& box, RngStream& rng, const UniformMethod& method);

}  // namespace dualg
