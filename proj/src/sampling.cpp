#include "dualg/sampling.hpp"

#include "dualg/bijection.hpp"
#include "dualg/simd/lpp_kernels.hpp"
#include "dualg/symfunc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dualg {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("geometric parameter q must be in (0,1)");
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(splitmix64(seed) ^ splitmix64(stream + 0xd1b54a32d192ed03ULL)) {}

std::uint64_t RngStream::next_u64() { return splitmix64(key_ + splitmix64(counter_++)); }

double RngStream::uniform_open0() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

std::uint64_t RngStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RngStream::below: empty range");
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    std::uint64_t r = next_u64();
    if (r >= threshold) return r % n;
  }
}

std::int64_t sample_geometric(double q, RngStream& rng) {
  check_q(q);
  return static_cast<std::int64_t>(std::floor(std::log(rng.uniform_open0()) / std::log(q)));
}

std::int64_t sample_geometric_exact(const Rational& q, RngStream& rng) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("geometric parameter q must be in (0,1)");
  if (!q.get_den().fits_slong_p()) throw std::invalid_argument("sample_geometric_exact: denominator too large");
  const auto den = static_cast<std::uint64_t>(q.get_den().get_si());
  const auto num = static_cast<std::uint64_t>(q.get_num().get_si());
  std::int64_t k = 0;
  while (rng.below(den) < num) ++k;
  return k;
}

GeomMatrixSample sample_geometric_matrix(int b, int c, double q, RngStream& rng) {
  check_q(q);
  if (b < 0 || c < 0) throw std::invalid_argument("sample_geometric_matrix: negative frame");
  GeomMatrixSample s{NMatrix(b, c), q};
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < c; ++j) s.w(i, j) = sample_geometric(q, rng);
  }
  return s;
}

PerformanceTable performance_table(const NMatrix& w) {
  const int m = w.rows(), n = w.cols();
  PerformanceTable t(m, n);
  if (m == 0 || n == 0) return t;
  auto& g = t.raw();
  const auto un = static_cast<std::size_t>(n);
  const double bound = static_cast<double>(w.max_entry()) * (m + n);
  if (bound < static_cast<double>(std::numeric_limits<std::int32_t>::max() / 2)) {
    auto kernel = simd::row_kernel();
    std::vector<std::int32_t> prev(un, 0), row(un), out(un);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(w(i, j));
      kernel(prev.data(), row.data(), out.data(), un);
      for (std::size_t j = 0; j < un; ++j) g[static_cast<std::size_t>(i) * un + j] = out[j];
      prev.swap(out);
    }
  } else {
    std::vector<std::int64_t> prev(un, 0), row(un), out(un);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = w(i, j);
      simd::lpp_row_scalar64(prev.data(), row.data(), out.data(), un);
      for (std::size_t j = 0; j < un; ++j) g[static_cast<std::size_t>(i) * un + j] = out[j];
      prev.swap(out);
    }
  }
  return t;
}

PerformanceTable performance_table(const GeomMatrixSample& w) { return performance_table(w.w); }

std::int64_t last_passage_corner(const NMatrix& w) {
  if (w.rows() == 0 || w.cols() == 0) return 0;
  const auto un = static_cast<std::size_t>(w.cols());
  std::vector<std::int64_t> prev(un, 0), row(un);
  for (int i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < un; ++j) row[j] = w(i, static_cast<int>(j));
    simd::lpp_row_scalar64(prev.data(), row.data(), prev.data(), un);
  }
  return prev.back();
}

namespace {

// Streams rows of a fresh geometric(q) matrix through the row kernel; visit(i, G(i, n)).
template <class Visit>
void stream_lpp_rows(int m, int n, double q, RngStream& rng, Visit&& visit) {
  check_q(q);
  if (m <= 0 || n <= 0) return;
  const auto un = static_cast<std::size_t>(n);
  auto kernel = simd::row_kernel();
  const double log_q = std::log(q);
  constexpr std::int64_t limit = std::numeric_limits<std::int32_t>::max() / 2;
  std::vector<std::int32_t> prev(un, 0), row(un);
  for (int i = 0; i < m; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < un; ++j) {
      const double draw = std::floor(std::log(rng.uniform_open0()) / log_q);
      row_sum += static_cast<std::int64_t>(draw);
      if (row_sum + prev.back() > limit) {
        throw std::overflow_error("last passage time exceeds the 32-bit kernel range");
      }
      row[j] = static_cast<std::int32_t>(draw);
    }
    // every new entry is at most G(i-1, n) plus the row sum, which was checked above
    kernel(prev.data(), row.data(), prev.data(), un);
    visit(i + 1, static_cast<std::int64_t>(prev.back()));
  }
}

}  // namespace

std::int64_t sample_lpp_corner(int m, int n, double q, RngStream& rng) {
  std::int64_t corner = 0;
  stream_lpp_rows(m, n, q, rng, [&](int, std::int64_t g) { corner = g; });
  return corner;
}

std::vector<std::int64_t> sample_lpp_last_column(int m, int n, double q, RngStream& rng) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(std::max(m, 0)));
  stream_lpp_rows(m, n, q, rng, [&](int, std::int64_t g) { out.push_back(g); });
  return out;
}

PlanePartition sample_g_measure(int b, int c, double q, RngStream& rng) {
  return phi_inverse(sample_geometric_matrix(b, c, q, rng).w);
}

UniformPPSampler::UniformPPSampler(const BoxDims& box, long budget) {
  const BigInt count = macmahon_count(box);
  if (count > budget) {
    throw BudgetExceeded("uniform sampler: |PP| = " + to_string(count) + " exceeds the budget " +
                         std::to_string(budget));
  }
  all_ = enumerate_pp(box);
}

const PlanePartition& UniformPPSampler::draw(RngStream& rng) const { return all_[rng.below(all_.size())]; }

namespace {

PlanePartition glauber(const BoxDims& box, RngStream& rng, long steps) {
  if (steps < 1) throw std::invalid_argument("mcmc sampler needs steps >= 1");
  const int a = box.a, b = box.b;
  std::vector<int> grid(static_cast<std::size_t>(a * b), 0);
  auto at = [&](int i, int j) { return grid[static_cast<std::size_t>(i * a + j)]; };
  const auto proposals = static_cast<std::uint64_t>(2 * a * b);
  for (long s = 0; s < steps; ++s) {
    const std::uint64_t r = rng.below(proposals);
    const int cell = static_cast<int>(r / 2);
    const int delta = r % 2 == 0 ? 1 : -1;
    const int i = cell / a, j = cell % a;
    const int v = at(i, j) + delta;
    if (v < 0 || v > box.c) continue;
    if (i > 0 && v > at(i - 1, j)) continue;
    if (j > 0 && v > at(i, j - 1)) continue;
    if (i + 1 < b && v < at(i + 1, j)) continue;
    if (j + 1 < a && v < at(i, j + 1)) continue;
    grid[static_cast<std::size_t>(cell)] = v;
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i) rows[static_cast<std::size_t>(i)].assign(grid.begin() + i * a, grid.begin() + (i + 1) * a);
  return PlanePartition(std::move(rows));
}

}  // namespace

PlanePartition sample_uniform_pp(const BoxDims& box, RngStream& rng, const UniformMethod& method) {
  if (const auto* ex = std::get_if<Exhaustive>(&method)) return UniformPPSampler(box, ex->budget).draw(rng);
  return glauber(box, rng, std::get<Mcmc>(method).steps);
}

}  // namespace dualg
