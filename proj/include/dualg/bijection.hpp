#pragma once

#include "dualg/nmatrix.hpp"
#include "dualg/partition.hpp"
#include "dualg/plane_partition.hpp"

#include <optional>
#include <vector>

namespace dualg {

/// Matrix frame: b rows, c columns.
struct Frame {
  int rows = 0;
  int cols = 0;
};

/// 1-based lattice position (row, column) inside a matrix.
struct GridPos {
  int row = 1;
  int col = 1;
};

/// Columns j (0-based) with π_ij = level > π_{i+1,j}, for the 0-based row i.
struct DescentLevelSet {
  int row = 0;
  int level = 1;
  std::vector<int> columns;
};

/// d_{iℓ} = #{j : π_ij = ℓ > π_{i+1,j}}. Without a frame the result is
/// num_rows(π) x max_entry(π); with a frame it is frame.rows x frame.cols and
/// std::invalid_argument is thrown if π does not fit.
NMatrix phi(const PlanePartition& pi, std::optional<Frame> frame = std::nullopt);

/// Builds π column by column: for ℓ = c..1 and i = b..1, d_{iℓ} times, the leftmost
/// column shorter than i is filled with ℓ up to length i.
PlanePartition phi_inverse(const NMatrix& d);

std::vector<DescentLevelSet> descent_level_sets(const PlanePartition& pi);

/// Maximal up-right path sum from `start` to `end`, inclusive. Throws
/// std::out_of_range for positions outside the matrix and std::invalid_argument
/// when start is not weakly above-left of end.
std::int64_t last_passage(const NMatrix& d, GridPos start, GridPos end);

/// λ_k = last_passage(d, (k,1), (b,c)) for k = 1..b.
Partition shape_from_matrix(const NMatrix& d);

/// G(b,c) <= a. The empty matrix has G = 0.
bool is_bounded(const NMatrix& d, std::int64_t a);

}  // namespace dualg
