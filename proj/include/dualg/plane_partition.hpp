#pragma once

#include "dualg/exact.hpp"
#include "dualg/partition.hpp"

#include <functional>
#include <initializer_list>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dualg {

/// The a x b x c box: rows of length <= a, at most b rows, entries <= c.
struct BoxDims {
  int a = 1;
  int b = 1;
  int c = 1;

  int n() const { return b + c; }
  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

/// Validates a, b, c >= 1 and returns the box.
BoxDims make_box(int a, int b, int c);

/// 0-based cell index (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Plane partition stored as ragged rows of positive entries (zeros trimmed).
/// Entries weakly decrease along rows and down columns.
class PlanePartition {
 public:
  PlanePartition() = default;
  /// Accepts rows that may contain trailing zeros; throws if monotonicity fails.
  explicit PlanePartition(std::vector<std::vector<int>> rows);
  PlanePartition(std::initializer_list<std::vector<int>> rows)
      : PlanePartition(std::vector<std::vector<int>>(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int i) const;
  /// π_{ij} with 0-based indices; 0 outside the shape.
  int at(int i, int j) const;
  int max_entry() const { return empty() ? 0 : rows_[0][0]; }
  long total() const;

  Partition shape() const;
  bool fits(const BoxDims& box) const;

  friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Visits each π in PP(a, b, c) once. Order: the padded b x a array read row by row
/// is lexicographically increasing, so ∅ comes first and the full box last.
void for_each_pp(const BoxDims& box, const std::function<void(const PlanePartition&)>& visit);

/// Same enumeration split across `jobs` workers by first row; `visit` receives the
/// worker index and must only touch that worker's state. Worker w gets a fixed,
/// deterministic slice of the first-row candidates.
void for_each_pp_parallel(const BoxDims& box, int jobs,
                          const std::function<void(int, const PlanePartition&)>& visit);

std::vector<PlanePartition> enumerate_pp(const BoxDims& box);

/// Z_abc via the MacMahon triple product.
BigInt macmahon_count(const BoxDims& box);

/// Des(π) = {(i,j) : π_ij > π_{i+1,j}} as 0-based cells.
std::set<Cell> descent_set(const PlanePartition& pi);
long descent_count(const PlanePartition& pi);

/// Number of columns of π containing the entry `level`.
int x_stat(const PlanePartition& pi, int level);

/// (X_1, ..., X_c).
std::vector<int> column_contents(const PlanePartition& pi, int c);

// Text format: one row per line, entries separated by spaces; blank lines and
// lines starting with '#' are skipped. An input with no rows is the empty plane partition.
std::string to_text(const PlanePartition& pi);
PlanePartition parse_plane_partition(std::istream& in);

}  // namespace dualg
