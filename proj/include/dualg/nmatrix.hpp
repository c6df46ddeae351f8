#pragma once

#include <cstdint>
#include <initializer_list>
#include <istream>
#include <string>
#include <vector>

namespace dualg {

/// rows x cols matrix of nonnegative integers, row-major, 0-based access.
class NMatrix {
 public:
  NMatrix() = default;
  NMatrix(int rows, int cols);
  /// Rows must all have the same length and hold nonnegative entries.
  explicit NMatrix(const std::vector<std::vector<std::int64_t>>& rows);
  NMatrix(std::initializer_list<std::vector<std::int64_t>> rows)
      : NMatrix(std::vector<std::vector<std::int64_t>>(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_zero() const;

  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  std::vector<std::vector<std::int64_t>> to_rows() const;
  /// Entry sum over column j (0-based).
  std::int64_t column_sum(int j) const;
  std::int64_t max_entry() const;

  friend bool operator==(const NMatrix&, const NMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// CSV: one matrix row per line, comma separated. Blank and '#' lines are skipped.
std::string to_csv(const NMatrix& m);
NMatrix parse_nmatrix_csv(std::istream& in);

}  // namespace dualg
