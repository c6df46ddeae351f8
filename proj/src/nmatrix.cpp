#include "dualg/nmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dualg {

NMatrix::NMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("NMatrix: negative dimensions");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

NMatrix::NMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols_) {
      throw std::invalid_argument("NMatrix: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols_));
    }
    for (auto v : rows[i]) {
      if (v < 0) throw std::invalid_argument("NMatrix: negative entry in row " + std::to_string(i + 1));
      data_.push_back(v);
    }
  }
  if (cols_ == 0) rows_ = 0, data_.clear();
}

bool NMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

std::vector<std::vector<std::int64_t>> NMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    out[static_cast<std::size_t>(i)].assign(data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                                            data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + cols_));
  }
  return out;
}

std::int64_t NMatrix::column_sum(int j) const {
  std::int64_t s = 0;
  for (int i = 0; i < rows_; ++i) s += (*this)(i, j);
  return s;
}

std::int64_t NMatrix::max_entry() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

std::string to_csv(const NMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

NMatrix parse_nmatrix_csv(std::istream& in) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::int64_t> row;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) {
      auto b = tok.find_first_not_of(" \t\r");
      auto e = tok.find_last_not_of(" \t\r");
      std::string t = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
      try {
        std::size_t used = 0;
        long long v = std::stoll(t, &used);
        if (used != t.size() || v < 0) throw std::invalid_argument(t);
        row.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad matrix entry '" + t + "'");
      }
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(rows[0].size()) + " entries, got " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return NMatrix(rows);
}

}  // namespace dualg
