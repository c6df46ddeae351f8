#include "dualg/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dualg {

NMatrix phi(const PlanePartition& pi, std::optional<Frame> frame) {
  Frame f = frame.value_or(Frame{pi.num_rows(), pi.max_entry()});
  if (f.rows < pi.num_rows() || f.cols < pi.max_entry()) {
    throw std::invalid_argument("phi: plane partition does not fit the " + std::to_string(f.rows) +
                                "x" + std::to_string(f.cols) + " frame");
  }
  NMatrix d(f.rows, f.cols);
  for (int i = 0; i < pi.num_rows(); ++i) {
    for (int j = 0; j < pi.row_length(i); ++j) {
      int v = pi.at(i, j);
      if (v > pi.at(i + 1, j)) ++d(i, v - 1);
    }
  }
  return d;
}

PlanePartition phi_inverse(const NMatrix& d) {
  // columns of π, top to bottom; lengths stay weakly decreasing
  std::vector<std::vector<int>> cols;
  for (int level = d.cols(); level >= 1; --level) {
    for (int row = d.rows(); row >= 1; --row) {
      for (std::int64_t rep = 0; rep < d(row - 1, level - 1); ++rep) {
        auto it = std::partition_point(cols.begin(), cols.end(), [&](const std::vector<int>& col) {
          return static_cast<int>(col.size()) >= row;
        });
        if (it == cols.end()) {
          cols.emplace_back();
          it = cols.end() - 1;
        }
        it->resize(static_cast<std::size_t>(row), level);
      }
    }
  }
  std::vector<std::vector<int>> rows(cols.empty() ? 0 : cols[0].size());
  for (const auto& col : cols) {
    for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
  }
  return PlanePartition(std::move(rows));
}

std::vector<DescentLevelSet> descent_level_sets(const PlanePartition& pi) {
  std::vector<DescentLevelSet> out;
  for (int i = 0; i < pi.num_rows(); ++i) {
    for (int j = 0; j < pi.row_length(i); ++j) {
      int v = pi.at(i, j);
      if (v <= pi.at(i + 1, j)) continue;
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const DescentLevelSet& s) { return s.row == i && s.level == v; });
      if (it == out.end()) {
        out.push_back({i, v, {}});
        it = out.end() - 1;
      }
      it->columns.push_back(j);
    }
  }
  return out;
}

namespace {

void check_pos(const NMatrix& d, GridPos p, const char* what) {
  if (p.row < 1 || p.row > d.rows() || p.col < 1 || p.col > d.cols()) {
    throw std::out_of_range(std::string("last_passage: ") + what + " (" + std::to_string(p.row) + "," +
                            std::to_string(p.col) + ") outside the " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()) + " matrix");
  }
}

}  // namespace

std::int64_t last_passage(const NMatrix& d, GridPos start, GridPos end) {
  check_pos(d, start, "start");
  check_pos(d, end, "end");
  if (start.row > end.row || start.col > end.col) {
    throw std::invalid_argument("last_passage: start must be weakly above-left of end");
  }
  const int width = end.col - start.col + 1;
  std::vector<std::int64_t> g(static_cast<std::size_t>(width), 0);
  for (int i = start.row; i <= end.row; ++i) {
    std::int64_t left = 0;
    for (int j = 0; j < width; ++j) {
      auto& cell = g[static_cast<std::size_t>(j)];
      cell = std::max(cell, left) + d(i - 1, start.col - 1 + j);
      left = cell;
    }
  }
  return g.back();
}

Partition shape_from_matrix(const NMatrix& d) {
  if (d.rows() == 0 || d.cols() == 0) return {};
  // h(i,j) = best path from (i,j) to the bottom-right corner
  const int b = d.rows(), c = d.cols();
  std::vector<std::int64_t> h(static_cast<std::size_t>(c), 0);
  std::vector<int> parts(static_cast<std::size_t>(b), 0);
  for (int i = b - 1; i >= 0; --i) {
    std::int64_t right = 0;
    for (int j = c - 1; j >= 0; --j) {
      auto& cell = h[static_cast<std::size_t>(j)];
      cell = std::max(cell, right) + d(i, j);
      right = cell;
    }
    parts[static_cast<std::size_t>(i)] = static_cast<int>(h[0]);
  }
  return Partition(std::move(parts));
}

bool is_bounded(const NMatrix& d, std::int64_t a) {
  if (d.rows() == 0 || d.cols() == 0) return a >= 0;
  return last_passage(d, {1, 1}, {d.rows(), d.cols()}) <= a;
}

}  // namespace dualg
