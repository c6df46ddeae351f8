#include "dualg/plane_partition.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dualg {

BoxDims make_box(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("box dimensions must be >= 1");
  return {a, b, c};
}

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) {
  for (auto& row : rows) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.empty()) throw std::invalid_argument("plane partition: empty row above a nonempty row");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] <= 0) throw std::invalid_argument("plane partition: entries must be positive");
      if (j > 0 && row[j] > row[j - 1]) {
        throw std::invalid_argument("plane partition: row " + std::to_string(i + 1) +
                                    " is not weakly decreasing");
      }
      if (i > 0 && (j >= rows[i - 1].size() || row[j] > rows[i - 1][j])) {
        throw std::invalid_argument("plane partition: column " + std::to_string(j + 1) +
                                    " is not weakly decreasing at row " + std::to_string(i + 1));
      }
    }
  }
  rows_ = std::move(rows);
}

int PlanePartition::row_length(int i) const {
  return i >= 0 && i < num_rows() ? static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) : 0;
}

int PlanePartition::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= num_rows()) return 0;
  const auto& row = rows_[static_cast<std::size_t>(i)];
  return j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : 0;
}

long PlanePartition::total() const {
  long t = 0;
  for (const auto& row : rows_) {
    for (int v : row) t += v;
  }
  return t;
}

Partition PlanePartition::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

bool PlanePartition::fits(const BoxDims& box) const {
  return num_rows() <= box.b && row_length(0) <= box.a && max_entry() <= box.c;
}

namespace {

// Row-major filling of the padded b x a grid; `grid` holds rows [0, first_row) already.
class PPFiller {
 public:
  PPFiller(const BoxDims& box, const std::function<void(const PlanePartition&)>& visit)
      : box_(box), visit_(visit), grid_(static_cast<std::size_t>(box.a * box.b), 0) {}

  void run_from_first_row(const std::vector<int>& first_row) {
    std::copy(first_row.begin(), first_row.end(), grid_.begin());
    fill(box_.a);
  }
  void run() { fill(0); }

 private:
  void fill(int pos) {
    if (pos == box_.a * box_.b) {
      emit();
      return;
    }
    const int i = pos / box_.a;
    const int j = pos % box_.a;
    int bound = box_.c;
    if (j > 0) bound = std::min(bound, grid_[static_cast<std::size_t>(pos - 1)]);
    if (i > 0) bound = std::min(bound, grid_[static_cast<std::size_t>(pos - box_.a)]);
    if (j == 0 && i > 0 && grid_[static_cast<std::size_t>(pos - box_.a)] == 0) {
      // the row above is empty, so everything below is zero
      std::fill(grid_.begin() + pos, grid_.end(), 0);
      emit();
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      grid_[static_cast<std::size_t>(pos)] = v;
      fill(pos + 1);
    }
  }

  void emit() {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < box_.b; ++i) {
      std::vector<int> row;
      for (int j = 0; j < box_.a; ++j) {
        int v = grid_[static_cast<std::size_t>(i * box_.a + j)];
        if (v == 0) break;
        row.push_back(v);
      }
      if (row.empty()) break;
      rows.push_back(std::move(row));
    }
    visit_(PlanePartition(std::move(rows)));
  }

  BoxDims box_;
  const std::function<void(const PlanePartition&)>& visit_;
  std::vector<int> grid_;
};

std::vector<std::vector<int>> first_rows(const BoxDims& box) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    if (static_cast<int>(cur.size()) == box.a) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, box.c);
  return out;
}

}  // namespace

void for_each_pp(const BoxDims& box, const std::function<void(const PlanePartition&)>& visit) {
  PPFiller(box, visit).run();
}

void for_each_pp_parallel(const BoxDims& box, int jobs,
                          const std::function<void(int, const PlanePartition&)>& visit) {
  jobs = std::max(1, jobs);
  const auto rows = first_rows(box);
  auto work = [&](int worker) {
    std::function<void(const PlanePartition&)> bound = [&](const PlanePartition& pi) {
      visit(worker, pi);
    };
    for (std::size_t r = static_cast<std::size_t>(worker); r < rows.size();
         r += static_cast<std::size_t>(jobs)) {
      PPFiller(box, bound).run_from_first_row(rows[r]);
    }
  };
  if (jobs == 1) {
    work(0);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<PlanePartition> enumerate_pp(const BoxDims& box) {
  std::vector<PlanePartition> out;
  for_each_pp(box, [&](const PlanePartition& pi) { out.push_back(pi); });
  return out;
}

BigInt macmahon_count(const BoxDims& box) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= box.a; ++i) {
    for (int j = 1; j <= box.b; ++j) {
      for (int k = 1; k <= box.c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
    }
  }
  return num / den;
}

std::set<Cell> descent_set(const PlanePartition& pi) {
  std::set<Cell> des;
  for (int i = 0; i < pi.num_rows(); ++i) {
    for (int j = 0; j < pi.row_length(i); ++j) {
      if (pi.at(i, j) > pi.at(i + 1, j)) des.insert({i, j});
    }
  }
  return des;
}

long descent_count(const PlanePartition& pi) {
  long count = 0;
  for (int i = 0; i < pi.num_rows(); ++i) {
    for (int j = 0; j < pi.row_length(i); ++j) count += pi.at(i, j) > pi.at(i + 1, j);
  }
  return count;
}

int x_stat(const PlanePartition& pi, int level) {
  int count = 0;
  for (int j = 0; j < pi.row_length(0); ++j) {
    for (int i = 0; i < pi.num_rows() && pi.at(i, j) >= level; ++i) {
      if (pi.at(i, j) == level) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<int> column_contents(const PlanePartition& pi, int c) {
  // each column holds a given level at most once as a descent, so count descents by level
  std::vector<int> x(static_cast<std::size_t>(c), 0);
  for (int i = 0; i < pi.num_rows(); ++i) {
    for (int j = 0; j < pi.row_length(i); ++j) {
      int v = pi.at(i, j);
      if (v > pi.at(i + 1, j) && v <= c) ++x[static_cast<std::size_t>(v - 1)];
    }
  }
  return x;
}

std::string to_text(const PlanePartition& pi) {
  std::ostringstream out;
  for (const auto& row : pi.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

PlanePartition parse_plane_partition(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return PlanePartition(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("malformed plane partition: ") + e.what());
  }
}

}  // namespace dualg
