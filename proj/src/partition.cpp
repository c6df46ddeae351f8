#include "dualg/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dualg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

Partition Partition::rectangle(int width, int height) {
  if (width < 0 || height < 0) throw std::invalid_argument("Partition::rectangle: negative size");
  if (width == 0 || height == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(first()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw std::invalid_argument("Partition::padded: partition too long");
  std::vector<int> v(parts_);
  v.resize(static_cast<std::size_t>(n), 0);
  return v;
}

Partition Partition::complement(int width, int height) const {
  if (!Partition::rectangle(width, height).contains(*this)) {
    throw std::invalid_argument("Partition::complement: partition not inside the rectangle");
  }
  std::vector<int> v(static_cast<std::size_t>(height));
  for (int i = 0; i < height; ++i) v[static_cast<std::size_t>(i)] = width - part(height - i);
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_in_box(int width, int height) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == height) return;
    for (int p = 1; p <= bound; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  if (width >= 0 && height >= 0) rec(rec, width);
  return out;
}

namespace {

int hook(const Partition& lambda, const Partition& conj, int i, int j) {
  return lambda.part(i) - j + conj.part(j) - i + 1;
}

}  // namespace

BigInt schur_dim(const Partition& lambda, int n) {
  if (n < lambda.length()) throw std::invalid_argument("schur_dim: fewer variables than parts");
  const Partition conj = lambda.conjugate();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= n + j - i;
      den *= hook(lambda, conj, i, j);
    }
  }
  return num / den;
}

double log_schur_dim(const Partition& lambda, int n) {
  if (n < lambda.length()) throw std::invalid_argument("log_schur_dim: fewer variables than parts");
  const Partition conj = lambda.conjugate();
  double acc = 0.0;
  for (int i = 1; i <= lambda.length(); ++i) {
    acc += log_factorial(n - i + lambda.part(i)) - log_factorial(n - i);
    for (int j = 1; j <= lambda.part(i); ++j) acc -= std::log(static_cast<double>(hook(lambda, conj, i, j)));
  }
  return acc;
}

double log_schur_dim_rect_tail(int width, int rows, std::span<const int> tail, int n) {
  std::vector<int> t;
  for (int x : tail) {
    if (x < 0 || x > width) throw std::invalid_argument("log_schur_dim_rect_tail: bad tail");
    if (x > 0) t.push_back(x);
  }
  if (!std::is_sorted(t.rbegin(), t.rend())) {
    throw std::invalid_argument("log_schur_dim_rect_tail: tail must be weakly decreasing");
  }
  if (width == 0) rows = 0;
  const int len = rows + static_cast<int>(t.size());
  if (n < len) throw std::invalid_argument("log_schur_dim_rect_tail: fewer variables than parts");

  double acc = 0.0;
  // contents
  for (int i = 1; i <= len; ++i) {
    int row_len = i <= rows ? width : t[static_cast<std::size_t>(i - rows - 1)];
    acc += log_factorial(n - i + row_len) - log_factorial(n - i);
  }
  // hooks of the rectangle rows: T(j) = #{tail parts >= j} is constant on (t_{u+1}, t_u]
  const int s = static_cast<int>(t.size());
  for (int i = 1; i <= rows; ++i) {
    for (int u = 0; u <= s; ++u) {
      int hi = u == 0 ? width : t[static_cast<std::size_t>(u - 1)];
      int lo = (u == s ? 0 : t[static_cast<std::size_t>(u)]) + 1;
      if (lo > hi) continue;
      int big_h = width + rows - i + u + 1;
      acc -= log_factorial(big_h - lo) - log_factorial(big_h - hi - 1);
    }
  }
  // hooks of the tail rows only see the tail itself
  if (!t.empty()) {
    Partition tp(t);
    Partition tc = tp.conjugate();
    for (int i = 1; i <= tp.length(); ++i) {
      for (int j = 1; j <= tp.part(i); ++j) acc -= std::log(static_cast<double>(hook(tp, tc, i, j)));
    }
  }
  return acc;
}

BigInt kostka(const Partition& mu, std::span<const int> content) {
  long total = 0;
  for (int g : content) {
    if (g < 0) throw std::invalid_argument("kostka: negative content entry");
    total += g;
  }
  if (total != mu.size()) return 0;

  const std::vector<int> target = mu.parts();
  const std::size_t rows = target.size();
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;

  // Letters are placed one at a time; letter t occupies a horizontal strip.
  auto place = [&](auto&& self, std::size_t letter, const std::vector<int>& shape) -> BigInt {
    if (letter == content.size()) return shape == target ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(letter, shape);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    BigInt count = 0;
    std::vector<int> next(shape);
    auto strip = [&](auto&& strip_self, std::size_t row, int remaining) -> void {
      if (row == rows) {
        if (remaining == 0) count += self(self, letter + 1, next);
        return;
      }
      int lo = shape[row];
      int hi = target[row];
      if (row > 0) hi = std::min(hi, shape[row - 1]);
      for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
        next[row] = v;
        strip_self(strip_self, row + 1, remaining - (v - lo));
      }
      next[row] = shape[row];
    };
    strip(strip, 0, content[letter]);
    memo.emplace(std::move(key), count);
    return count;
  };
  return place(place, 0, std::vector<int>(rows, 0));
}

bool dominance_leq(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("dominance_leq: length mismatch");
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    sa += alpha[i];
    sb += beta[i];
    if (sb < sa) return false;
  }
  return sa == sb;
}

}  // namespace dualg
