#include "dualg/symfunc.hpp"

#include "dualg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace dualg {

std::vector<Rational> elementary_sequence(long max_k, const EvalPoint& point) {
  if (point.ones < 0) throw std::invalid_argument("EvalPoint: negative multiplicity of 1");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, max_k + 1)));
  if (max_k < 0) return out;
  // (1+z)^ones contributes binomials directly, the remaining factors are multiplied in
  std::vector<UniPoly> factors;
  std::vector<Rational> ones_part(static_cast<std::size_t>(std::min<long>(point.ones, max_k) + 1));
  for (long k = 0; k < static_cast<long>(ones_part.size()); ++k) {
    ones_part[static_cast<std::size_t>(k)] = Rational(binomial(point.ones, k));
  }
  factors.emplace_back(std::move(ones_part));
  for (const auto& x : point.values) factors.push_back(UniPoly::linear_factor(x));
  UniPoly prod = poly_product_coeffs(factors, max_k);
  for (long k = 0; k <= max_k; ++k) out[static_cast<std::size_t>(k)] = prod.coeff(k);
  return out;
}

Rational elementary(long k, const EvalPoint& point) {
  if (k < 0) return 0;
  return elementary_sequence(k, point)[static_cast<std::size_t>(k)];
}

namespace {

Rational e_at(const std::vector<Rational>& e, long k) {
  if (k < 0 || k >= static_cast<long>(e.size())) return 0;
  return e[static_cast<std::size_t>(k)];
}

}  // namespace

Rational schur_eval(const Partition& lambda, const EvalPoint& point) {
  if (lambda.empty()) return 1;
  const Partition conj = lambda.conjugate();
  const int n = lambda.first();
  const long top = conj.first() + n;
  const auto e = elementary_sequence(top, point);
  SquareMatrix m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = e_at(e, conj.part(i) - i + j);
    }
  }
  return determinant(m);
}

Rational grothendieck_eval(const Partition& lambda, std::span<const Rational> x) {
  if (lambda.empty()) return 1;
  const Partition conj = lambda.conjugate();
  const int n = lambda.first();
  std::map<int, std::vector<Rational>> e_by_ones;
  SquareMatrix m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int ones = conj.part(i) - 1;
    auto it = e_by_ones.find(ones);
    if (it == e_by_ones.end()) {
      EvalPoint p{ones, std::vector<Rational>(x.begin(), x.end())};
      it = e_by_ones.emplace(ones, elementary_sequence(conj.first() + n, p)).first;
    }
    for (int j = 1; j <= n; ++j) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = e_at(it->second, conj.part(i) - i + j);
    }
  }
  return determinant(m);
}

Rational grothendieck_eval_combinatorial(const Partition& lambda, std::span<const Rational> x,
                                         int max_entry, long budget) {
  if (max_entry < 0) throw std::invalid_argument("grothendieck_eval_combinatorial: negative max entry");
  if (static_cast<int>(x.size()) < max_entry) {
    throw std::invalid_argument("grothendieck_eval_combinatorial: need " + std::to_string(max_entry) +
                                " values, got " + std::to_string(x.size()));
  }
  if (lambda.empty()) return 1;
  if (max_entry == 0) return 0;

  std::vector<Cell> cells;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i + 1); ++j) cells.push_back({i, j});
  }
  const int width = lambda.first();
  std::vector<int> grid(static_cast<std::size_t>(lambda.length() * width), 0);
  auto at = [&](int i, int j) -> int& { return grid[static_cast<std::size_t>(i * width + j)]; };

  std::map<std::vector<int>, long> monomials;
  long visited = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      if (++visited > budget) {
        throw BudgetExceeded("grothendieck_eval_combinatorial: more than " + std::to_string(budget) +
                             " fillings");
      }
      std::vector<int> expo(static_cast<std::size_t>(max_entry), 0);
      for (int j = 0; j < width; ++j) {
        int last = 0;
        for (int i = 0; i < lambda.length() && j < lambda.part(i + 1); ++i) {
          if (at(i, j) != last) ++expo[static_cast<std::size_t>(at(i, j) - 1)];
          last = at(i, j);
        }
      }
      ++monomials[expo];
      return;
    }
    auto [i, j] = cells[idx];
    int bound = max_entry;
    if (j > 0) bound = std::min(bound, at(i, j - 1));
    if (i > 0) bound = std::min(bound, at(i - 1, j));
    for (int v = 1; v <= bound; ++v) {
      at(i, j) = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);

  Rational total = 0;
  for (const auto& [expo, count] : monomials) {
    Rational term = count;
    for (std::size_t l = 0; l < expo.size(); ++l) term *= pow(x[l], static_cast<unsigned long>(expo[l]));
    total += term;
  }
  return total;
}

Rational normalized_schur(const Partition& rho, std::span<const Rational> x, int n) {
  const int k = static_cast<int>(x.size());
  if (n < k || n < rho.length()) {
    throw std::invalid_argument("normalized_schur: N = " + std::to_string(n) + " is smaller than the " +
                                "number of values or the length of the partition");
  }
  EvalPoint p{n - k, std::vector<Rational>(x.begin(), x.end())};
  return schur_eval(rho, p) / Rational(schur_dim(rho, n));
}

namespace {

Partition rect_with_tail(int a, int rows, std::initializer_list<int> tail) {
  std::vector<int> parts(static_cast<std::size_t>(std::max(rows, 0)), a);
  for (int t : tail) parts.push_back(t);
  return Partition(std::move(parts));
}

}  // namespace

UniPoly gamma_law_polynomial(const BoxDims& box) {
  const int a = box.a, b = box.b, n = box.n();
  const BigInt total = schur_dim(Partition::rectangle(a, b), n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(a + 1));
  for (int m = 0; m <= a; ++m) {
    BigInt dim = schur_dim(rect_with_tail(a, b - 1, {m}), n - 1);
    coeffs[static_cast<std::size_t>(a - m)] = make_rational(dim, total);
  }
  return UniPoly(std::move(coeffs));
}

namespace {

std::vector<double> normalize_logs(const std::vector<double>& logs) {
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> p(logs.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) sum += p[i] = std::exp(logs[i] - top);
  for (auto& v : p) v /= sum;
  return p;
}

}  // namespace

std::vector<double> gamma_law_floating(const BoxDims& box) {
  const int a = box.a, b = box.b, n = box.n();
  std::vector<double> logs(static_cast<std::size_t>(a + 1));
  for (int m = 0; m <= a; ++m) {
    const int tail[] = {m};
    logs[static_cast<std::size_t>(a - m)] = log_schur_dim_rect_tail(a, b - 1, tail, n - 1);
  }
  return normalize_logs(logs);
}

GammaLaw gamma_law(const BoxDims& box, int exact_max_n) {
  GammaLaw law;
  if (box.n() <= exact_max_n) {
    UniPoly poly = gamma_law_polynomial(box);
    for (int k = 0; k <= box.a; ++k) {
      law.exact_probs.push_back(poly.coeff(k));
      law.probs.push_back(to_double(poly.coeff(k)));
    }
  } else {
    law.exact = false;
    law.probs = gamma_law_floating(box);
  }
  return law;
}

namespace {

// Visits (n1, n2, κ tail) for the two-step branching of (a^b) with N-2 remaining ones.
template <class Visit>
void for_each_pair_term(const BoxDims& box, Visit&& visit) {
  if (box.c < 2) throw std::invalid_argument("pair law needs c >= 2");
  const int a = box.a, b = box.b;
  for (int m = 0; m <= a; ++m) {
    if (b == 1) {
      for (int r = 0; r <= m; ++r) visit(a - m, m - r, -1, r);
    } else {
      for (int p = m; p <= a; ++p) {
        for (int r = 0; r <= m; ++r) visit(a - m, a + m - p - r, p, r);
      }
    }
  }
}

}  // namespace

std::vector<std::vector<double>> gamma_pair_law_floating(const BoxDims& box) {
  const int a = box.a, b = box.b, n = box.n();
  std::vector<double> logs;
  std::vector<std::pair<int, int>> where;
  for_each_pair_term(box, [&](int n1, int n2, int p, int r) {
    std::vector<int> tail;
    if (p >= 0) tail.push_back(p);
    tail.push_back(r);
    logs.push_back(log_schur_dim_rect_tail(a, std::max(b - 2, 0), tail, n - 2));
    where.emplace_back(n1, n2);
  });
  auto probs = normalize_logs(logs);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(a + 1),
                                       std::vector<double>(static_cast<std::size_t>(a + 1), 0.0));
  for (std::size_t t = 0; t < probs.size(); ++t) {
    out[static_cast<std::size_t>(where[t].first)][static_cast<std::size_t>(where[t].second)] += probs[t];
  }
  return out;
}

std::vector<std::vector<Rational>> gamma_pair_law_exact(const BoxDims& box) {
  const int a = box.a, b = box.b, n = box.n();
  const Rational total(schur_dim(Partition::rectangle(a, b), n));
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(a + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(a + 1)));
  for_each_pair_term(box, [&](int n1, int n2, int p, int r) {
    Partition kappa = p >= 0 ? rect_with_tail(a, b - 2, {p, r}) : rect_with_tail(a, 0, {r});
    out[static_cast<std::size_t>(n1)][static_cast<std::size_t>(n2)] += Rational(schur_dim(kappa, n - 2)) / total;
  });
  return out;
}

}  // namespace dualg
