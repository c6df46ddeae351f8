#include "dualg/measures.hpp"

#include "dualg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dualg {

void DistTable::add(Outcome outcome, const Rational& p) {
  if (!exact_) throw std::logic_error("DistTable: exact entry added to a floating table");
  entries_.push_back({std::move(outcome), p, to_double(p)});
}

void DistTable::add(Outcome outcome, double p) {
  if (exact_) throw std::logic_error("DistTable: floating entry added to an exact table");
  entries_.push_back({std::move(outcome), Rational(0), p});
}

void DistTable::set_deficit(const Rational& d) {
  exact_deficit_ = d;
  deficit_ = to_double(d);
}

void DistTable::set_deficit(double d) {
  if (exact_) throw std::logic_error("DistTable: floating deficit on an exact table");
  deficit_ = d;
}

Rational DistTable::exact_total() const {
  Rational t = 0;
  for (const auto& e : entries_) t += e.exact;
  return t;
}

double DistTable::total() const {
  double t = 0.0;
  for (const auto& e : entries_) t += e.value;
  return t;
}

Rational DistTable::exact_probability(const Outcome& outcome) const {
  Rational p = 0;
  for (const auto& e : entries_) {
    if (e.outcome == outcome) p += e.exact;
  }
  return p;
}

double DistTable::probability(const Outcome& outcome) const {
  double p = 0.0;
  for (const auto& e : entries_) {
    if (e.outcome == outcome) p += e.value;
  }
  return p;
}

void DistTable::validate() const {
  for (const auto& e : entries_) {
    if (exact_ ? e.exact < 0 : e.value < 0.0) {
      throw std::logic_error("DistTable: negative probability at " + label(e.outcome));
    }
  }
  if (exact_ && exact_total() + exact_deficit_ != 1) {
    throw std::logic_error("DistTable: total plus deficit is " + to_string(exact_total() + exact_deficit_));
  }
  if (!exact_ && std::abs(total() + deficit_ - 1.0) > 1e-9) {
    throw std::logic_error("DistTable: floating total plus deficit deviates from 1");
  }
}

namespace {

std::string tuple_label(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string DistTable::label(const Outcome& outcome) const {
  if (kind_ == OutcomeKind::integer && outcome.size() == 1 && outcome[0].size() == 1) {
    return std::to_string(outcome[0][0]);
  }
  std::string s;
  for (std::size_t i = 0; i < outcome.size(); ++i) s += (i ? "|" : "") + tuple_label(outcome[i]);
  return s;
}

bool exact_tables_equal(const DistTable& lhs, const DistTable& rhs) {
  auto collect = [](const DistTable& t) {
    std::map<Outcome, Rational> m;
    for (const auto& e : t.entries()) m[e.outcome] += e.exact;
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
  };
  return lhs.exact() && rhs.exact() && collect(lhs) == collect(rhs);
}

namespace {

void check_budget(const BoxDims& box, const ExhaustiveOptions& opt) {
  const BigInt count = macmahon_count(box);
  if (count > opt.budget) {
    throw BudgetExceeded("exhaustive enumeration of PP(" + std::to_string(box.a) + "," + std::to_string(box.b) +
                         "," + std::to_string(box.c) + ") needs " + to_string(count) +
                         " plane partitions, budget is " + std::to_string(opt.budget));
  }
}

template <class F>
std::map<Outcome, long> pp_histogram(const BoxDims& box, const ExhaustiveOptions& opt, F&& f) {
  check_budget(box, opt);
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::map<Outcome, long>> per(static_cast<std::size_t>(jobs));
  for_each_pp_parallel(box, jobs, [&](int w, const PlanePartition& pi) { ++per[static_cast<std::size_t>(w)][f(pi)]; });
  std::map<Outcome, long> merged;
  for (const auto& m : per) {
    for (const auto& [k, v] : m) merged[k] += v;
  }
  return merged;
}

DistTable table_from_counts(OutcomeKind kind, const std::map<Outcome, long>& counts, const BigInt& z) {
  DistTable t(kind, true);
  for (const auto& [outcome, n] : counts) t.add(outcome, make_rational(BigInt(n), z));
  return t;
}

void check_slice_index(const BoxDims& box, int k) {
  if (k < 1 || k > std::min(box.b, box.c)) {
    throw std::invalid_argument("slice index k = " + std::to_string(k) + " must lie in [1, min(b,c)] = [1, " +
                                std::to_string(std::min(box.b, box.c)) + "]");
  }
}

void check_levels(const BoxDims& box, std::span<const int> levels) {
  for (int l : levels) {
    if (l < 1 || l > box.c) throw std::invalid_argument("level " + std::to_string(l) + " outside [1, c]");
  }
}

}  // namespace

PgfCheck gamma_pgf_check(const BoxDims& box, std::span<const Rational> x, const ExhaustiveOptions& opt) {
  const int k = static_cast<int>(x.size());
  if (k > box.c) throw std::invalid_argument("gamma_pgf_check: more values than levels");
  auto counts = pp_histogram(box, opt, [&](const PlanePartition& pi) {
    std::vector<int> g(static_cast<std::size_t>(k));
    for (int l = 1; l <= k; ++l) g[static_cast<std::size_t>(l - 1)] = x_stat(pi, l);
    return Outcome{g};
  });
  Rational lhs = 0;
  for (const auto& [outcome, n] : counts) {
    Rational term = n;
    for (int l = 0; l < k; ++l) {
      term *= pow(x[static_cast<std::size_t>(l)], static_cast<unsigned long>(outcome[0][static_cast<std::size_t>(l)]));
    }
    lhs += term;
  }
  lhs /= Rational(macmahon_count(box));
  return {lhs, normalized_schur(Partition::rectangle(box.a, box.b), x, box.n())};
}

DistTable gamma_joint_law(const BoxDims& box, std::span<const int> levels, const ExhaustiveOptions& opt) {
  check_levels(box, levels);
  auto counts = pp_histogram(box, opt, [&](const PlanePartition& pi) {
    std::vector<int> g;
    for (int l : levels) g.push_back(x_stat(pi, l));
    return Outcome{g};
  });
  return table_from_counts(OutcomeKind::vector, counts, macmahon_count(box));
}

DistTable gamma_law_table(const BoxDims& box, int exact_max_n) {
  GammaLaw law = gamma_law(box, exact_max_n);
  DistTable t(OutcomeKind::integer, law.exact);
  for (int n = 0; n <= box.a; ++n) {
    if (law.exact) {
      t.add(Outcome{{n}}, law.exact_probs[static_cast<std::size_t>(n)]);
    } else {
      t.add(Outcome{{n}}, law.probs[static_cast<std::size_t>(n)]);
    }
  }
  return t;
}

Rational GMeasureParams::inverse_normalizer() const {
  Rational r = 1;
  for (const auto& v : q) r *= pow(1 - v, static_cast<unsigned long>(b));
  return r;
}

GMeasureParams make_gmeasure(int b, int c, std::vector<Rational> q) {
  if (b < 1 || c < 1) throw std::invalid_argument("g-measure: b and c must be >= 1");
  if (static_cast<int>(q.size()) != c) {
    throw std::invalid_argument("g-measure: expected " + std::to_string(c) + " parameters q, got " +
                                std::to_string(q.size()));
  }
  for (const auto& v : q) {
    if (v <= 0 || v >= 1) throw std::invalid_argument("g-measure: q = " + to_string(v) + " is not in (0,1)");
  }
  return {b, c, std::move(q)};
}

Rational g_measure_shape_prob(const GMeasureParams& params, const Partition& lambda) {
  if (lambda.length() > params.b) {
    throw std::invalid_argument("g-measure: shape " + lambda.to_string() + " has more than b = " +
                                std::to_string(params.b) + " rows (probability 0)");
  }
  return grothendieck_eval(lambda, params.q) * params.inverse_normalizer();
}

DistTable g_measure_shape_law(const GMeasureParams& params, int max_first) {
  DistTable t(OutcomeKind::partition, true);
  for (const auto& lam : partitions_in_box(max_first, params.b)) {
    t.add(Outcome{lam.parts()}, g_measure_shape_prob(params, lam));
  }
  t.set_deficit(1 - t.exact_total());
  return t;
}

Rational first_part_law_schur(const GMeasureParams& params, int a) {
  if (a < 0) throw std::invalid_argument("first_part_law_schur: a must be >= 0");
  return schur_eval(Partition::rectangle(a, params.b), {params.b, params.q}) * params.inverse_normalizer();
}

Rational first_part_law_toeplitz(const GMeasureParams& params, int a) {
  if (a < 1) throw std::invalid_argument("first_part_law_toeplitz: a must be >= 1");
  const auto e = elementary_sequence(params.c, {0, params.q});
  auto symbol = [&](long k) {
    Rational s = 0;
    for (long l = 0; l <= params.c; ++l) s += Rational(binomial(params.b, l + k)) * e[static_cast<std::size_t>(l)];
    return s;
  };
  std::map<long, Rational> cache;
  SquareMatrix m(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      long k = i - j;
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, symbol(k)).first;
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = it->second;
    }
  }
  return determinant(m) * params.inverse_normalizer();
}

DistTable first_part_law_table(const GMeasureParams& params, int max_a) {
  DistTable t(OutcomeKind::integer, true);
  Rational prev = 0;
  for (int a = 0; a <= max_a; ++a) {
    Rational cdf = first_part_law_schur(params, a);
    t.add(Outcome{{a}}, cdf - prev);
    prev = cdf;
  }
  t.set_deficit(1 - prev);
  return t;
}

Partition slice_extract(const PlanePartition& pi, const BoxDims& box, int k) {
  check_slice_index(box, k);
  if (!pi.fits(box)) throw std::invalid_argument("slice_extract: plane partition does not fit the box");
  std::vector<int> y(static_cast<std::size_t>(k), 0);
  for (int t = 1; t <= k; ++t) {
    const int row = box.b - k + t - 1;
    int count = 0;
    while (count < pi.row_length(row) && pi.at(row, count) >= t) ++count;
    y[static_cast<std::size_t>(t - 1)] = count;
  }
  return Partition(std::move(y));
}

namespace {

// μ^c: complement of μ (padded to c parts) inside (a^c).
Partition slice_complement(const Partition& mu, const BoxDims& box) { return mu.complement(box.a, box.c); }

std::vector<Partition> slice_support(const BoxDims& box, int k) { return partitions_in_box(box.a, k); }

}  // namespace

SliceLaw slice_law(const BoxDims& box, int k, SliceFormula formula, const ExhaustiveOptions& opt) {
  check_slice_index(box, k);
  SliceLaw law{k, box, DistTable(OutcomeKind::partition, true)};
  const BigInt z = macmahon_count(box);
  switch (formula) {
    case SliceFormula::exhaustive: {
      auto counts = pp_histogram(box, opt, [&](const PlanePartition& pi) {
        return Outcome{slice_extract(pi, box, k).parts()};
      });
      law.table = table_from_counts(OutcomeKind::partition, counts, z);
      break;
    }
    case SliceFormula::schur_pair: {
      std::map<Outcome, Rational> probs;
      for (const auto& mu : slice_support(box, k)) {
        BigInt w = schur_dim(mu, k) * schur_dim(slice_complement(mu, box), box.b + box.c - k);
        probs[Outcome{mu.parts()}] = make_rational(w, z);
      }
      for (const auto& [o, p] : probs) law.table.add(o, p);
      break;
    }
    case SliceFormula::ensemble: {
      const int a = box.a, b = box.b, c = box.c;
      auto weight = [&](int y) {
        return make_rational(factorial(a + b - 1 - y) * factorial(c - k + y), factorial(y) * factorial(a + k - 1 - y));
      };
      std::map<Outcome, Rational> probs;
      Rational total = 0;
      for (const auto& mu : slice_support(box, k)) {
        std::vector<int> y(static_cast<std::size_t>(k));
        for (int i = 1; i <= k; ++i) y[static_cast<std::size_t>(i - 1)] = mu.part(i) + k - i;
        Rational p = 1;
        for (int i = 0; i < k; ++i) {
          p *= weight(y[static_cast<std::size_t>(i)]);
          for (int j = i + 1; j < k; ++j) {
            const long d = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
            p *= d * d;
          }
        }
        probs[Outcome{mu.parts()}] = p;
        total += p;
      }
      for (const auto& [o, p] : probs) law.table.add(o, p / total);
      break;
    }
  }
  return law;
}

namespace {

void for_each_composition(int total, int parts, int max_part, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 0) {
      if (left == 0) f(cur);
      return;
    }
    for (int v = 0; v <= std::min(left, max_part); ++v) {
      cur.push_back(v);
      rec(left - v, slots - 1);
      cur.pop_back();
    }
  };
  rec(total, parts);
}

}  // namespace

DistTable joint_corner_slice_law(const BoxDims& box, int k) {
  check_slice_index(box, k);
  const BigInt z = macmahon_count(box);
  std::map<Outcome, Rational> probs;
  for (const auto& mu : slice_support(box, k)) {
    const BigInt tail = schur_dim(slice_complement(mu, box), box.b + box.c - k);
    for_each_composition(static_cast<int>(mu.size()), k, box.a, [&](const std::vector<int>& g) {
      BigInt kn = kostka(mu, g);
      if (kn != 0) probs[Outcome{g, mu.parts()}] = make_rational(kn * tail, z);
    });
  }
  DistTable t(OutcomeKind::joint, true);
  for (const auto& [o, p] : probs) t.add(o, p);
  return t;
}

DistTable joint_corner_slice_exhaustive(const BoxDims& box, int k, const ExhaustiveOptions& opt) {
  check_slice_index(box, k);
  auto counts = pp_histogram(box, opt, [&](const PlanePartition& pi) {
    std::vector<int> g(static_cast<std::size_t>(k));
    for (int l = 1; l <= k; ++l) g[static_cast<std::size_t>(l - 1)] = x_stat(pi, l);
    return Outcome{g, slice_extract(pi, box, k).parts()};
  });
  return table_from_counts(OutcomeKind::joint, counts, macmahon_count(box));
}

MonotonicityResult dominance_monotonicity_check(const BoxDims& box, int k, const ExhaustiveOptions& opt) {
  check_slice_index(box, k);
  std::vector<int> levels(static_cast<std::size_t>(k));
  std::iota(levels.begin(), levels.end(), 1);
  DistTable law = gamma_joint_law(box, levels, opt);
  MonotonicityResult res;
  const auto& es = law.entries();
  for (const auto& alpha : es) {
    auto sa = alpha.outcome[0];
    std::sort(sa.rbegin(), sa.rend());
    for (const auto& beta : es) {
      auto sb = beta.outcome[0];
      std::sort(sb.rbegin(), sb.rend());
      if (!dominance_leq(sa, sb)) continue;
      ++res.pairs_checked;
      if (alpha.exact < beta.exact && res.holds) {
        res.holds = false;
        res.witness = "P" + law.label(alpha.outcome) + " = " + to_string(alpha.exact) + " < P" +
                      law.label(beta.outcome) + " = " + to_string(beta.exact);
      }
    }
  }
  return res;
}

TruncatedLppLaw geometric_lpp_law_truncated(int b, int c, const Rational& q, int max_entry) {
  if (b < 1 || c < 1 || max_entry < 0) throw std::invalid_argument("geometric_lpp_law_truncated: bad frame");
  if (q <= 0 || q >= 1) throw std::invalid_argument("geometric_lpp_law_truncated: q must be in (0,1)");
  const int cells = b * c;
  const double combos = std::pow(max_entry + 1.0, cells);
  if (combos > 5e7) throw BudgetExceeded("geometric_lpp_law_truncated: too many matrices");

  // bucket by (λ, total weight); the product measure only depends on the total
  std::map<std::pair<std::vector<int>, int>, long> buckets;
  std::vector<int> w(static_cast<std::size_t>(cells), 0);
  std::vector<long> g(static_cast<std::size_t>(cells));
  while (true) {
    int sum = 0;
    for (int i = 0; i < b; ++i) {
      for (int j = 0; j < c; ++j) {
        const auto idx = static_cast<std::size_t>(i * c + j);
        long up = i > 0 ? g[idx - static_cast<std::size_t>(c)] : 0;
        long left = j > 0 ? g[idx - 1] : 0;
        g[idx] = std::max(up, left) + w[idx];
        sum += w[idx];
      }
    }
    std::vector<int> lambda(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) lambda[static_cast<std::size_t>(i)] = static_cast<int>(g[static_cast<std::size_t>((b - 1 - i) * c + c - 1)]);
    ++buckets[{Partition(lambda).parts(), sum}];

    int pos = 0;
    while (pos < cells && w[static_cast<std::size_t>(pos)] == max_entry) w[static_cast<std::size_t>(pos++)] = 0;
    if (pos == cells) break;
    ++w[static_cast<std::size_t>(pos)];
  }

  const Rational base = pow(1 - q, static_cast<unsigned long>(cells));
  std::map<Outcome, Rational> probs;
  for (const auto& [key, count] : buckets) {
    probs[Outcome{key.first}] += base * pow(q, static_cast<unsigned long>(key.second)) * Rational(count);
  }
  TruncatedLppLaw out{DistTable(OutcomeKind::partition, true), max_entry};
  for (const auto& [o, p] : probs) out.table.add(o, p);
  out.table.set_deficit(1 - out.table.exact_total());
  return out;
}

}  // namespace dualg
