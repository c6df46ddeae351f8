#include "dualg/verify.hpp"

#include "dualg/asymptotics.hpp"
#include "dualg/bijection.hpp"
#include "dualg/measures.hpp"
#include "dualg/sampling.hpp"
#include "dualg/simd/lpp_kernels.hpp"
#include "dualg/stats.hpp"
#include "dualg/symfunc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dualg {

namespace {

struct Outcome2 {
  bool ok = true;
  std::string detail;
};

CheckResult timed(std::string id, std::string title, const std::function<Outcome2()>& body) {
  CheckResult r{std::move(id), std::move(title), false, "", 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome2 o = body();
    r.passed = o.ok;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Rational random_unit(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> den(2, 11);
  const int d = den(gen);
  std::uniform_int_distribution<int> num(1, d - 1);
  return make_rational(num(gen), d);
}

std::vector<Rational> random_units(std::mt19937_64& gen, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(random_unit(gen));
  return v;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::vector<BoxDims> boxes_up_to(int n) {
  std::vector<BoxDims> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) out.push_back(make_box(a, b, c));
  return out;
}

std::vector<int> first_levels(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

const PlanePartition& example_pp() {
  static const PlanePartition pi{{4, 4, 2}, {4, 2, 1}, {2, 2}};
  return pi;
}

const NMatrix& example_matrix() {
  static const NMatrix d{{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}};
  return d;
}

const PlanePartition& slice_figure() {
  static const PlanePartition pi{{3, 3, 2, 2, 2}, {3, 2, 2, 2}, {2, 2, 1, 1}, {1, 1}};
  return pi;
}

// ---- shared bodies ----

Outcome2 enumeration_vs_product(int max_side, int jobs) {
  long boxes = 0;
  for (const BoxDims& box : boxes_up_to(max_side)) {
    std::vector<long> per_worker(static_cast<std::size_t>(std::max(jobs, 1)), 0);
    for_each_pp_parallel(box, jobs, [&](int w, const PlanePartition&) { ++per_worker[static_cast<std::size_t>(w)]; });
    const long n = std::accumulate(per_worker.begin(), per_worker.end(), 0L);
    if (BigInt(n) != macmahon_count(box)) {
      return {false, "box (" + std::to_string(box.a) + "," + std::to_string(box.b) + "," + std::to_string(box.c) +
                         "): enumerated " + std::to_string(n) + ", product " + to_string(macmahon_count(box))};
    }
    ++boxes;
  }
  return {true, std::to_string(boxes) + " boxes"};
}

Outcome2 bijection_identities(const BoxDims& box) {
  long n = 0;
  std::string bad;
  const Frame frame{box.b, box.c};
  for_each_pp(box, [&](const PlanePartition& pi) {
    ++n;
    if (!bad.empty()) return;
    const NMatrix d = phi(pi, frame);
    if (phi_inverse(d) != pi) bad = "round trip fails";
    for (int l = 1; l <= box.c && bad.empty(); ++l) {
      if (d.column_sum(l - 1) != x_stat(pi, l)) bad = "column sum fails at level " + std::to_string(l);
    }
    if (bad.empty() && shape_from_matrix(d) != pi.shape()) bad = "shape identity fails";
    if (!bad.empty()) bad += " on\n" + to_text(pi);
  });
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(n) + " plane partitions"};
}

Outcome2 box_correspondence(int max_side) {
  long checked = 0;
  for (const BoxDims& box : boxes_up_to(max_side)) {
    long inside = 0;
    bool ok = true;
    for_each_pp(make_box(box.a + 1, box.b, box.c), [&](const PlanePartition& pi) {
      const bool fits = pi.fits(box);
      if (fits != is_bounded(phi(pi, Frame{box.b, box.c}), box.a)) ok = false;
      inside += fits;
      ++checked;
    });
    if (!ok || BigInt(inside) != macmahon_count(box)) {
      return {false, "box (" + std::to_string(box.a) + "," + std::to_string(box.b) + "," + std::to_string(box.c) + ")"};
    }
  }
  return {true, std::to_string(checked) + " plane partitions in enlarged boxes"};
}

Outcome2 jacobi_trudi_vs_combinatorial(int side, int points, std::mt19937_64& gen) {
  long evals = 0;
  for (const auto& lam : partitions_in_box(side, side)) {
    for (int p = 0; p < points; ++p) {
      const auto x = random_units(gen, side);
      const Rational det = grothendieck_eval(lam, x);
      const Rational sum = grothendieck_eval_combinatorial(lam, x, side);
      if (det != sum) return {false, "λ = " + lam.to_string() + ": " + to_string(det) + " vs " + to_string(sum)};
      ++evals;
    }
  }
  return {true, std::to_string(evals) + " evaluations"};
}

Outcome2 coincidence(int max_side, int max_vars, std::mt19937_64& gen) {
  long evals = 0;
  for (int a = 1; a <= max_side; ++a)
    for (int b = 1; b <= max_side; ++b)
      for (int n = 1; n <= max_vars; ++n) {
        const auto x = random_units(gen, n);
        const Partition rho = Partition::rectangle(a, b);
        if (grothendieck_eval(rho, x) != schur_eval(rho, EvalPoint{b - 1, x})) {
          return {false, "rectangle " + rho.to_string() + " with " + std::to_string(n) + " variables"};
        }
        ++evals;
      }
  return {true, std::to_string(evals) + " rectangles and point counts"};
}

Outcome2 pgf_identity(std::span<const BoxDims> boxes, int points, std::mt19937_64& gen, int jobs) {
  long evals = 0;
  for (const BoxDims& box : boxes) {
    for (int p = 0; p < points; ++p) {
      const auto x = random_units(gen, box.c);
      const PgfCheck r = gamma_pgf_check(box, x, {jobs, 50'000'000});
      if (r.lhs != r.rhs) return {false, "lhs " + to_string(r.lhs) + " vs rhs " + to_string(r.rhs)};
      ++evals;
    }
  }
  return {true, std::to_string(evals) + " points"};
}

Outcome2 exchangeability(int max_side, int jobs) {
  long tables = 0;
  for (const BoxDims& box : boxes_up_to(max_side)) {
    const auto levels = first_levels(box.c);
    const DistTable t = gamma_joint_law(box, levels, {jobs, 50'000'000});
    for (const auto& e : t.entries()) {
      auto perm = e.outcome[0];
      std::sort(perm.begin(), perm.end());
      do {
        if (t.exact_probability(Outcome{perm}) != e.exact) {
          return {false, "box (" + std::to_string(box.a) + "," + std::to_string(box.b) + "," +
                             std::to_string(box.c) + ") at " + t.label(e.outcome)};
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    ++tables;
  }
  return {true, std::to_string(tables) + " joint tables"};
}

Outcome2 toeplitz_vs_schur(int max_a, int max_b, int max_c, std::mt19937_64& gen) {
  long evals = 0;
  for (int b = 1; b <= max_b; ++b)
    for (int c = 1; c <= max_c; ++c) {
      const auto params = make_gmeasure(b, c, random_units(gen, c));
      Rational prev = 0;
      for (int a = 0; a <= max_a; ++a) {
        const Rational s = first_part_law_schur(params, a);
        if (a >= 1) {
          const Rational t = first_part_law_toeplitz(params, a);
          if (s != t) return {false, "b=" + std::to_string(b) + " c=" + std::to_string(c) + " a=" + std::to_string(a)};
          ++evals;
        }
        if (s < prev || s > 1 || s < 0) return {false, "CDF not monotone at a=" + std::to_string(a)};
        prev = s;
      }
    }
  return {true, std::to_string(evals) + " determinant pairs, CDF monotone"};
}

Outcome2 slice_formulas(int max_side, int jobs) {
  long laws = 0;
  for (const BoxDims& box : boxes_up_to(max_side)) {
    for (int k = 1; k <= std::min(box.b, box.c); ++k) {
      const auto ex = slice_law(box, k, SliceFormula::exhaustive, {jobs, 50'000'000});
      const auto sp = slice_law(box, k, SliceFormula::schur_pair);
      const auto en = slice_law(box, k, SliceFormula::ensemble);
      ex.table.validate();
      if (!exact_tables_equal(ex.table, sp.table) || !exact_tables_equal(ex.table, en.table)) {
        return {false, "box (" + std::to_string(box.a) + "," + std::to_string(box.b) + "," + std::to_string(box.c) +
                           ") k=" + std::to_string(k)};
      }
      ++laws;
    }
  }
  return {true, std::to_string(laws) + " slice laws"};
}

Outcome2 monotonicity(std::span<const BoxDims> boxes, int jobs) {
  long pairs = 0;
  for (const BoxDims& box : boxes) {
    for (int k = 1; k <= std::min(box.b, box.c); ++k) {
      const auto r = dominance_monotonicity_check(box, k, {jobs, 50'000'000});
      if (!r.holds) return {false, r.witness};
      pairs += r.pairs_checked;
    }
  }
  return {true, std::to_string(pairs) + " dominance pairs"};
}

Outcome2 chi_square_outcome(const ChiSquareResult& r, const std::string& what) {
  return {r.passed, what + " chi2 " + fmt(r.statistic) + " < " + fmt(r.critical) + " (dof " + std::to_string(r.dof) +
                        ", p " + fmt(r.p_value, 3) + ")"};
}

ChiSquareResult geometric_pmf_test(std::uint64_t seed, double q, int draws) {
  RngStream rng(seed, 1);
  const int bins = 40;
  std::vector<std::int64_t> hist(bins, 0);
  std::int64_t rest = 0;
  for (int i = 0; i < draws; ++i) {
    const auto k = sample_geometric(q, rng);
    if (k < bins) ++hist[static_cast<std::size_t>(k)];
    else ++rest;
  }
  std::vector<double> pmf;
  for (int k = 0; k < bins; ++k) pmf.push_back((1 - q) * std::pow(q, k));
  return chi_square_test(hist, pmf, rest);
}

ChiSquareResult g_shape_test(std::uint64_t seed, int draws) {
  RngStream rng(seed, 2);
  std::map<Partition, std::int64_t> hist;
  for (int i = 0; i < draws; ++i) ++hist[sample_g_measure(2, 2, 0.5, rng).shape()];
  const auto params = make_gmeasure(2, 2, {make_rational(1, 2), make_rational(1, 2)});
  std::vector<std::int64_t> obs;
  std::vector<double> exp;
  std::int64_t seen = 0;
  for (const auto& lam : partitions_in_box(12, 2)) {
    obs.push_back(hist[lam]);
    exp.push_back(to_double(g_measure_shape_prob(params, lam)));
    seen += hist[lam];
  }
  return chi_square_test(obs, exp, draws - seen);
}

ChiSquareResult uniform_pp_test(std::uint64_t seed, const BoxDims& box, int draws) {
  RngStream rng(seed, 3);
  UniformPPSampler sampler(box);
  const auto all = enumerate_pp(box);
  std::map<PlanePartition, std::int64_t> hist;
  for (int i = 0; i < draws; ++i) ++hist[sampler.draw(rng)];
  std::vector<std::int64_t> obs;
  std::vector<double> exp;
  for (const auto& pi : all) {
    obs.push_back(hist[pi]);
    exp.push_back(1.0 / static_cast<double>(all.size()));
  }
  return chi_square_test(obs, exp);
}

// ---- invariant suites ----

std::vector<CheckResult> suite_combinatorics(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(timed("combinatorics.macmahon", "enumeration count equals the product formula (boxes <= 3)",
                      [&] { return enumeration_vs_product(3, opt.jobs); }));
  out.push_back(timed("combinatorics.symmetry", "product formula is symmetric in a, b, c", [] {
    for (const BoxDims& box : boxes_up_to(5)) {
      const BigInt z = macmahon_count(box);
      if (z != macmahon_count(make_box(box.b, box.c, box.a)) || z != macmahon_count(make_box(box.b, box.a, box.c))) {
        return Outcome2{false, "asymmetric"};
      }
    }
    return Outcome2{true, "125 boxes"};
  }));
  out.push_back(timed("combinatorics.schur-dimension", "count equals s_(a^b)(1^(b+c))", [] {
    for (const BoxDims& box : boxes_up_to(5)) {
      if (schur_dim(Partition::rectangle(box.a, box.b), box.b + box.c) != macmahon_count(box)) {
        return Outcome2{false, "mismatch"};
      }
    }
    return Outcome2{true, "125 boxes"};
  }));
  out.push_back(timed("combinatorics.kostka", "Σ_γ K_μγ over compositions equals s_μ(1^n)", [] {
    for (const auto& mu : partitions_in_box(3, 3)) {
      for (int n = 1; n <= 3; ++n) {
        BigInt total = 0;
        std::vector<int> g(static_cast<std::size_t>(n), 0);
        std::function<void(int, int)> rec = [&](int i, int left) {
          if (i == n - 1) {
            g[static_cast<std::size_t>(i)] = left;
            total += kostka(mu, g);
            return;
          }
          for (int v = 0; v <= left; ++v) {
            g[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
          }
        };
        rec(0, static_cast<int>(mu.size()));
        const BigInt expected = mu.length() > n ? BigInt(0) : schur_dim(mu, n);
        if (total != expected) return Outcome2{false, "μ = " + mu.to_string()};
      }
    }
    return Outcome2{true, "partitions in (3^3), n <= 3"};
  }));
  return out;
}

std::vector<CheckResult> suite_bijection(const VerifyOptions&) {
  std::vector<CheckResult> out;
  out.push_back(timed("bijection.example", "worked example maps both ways", [] {
    const NMatrix d = phi(example_pp());
    return Outcome2{d == example_matrix() && phi_inverse(example_matrix()) == example_pp(),
                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + " matrix"};
  }));
  out.push_back(timed("bijection.identities", "round trip, column sums and shape on PP(3,3,3)",
                      [] { return bijection_identities(make_box(3, 3, 3)); }));
  out.push_back(timed("bijection.box", "π fits the box iff G(b,c) <= a (boxes <= 3)", [] { return box_correspondence(3); }));
  out.push_back(timed("bijection.last-passage", "performance table corner equals path maximum", [] {
    RngStream rng(1, 0);
    for (int rep = 0; rep < 50; ++rep) {
      const auto w = sample_geometric_matrix(4, 5, 0.5, rng);
      const PerformanceTable g = performance_table(w);
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 5; ++j) {
          if (g.at(i, j) != last_passage(w.w, {1, 1}, {i, j})) return Outcome2{false, "mismatch"};
        }
    }
    return Outcome2{true, "50 random 4x5 matrices"};
  }));
  return out;
}

std::vector<CheckResult> suite_symfunc(const VerifyOptions& opt) {
  std::mt19937_64 gen(opt.seed);
  std::vector<CheckResult> out;
  out.push_back(timed("symfunc.jacobi-trudi", "determinant g equals the plane partition sum (shapes in (2^2))",
                      [&] { return jacobi_trudi_vs_combinatorial(2, 3, gen); }));
  out.push_back(timed("symfunc.coincidence", "g on a rectangle equals s(1^(b-1), x)", [&] { return coincidence(3, 3, gen); }));
  out.push_back(timed("symfunc.rectangle-sum", "Σ_{λ ⊆ (a^b)} g_λ(x) = s_(a^b)(1^b, x)", [&] {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        const auto x = random_units(gen, 2);
        Rational sum = 0;
        for (const auto& lam : partitions_in_box(a, b)) sum += grothendieck_eval(lam, x);
        if (sum != schur_eval(Partition::rectangle(a, b), EvalPoint{b, x})) return Outcome2{false, "mismatch"};
      }
    return Outcome2{true, "a, b <= 3"};
  }));
  out.push_back(timed("symfunc.symmetry", "g is symmetric in its variables", [&] {
    for (const auto& lam : partitions_in_box(3, 3)) {
      auto x = random_units(gen, 3);
      const Rational base = grothendieck_eval(lam, x);
      std::sort(x.begin(), x.end());
      do {
        if (grothendieck_eval(lam, x) != base) return Outcome2{false, "λ = " + lam.to_string()};
      } while (std::next_permutation(x.begin(), x.end()));
    }
    return Outcome2{true, "shapes in (3^3)"};
  }));
  out.push_back(timed("symfunc.gamma-law", "corner law polynomial is normalized", [] {
    for (const BoxDims& box : boxes_up_to(4)) {
      const UniPoly p = gamma_law_polynomial(box);
      if (p.evaluate(Rational(1)) != 1) return Outcome2{false, "mass != 1"};
    }
    return Outcome2{true, "64 boxes"};
  }));
  return out;
}

std::vector<CheckResult> suite_measures(const VerifyOptions& opt) {
  std::mt19937_64 gen(opt.seed + 1);
  std::vector<CheckResult> out;
  out.push_back(timed("measures.pgf", "corner generating function equals normalized Schur", [&] {
    const BoxDims boxes[] = {make_box(2, 2, 2), make_box(3, 2, 2)};
    return pgf_identity(boxes, 2, gen, opt.jobs);
  }));
  out.push_back(timed("measures.exchangeability", "joint corner law is permutation invariant (boxes <= 2)",
                      [&] { return exchangeability(2, opt.jobs); }));
  out.push_back(timed("measures.first-part", "Toeplitz and Schur forms of P(λ1 <= a) agree",
                      [&] { return toeplitz_vs_schur(3, 3, 3, gen); }));
  out.push_back(timed("measures.slice", "slice law formulas agree (boxes <= 2)", [&] { return slice_formulas(2, opt.jobs); }));
  out.push_back(timed("measures.slice-example", "slice of the figure example is (4,2,0)", [] {
    const Partition y = slice_extract(slice_figure(), make_box(5, 4, 3), 3);
    return Outcome2{y == Partition{4, 2}, y.to_string()};
  }));
  out.push_back(timed("measures.kostka-marginals", "Kostka table marginals are the corner and slice laws", [&] {
    for (const BoxDims& box : {make_box(2, 2, 2), make_box(3, 2, 2)}) {
      for (int k = 1; k <= std::min(box.b, box.c); ++k) {
        const DistTable joint = joint_corner_slice_law(box, k);
        joint.validate();
        std::map<Outcome, Rational> over_gamma, over_mu;
        for (const auto& e : joint.entries()) {
          over_gamma[Outcome{e.outcome[1]}] += e.exact;
          over_mu[Outcome{e.outcome[0]}] += e.exact;
        }
        const auto slice = slice_law(box, k, SliceFormula::exhaustive);
        for (const auto& e : slice.table.entries()) {
          if (over_gamma[e.outcome] != e.exact) return Outcome2{false, "slice marginal"};
        }
        const auto levels = first_levels(k);
        const auto gl = gamma_joint_law(box, levels, {opt.jobs, 50'000'000});
        for (const auto& e : gl.entries()) {
          if (over_mu[e.outcome] != e.exact) return Outcome2{false, "corner marginal"};
        }
      }
    }
    return Outcome2{true, "(2,2,2) and (3,2,2)"};
  }));
  out.push_back(timed("measures.monotonicity", "sorted dominance monotonicity (boxes (2,2,2), (3,2,2))", [&] {
    const BoxDims boxes[] = {make_box(2, 2, 2), make_box(3, 2, 2)};
    return monotonicity(boxes, opt.jobs);
  }));
  out.push_back(timed("measures.g-shape", "g-measure shape law equals the truncated matrix law", [] {
    const Rational half = make_rational(1, 2);
    const auto audit = geometric_lpp_law_truncated(2, 2, half, 5);
    audit.table.validate();
    const auto params = make_gmeasure(2, 2, {half, half});
    for (const auto& lam : partitions_in_box(5, 2)) {
      if (audit.table.exact_probability({lam.parts()}) != g_measure_shape_prob(params, lam)) {
        return Outcome2{false, "λ = " + lam.to_string()};
      }
    }
    return Outcome2{true, "λ1 <= 5, exact"};
  }));
  return out;
}

std::vector<CheckResult> suite_sampling(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(timed("sampling.replay", "fixed (seed, stream) replays bit-identically", [&] {
    RngStream a(opt.seed, 5), b(opt.seed, 5);
    const bool same = sample_geometric_matrix(5, 7, 0.4, a).w == sample_geometric_matrix(5, 7, 0.4, b).w &&
                      sample_g_measure(3, 3, 0.4, a) == sample_g_measure(3, 3, 0.4, b);
    return Outcome2{same, ""};
  }));
  out.push_back(timed("sampling.geometric", "geometric pmf (10^5 draws, level 0.01)",
                      [&] { return chi_square_outcome(geometric_pmf_test(opt.seed, 0.5, 100'000), "geometric"); }));
  out.push_back(timed("sampling.g-measure", "g-measure shape law (10^5 draws, level 0.01)",
                      [&] { return chi_square_outcome(g_shape_test(opt.seed, 100'000), "shape"); }));
  out.push_back(timed("sampling.uniform", "uniform sampler on PP(2,2,2) (10^5 draws, level 0.01)",
                      [&] { return chi_square_outcome(uniform_pp_test(opt.seed, make_box(2, 2, 2), 100'000), "uniform"); }));
  out.push_back(timed("sampling.streaming", "streamed corner equals the stored-table corner", [&] {
    RngStream a(opt.seed, 6), b(opt.seed, 6);
    for (int rep = 0; rep < 10; ++rep) {
      const auto w = sample_geometric_matrix(20, 33, 0.3, a);
      if (sample_lpp_corner(20, 33, 0.3, b) != performance_table(w).at(20, 33)) return Outcome2{false, "mismatch"};
    }
    return Outcome2{true, "10 replicates"};
  }));
  return out;
}

std::vector<CheckResult> suite_simd(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(timed("simd.kernels", "every available row kernel equals the scalar kernel", [&] {
    if (!simd::avx2_available()) return Outcome2{true, "only the scalar kernel is available"};
    std::mt19937_64 gen(opt.seed);
    std::uniform_int_distribution<std::int32_t> dist(0, 1000);
    auto fast = simd::row_kernel(simd::Isa::avx2);
    for (std::size_t n = 0; n < 200; ++n) {
      std::vector<std::int32_t> prev(n), w(n), o1(n), o2(n);
      for (std::size_t j = 0; j < n; ++j) {
        prev[j] = dist(gen);
        w[j] = dist(gen);
      }
      simd::lpp_row_scalar(prev.data(), w.data(), o1.data(), n);
      fast(prev.data(), w.data(), o2.data(), n);
      if (o1 != o2) return Outcome2{false, "length " + std::to_string(n)};
    }
    return Outcome2{true, "avx2 vs scalar, lengths 0..199"};
  }));
  return out;
}

std::vector<CheckResult> suite_asymptotics(const VerifyOptions&) {
  std::vector<CheckResult> out;
  for (Regime r : {Regime::poisson, Regime::negative_binomial, Regime::gaussian}) {
    out.push_back(timed("asymptotics.ladder-" + regime_name(r), regime_name(r) + " ladder distance decreases", [r] {
      const auto ladder = regime_ladder(default_regime_spec(r));
      std::string d;
      for (const auto& rung : ladder.rungs) d += (d.empty() ? "" : " ") + fmt(r == Regime::gaussian ? rung.var_rel_err : rung.tv);
      return Outcome2{ladder.monotone, d};
    }));
  }
  out.push_back(timed("asymptotics.mv", "gaussian parameters satisfy m = uq, v = u(u+1)q(1-q)", [] {
    for (const BoxDims& box : {make_box(3, 5, 7), make_box(400, 400, 400), make_box(10, 1, 30)}) {
      const auto p = regime_params(Regime::gaussian, box);
      const double u = static_cast<double>(box.a) / (box.b + box.c), q = static_cast<double>(box.b) / (box.b + box.c);
      if (std::abs(p.m - u * q) > 1e-15 || std::abs(p.v - u * (1 + u) * q * (1 - q)) > 1e-15) {
        return Outcome2{false, "mismatch"};
      }
    }
    return Outcome2{true, ""};
  }));
  for (Regime r : {Regime::poisson, Regime::negative_binomial}) {
    out.push_back(timed("asymptotics.independence-" + regime_name(r), "corner correlation shrinks along the probe ladder", [r] {
      const auto ladder = default_probe_ladder(r);
      const auto rows = independence_probe(ladder);
      std::string d;
      bool ok = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        d += (d.empty() ? "" : " ") + fmt(rows[i].correlation);
        if (i > 0 && std::abs(rows[i].correlation) > std::abs(rows[i - 1].correlation)) ok = false;
      }
      return Outcome2{ok, d};
    }));
    out.push_back(timed("asymptotics.pointwise-" + regime_name(r), "normalized Schur at x = 1/2 approaches the limit", [r] {
      const auto rows = pointwise_schur_limit(default_regime_spec(r), make_rational(1, 2));
      std::string d;
      bool ok = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        d += (d.empty() ? "" : " ") + fmt(rows[i].rel_err);
        if (i > 0 && rows[i].rel_err > rows[i - 1].rel_err) ok = false;
      }
      return Outcome2{ok, d};
    }));
  }
  return out;
}

// ---- acceptance ----

const char* const kTitles[kAcceptanceCriteria] = {
    "enumeration vs product formula, all boxes a,b,c <= 4",
    "bijection round trip and identities on PP(3,3,3); box correspondence <= (3,3,3)",
    "determinant g vs plane partition sum (λ ⊆ (3^3), 5 points); g/s coincidence a,b <= 4",
    "generating function identity on (2,2,2), (3,2,2), (3,3,3), 5 points each",
    "joint corner law exchangeable on all boxes <= (3,3,3)",
    "Toeplitz = Schur first-part law, a,b <= 5, c <= 4; monotone CDF",
    "truncated matrix law of (G(2,2), G(1,2)) vs (1-q)^4 g_λ(q,q), entries <= 12",
    "slice law formulas agree on boxes <= (3,3,3); figure slice (4,2,0)",
    "joint Kostka law equals exhaustive joint histogram on (2,2,2), (3,2,2), k=2; monotonicity",
    "regime convergence: NB (300,2,300), Poisson (40,40,1600), Gaussian (400,400,400)",
    "corner growth limit shape q=1/4, b=1000, 20 replicates",
    "sampler chi-square at level 0.01: geometric, g-measure shape, uniform PP(2,2,2)",
    "truncated g sum reaches the product with deficit < 1e-6 (b=2, q=(1/3,1/5), M=40)",
};

Outcome2 limit_check(double elapsed, double limit, Outcome2 o) {
  if (elapsed > limit) {
    o.ok = false;
    o.detail += "; runtime " + fmt(elapsed) + " s exceeds " + fmt(limit) + " s";
  }
  return o;
}

template <class Body>
Outcome2 within(double seconds, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome2 o = body();
  return limit_check(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), seconds, o);
}

Outcome2 acceptance_body(int k, const VerifyOptions& opt) {
  std::mt19937_64 gen(opt.seed + static_cast<std::uint64_t>(k));
  switch (k) {
    case 1:
      return within(300, [&] { return enumeration_vs_product(4, opt.jobs); });
    case 2:
      return within(60, [&] {
        const BoxDims box = make_box(3, 3, 3);
        if (macmahon_count(box) != 980) return Outcome2{false, "|PP(3,3,3)| != 980"};
        Outcome2 lem = bijection_identities(box);
        if (!lem.ok) return lem;
        Outcome2 corr = box_correspondence(3);
        return Outcome2{corr.ok, lem.detail + "; " + corr.detail};
      });
    case 3:
      return within(120, [&] {
        Outcome2 jt = jacobi_trudi_vs_combinatorial(3, 5, gen);
        if (!jt.ok) return jt;
        Outcome2 co = coincidence(4, 4, gen);
        return Outcome2{co.ok, jt.detail + "; " + co.detail};
      });
    case 4:
      return within(120, [&] {
        const BoxDims boxes[] = {make_box(2, 2, 2), make_box(3, 2, 2), make_box(3, 3, 3)};
        return pgf_identity(boxes, 5, gen, opt.jobs);
      });
    case 5:
      return exchangeability(3, opt.jobs);
    case 6:
      return toeplitz_vs_schur(5, 5, 4, gen);
    case 7:
      return within(120, [&] {
        const Rational q = make_rational(1, 2);
        const auto law = geometric_lpp_law_truncated(2, 2, q, 12);
        law.table.validate();
        const auto params = make_gmeasure(2, 2, {q, q});
        double worst = 0.0;
        Rational window_table = 0, window_exact = 0;
        long outcomes = 0;
        for (const auto& lam : partitions_in_box(8, 2)) {
          const Rational got = law.table.exact_probability({lam.parts()});
          const Rational want = g_measure_shape_prob(params, lam);
          window_table += got;
          window_exact += want;
          worst = std::max(worst, std::abs(to_double(got - want)));
          ++outcomes;
        }
        const double window_deficit = to_double(window_exact - window_table);
        const bool ok = worst < 1e-6 && window_deficit < 1e-6;
        return Outcome2{ok, std::to_string(outcomes) + " outcomes, max error " + fmt(worst) + ", window deficit " +
                                fmt(window_deficit) + ", global truncated mass " + fmt(to_double(law.table.exact_deficit()))};
      });
    case 8: {
      Outcome2 fig{slice_extract(slice_figure(), make_box(5, 4, 3), 3) == Partition{4, 2}, "figure slice (4,2,0)"};
      if (!fig.ok) return fig;
      Outcome2 laws = slice_formulas(3, opt.jobs);
      return Outcome2{laws.ok, laws.detail + "; " + fig.detail};
    }
    case 9: {
      std::string detail;
      bool ok = true;
      for (const BoxDims& box : {make_box(2, 2, 2), make_box(3, 2, 2)}) {
        const DistTable formula = joint_corner_slice_law(box, 2);
        const DistTable exhaustive = joint_corner_slice_exhaustive(box, 2, {opt.jobs, 50'000'000});
        if (!exact_tables_equal(formula, exhaustive)) {
          ok = false;
          for (const auto& e : exhaustive.entries()) {
            if (formula.exact_probability(e.outcome) != e.exact) {
              detail += "(" + std::to_string(box.a) + "," + std::to_string(box.b) + "," + std::to_string(box.c) +
                        "): P" + exhaustive.label(e.outcome) + " exhaustive " + to_string(e.exact) + ", formula " +
                        to_string(formula.exact_probability(e.outcome)) + "; ";
              break;
            }
          }
        }
      }
      const BoxDims boxes[] = {make_box(2, 2, 2), make_box(3, 2, 2)};
      Outcome2 mono = monotonicity(boxes, opt.jobs);
      detail += "monotonicity " + std::string(mono.ok ? "holds" : "fails") + " (" + mono.detail + ")";
      return Outcome2{ok && mono.ok, detail};
    }
    case 10:
      return within(600, [&] {
        const auto nb = regime_distance({Regime::negative_binomial, {make_box(300, 2, 300)}, 0.02, 0.0}, 0);
        const auto po = regime_distance({Regime::poisson, {make_box(40, 40, 1600)}, 0.02, 0.0}, 0);
        const auto ga = regime_distance({Regime::gaussian, {make_box(400, 400, 400)}, 0.03, 0.01}, 0);
        const bool ok = nb.tv < 0.02 && po.tv < 0.02 && ga.mean_rel_err < 0.01 && ga.var_rel_err < 0.03;
        return Outcome2{ok, "NB tv " + fmt(nb.tv) + " (< 0.02), Poisson tv " + fmt(po.tv) +
                                " (< 0.02), Gaussian mean err " + fmt(ga.mean_rel_err) + " (< 0.01) var err " +
                                fmt(ga.var_rel_err) + " (< 0.03) with m = " + fmt(ga.params.m) + ", v = " +
                                fmt(ga.params.v)};
      });
    case 11:
      return within(60, [&] {
        const double xs[] = {1.0};
        const auto first = limit_shape_experiment(0.25, xs, 1000, 20, opt.seed, opt.jobs);
        const auto again = limit_shape_experiment(0.25, xs, 1000, 20, opt.seed, opt.jobs);
        const double rel = std::abs(first[0].mean / first[0].psi - 1.0);
        const bool same = first[0].mean == again[0].mean && first[0].se == again[0].se;
        return Outcome2{rel < 0.05 && same, "mean G(b,b)/b " + fmt(first[0].mean, 6) + " ± " + fmt(first[0].se, 3) +
                                                " vs ψ(1) = " + fmt(first[0].psi) + ", rel err " + fmt(rel) +
                                                (same ? ", replay identical" : ", replay differs")};
      });
    case 12: {
      const auto g = geometric_pmf_test(opt.seed, 0.5, 100'000);
      const auto s = g_shape_test(opt.seed, 100'000);
      const auto u = uniform_pp_test(opt.seed, make_box(2, 2, 2), 100'000);
      const bool ok = g.passed && s.passed && u.passed;
      return Outcome2{ok, chi_square_outcome(g, "geometric").detail + "; " + chi_square_outcome(s, "shape").detail +
                              "; " + chi_square_outcome(u, "uniform").detail};
    }
    case 13: {
      const std::vector<Rational> q{make_rational(1, 3), make_rational(1, 5)};
      const int b = 2, m = 40;
      Rational limit = 1;
      for (const auto& v : q) limit /= pow(1 - v, b);
      Rational partial = 0;
      for (const auto& lam : partitions_in_box(m, b)) partial += grothendieck_eval(lam, q);
      const Rational deficit = limit - partial;
      const bool ok = deficit >= 0 && to_double(deficit) < 1e-6;
      return Outcome2{ok, "partial " + to_decimal(partial, 12) + ", product " + to_decimal(limit, 12) + ", deficit " +
                              fmt(to_double(deficit))};
    }
    default:
      throw std::out_of_range("acceptance criterion must be in 1..13");
  }
}

}  // namespace

std::vector<std::string> invariant_suites() {
  return {"combinatorics", "bijection", "symfunc", "measures", "sampling", "simd", "asymptotics"};
}

std::vector<CheckResult> run_invariant_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "combinatorics") return suite_combinatorics(opt);
  if (suite == "bijection") return suite_bijection(opt);
  if (suite == "symfunc") return suite_symfunc(opt);
  if (suite == "measures") return suite_measures(opt);
  if (suite == "sampling") return suite_sampling(opt);
  if (suite == "simd") return suite_simd(opt);
  if (suite == "asymptotics") return suite_asymptotics(opt);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string acceptance_title(int criterion) {
  if (criterion < 1 || criterion > kAcceptanceCriteria) throw std::out_of_range("acceptance criterion must be in 1..13");
  return kTitles[criterion - 1];
}

CheckResult run_acceptance(int criterion, const VerifyOptions& opt) {
  const std::string title = acceptance_title(criterion);
  std::string id = std::to_string(criterion);
  if (id.size() < 2) id = "0" + id;
  return timed("acceptance-" + id, title, [&] { return acceptance_body(criterion, opt); });
}

std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "  [";
  if (!r.detail.empty()) os << r.detail << "; ";
  os.precision(3);
  os << std::fixed << r.seconds << " s]";
  return os.str();
}

}  // namespace dualg
