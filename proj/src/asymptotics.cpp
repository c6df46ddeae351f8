#include "dualg/asymptotics.hpp"

#include "dualg/bijection.hpp"
#include "dualg/sampling.hpp"
#include "dualg/stats.hpp"
#include "dualg/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace dualg {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::poisson: return "poisson";
    case Regime::negative_binomial: return "nb";
    case Regime::gaussian: return "gaussian";
  }
  return "?";
}

Regime parse_regime(const std::string& name) {
  if (name == "poisson") return Regime::poisson;
  if (name == "nb") return Regime::negative_binomial;
  if (name == "gaussian") return Regime::gaussian;
  throw std::invalid_argument("unknown regime '" + name + "' (poisson, nb, gaussian)");
}

RegimeSpec default_regime_spec(Regime r) {
  switch (r) {
    case Regime::poisson:
      return {r, {make_box(10, 10, 100), make_box(20, 20, 400), make_box(40, 40, 1600)}, 0.02, 0.0};
    case Regime::negative_binomial:
      return {r, {make_box(50, 2, 50), make_box(100, 2, 100), make_box(300, 2, 300)}, 0.02, 0.0};
    case Regime::gaussian:
      return {r, {make_box(100, 100, 100), make_box(200, 200, 200), make_box(400, 400, 400)}, 0.03, 0.01};
  }
  throw std::invalid_argument("unknown regime");
}

RegimeParams regime_params(Regime r, const BoxDims& box) {
  RegimeParams p;
  const double a = box.a, b = box.b, c = box.c;
  switch (r) {
    case Regime::poisson:
      p.t = a * b / c;
      break;
    case Regime::negative_binomial:
      p.nb_b = box.b;
      p.q = a / (a + c);
      break;
    case Regime::gaussian:
      p.u = a / (b + c);
      p.q = b / (b + c);
      p.m = p.u * p.q;
      p.v = p.u * (p.u + 1) * p.q * (1 - p.q);
      break;
  }
  return p;
}

std::vector<double> limit_pmf(Regime r, const RegimeParams& p, int max_n) {
  std::vector<double> out;
  for (int n = 0; n <= max_n; ++n) {
    double log_p = 0.0;
    if (r == Regime::poisson) {
      log_p = -p.t + n * std::log(p.t) - log_factorial(n);
    } else if (r == Regime::negative_binomial) {
      log_p = log_factorial(n + p.nb_b - 1) - log_factorial(n) - log_factorial(p.nb_b - 1) + n * std::log(p.q) +
              p.nb_b * std::log1p(-p.q);
    } else {
      throw std::invalid_argument("limit_pmf: gaussian limit has no pmf");
    }
    out.push_back(std::exp(log_p));
  }
  return out;
}

namespace {

void moments(std::span<const double> p, double& mean, double& var) {
  mean = 0.0;
  double sq = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    mean += p[n] * static_cast<double>(n);
    sq += p[n] * static_cast<double>(n) * static_cast<double>(n);
  }
  var = sq - mean * mean;
}

double pgf(const GammaLaw& law, double x) {
  double s = 0.0, pw = 1.0;
  for (double p : law.probs) {
    s += p * pw;
    pw *= x;
  }
  return s;
}

template <class T, class Fn>
std::vector<T> run_replicates(int reps, int jobs, Fn&& fn) {
  if (reps < 0) throw std::invalid_argument("reps must be >= 0");
  std::vector<T> out(static_cast<std::size_t>(reps));
  jobs = std::clamp(jobs, 1, std::max(reps, 1));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int r = w; r < reps; r += jobs) out[static_cast<std::size_t>(r)] = fn(r);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace

RegimeReport regime_distance(const RegimeSpec& spec, std::size_t index, int max_a) {
  if (index >= spec.ladder.size()) throw std::out_of_range("regime_distance: ladder index out of range");
  const BoxDims& box = spec.ladder[index];
  if (box.a > max_a) {
    throw BudgetExceeded("regime_distance: a = " + std::to_string(box.a) + " exceeds the budget " +
                         std::to_string(max_a));
  }
  RegimeReport rep;
  rep.box = box;
  rep.params = regime_params(spec.regime, box);
  const GammaLaw law = gamma_law(box);
  rep.exact_law = law.exact;
  moments(law.probs, rep.mean, rep.var);

  const double n_total = box.n();
  if (spec.regime == Regime::gaussian) {
    rep.limit_mean = rep.params.m * n_total;
    rep.limit_var = rep.params.v * n_total;
    const double sd = std::sqrt(rep.limit_var);
    double cdf = 0.0;
    for (std::size_t n = 0; n < law.probs.size(); ++n) {
      cdf += law.probs[n];
      const double z = (static_cast<double>(n) + 0.5 - rep.limit_mean) / sd;
      rep.cdf_max_dev = std::max(rep.cdf_max_dev, std::abs(cdf - normal_cdf(z)));
    }
  } else {
    const auto lim = limit_pmf(spec.regime, rep.params, box.a);
    double covered = 0.0;
    for (double v : lim) covered += v;
    rep.tv = total_variation(law.probs, lim) + std::max(0.0, 1.0 - covered) / 2.0;
    double cdf = 0.0, lcdf = 0.0;
    for (std::size_t n = 0; n < lim.size(); ++n) {
      cdf += law.probs[n];
      lcdf += lim[n];
      rep.cdf_max_dev = std::max(rep.cdf_max_dev, std::abs(cdf - lcdf));
    }
    if (spec.regime == Regime::poisson) {
      rep.limit_mean = rep.params.t;
      rep.limit_var = rep.params.t;
    } else {
      const double q = rep.params.q, b = rep.params.nb_b;
      rep.limit_mean = b * q / (1 - q);
      rep.limit_var = b * q / ((1 - q) * (1 - q));
    }
  }
  rep.mean_rel_err = std::abs(rep.mean / rep.limit_mean - 1.0);
  rep.var_rel_err = std::abs(rep.var / rep.limit_var - 1.0);
  return rep;
}

LadderReport regime_ladder(const RegimeSpec& spec, int max_a) {
  LadderReport out;
  auto distance = [&](const RegimeReport& r) { return spec.regime == Regime::gaussian ? r.var_rel_err : r.tv; };
  for (std::size_t i = 0; i < spec.ladder.size(); ++i) {
    out.rungs.push_back(regime_distance(spec, i, max_a));
    if (i >= 2 && distance(out.rungs[i]) > distance(out.rungs[i - 1])) ++out.increases;
  }
  out.monotone = out.increases <= 1;
  if (!out.rungs.empty()) {
    const auto& last = out.rungs.back();
    out.within_threshold = spec.regime == Regime::gaussian
                               ? last.var_rel_err < spec.threshold && last.mean_rel_err < spec.mean_threshold
                               : last.tv < spec.threshold;
  }
  return out;
}

std::vector<PointwiseRow> pointwise_schur_limit(const RegimeSpec& spec, const Rational& x) {
  if (spec.regime == Regime::gaussian) throw std::invalid_argument("pointwise limit: poisson or nb only");
  const double xd = to_double(x);
  std::vector<PointwiseRow> rows;
  for (const BoxDims& box : spec.ladder) {
    PointwiseRow row;
    row.box = box;
    const GammaLaw law = gamma_law(box);
    if (law.exact) {
      Rational s = 0, pw = 1;
      for (const auto& p : law.exact_probs) {
        s += p * pw;
        pw *= x;
      }
      row.value = to_double(s);
    } else {
      row.value = pgf(law, xd);
    }
    const RegimeParams p = regime_params(spec.regime, box);
    if (spec.regime == Regime::poisson) {
      row.limit = std::exp(p.t * (xd - 1));
    } else {
      if (p.q * xd >= 1) throw std::invalid_argument("pointwise limit: need q x < 1");
      row.limit = std::pow((1 - p.q) / (1 - p.q * xd), p.nb_b);
    }
    row.rel_err = std::abs(row.value / row.limit - 1.0);
    rows.push_back(row);
  }
  return rows;
}

std::vector<IndependenceRow> independence_probe(std::span<const BoxDims> ladder) {
  std::vector<IndependenceRow> out;
  for (const BoxDims& box : ladder) {
    const auto joint = gamma_pair_law_floating(box);
    double m1 = 0, m2 = 0, s11 = 0, s22 = 0, s12 = 0;
    for (std::size_t i = 0; i < joint.size(); ++i) {
      for (std::size_t j = 0; j < joint[i].size(); ++j) {
        const double p = joint[i][j], x = static_cast<double>(i), y = static_cast<double>(j);
        m1 += p * x;
        m2 += p * y;
        s11 += p * x * x;
        s22 += p * y * y;
        s12 += p * x * y;
      }
    }
    const double cov = s12 - m1 * m2;
    out.push_back({box, cov / std::sqrt((s11 - m1 * m1) * (s22 - m2 * m2))});
  }
  return out;
}

std::vector<BoxDims> default_probe_ladder(Regime r) {
  switch (r) {
    case Regime::poisson: return {make_box(5, 5, 25), make_box(10, 10, 100), make_box(20, 20, 400)};
    case Regime::negative_binomial: return {make_box(20, 2, 20), make_box(50, 2, 50), make_box(100, 2, 100)};
    case Regime::gaussian: break;
  }
  throw std::invalid_argument("independence probe: poisson or nb only");
}

double limit_shape_psi(double q, double x) { return (q * x + q + 2 * std::sqrt(q * x)) / (1 - q); }

double limit_shape_sigma(double q, double x) {
  return std::pow(q * x, 1.0 / 6) * std::pow(std::sqrt(x) + std::sqrt(q), 2.0 / 3) *
         std::pow(1 + std::sqrt(q * x), 2.0 / 3) / (1 - q);
}

namespace {

std::vector<int> row_counts(std::span<const double> xs, int b) {
  std::vector<int> rows;
  for (double x : xs) {
    if (!(x > 0)) throw std::invalid_argument("limit shape: x must be positive");
    rows.push_back(static_cast<int>(std::floor(x * b)));
  }
  return rows;
}

}  // namespace

std::vector<LimitShapeRow> limit_shape_experiment(double q, std::span<const double> xs, int b, int reps,
                                                  std::uint64_t seed, int jobs) {
  if (b < 1) throw std::invalid_argument("limit shape: b must be >= 1");
  const auto rows = row_counts(xs, b);
  const int max_rows = rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end());
  auto columns = run_replicates<std::vector<std::int64_t>>(reps, jobs, [&](int r) {
    RngStream rng(seed, static_cast<std::uint64_t>(r));
    return sample_lpp_last_column(max_rows, b, q, rng);
  });
  std::vector<LimitShapeRow> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    LimitShapeRow row{xs[k], rows[k], 0.0, 0.0, limit_shape_psi(q, xs[k])};
    double sum = 0.0, sq = 0.0;
    for (const auto& col : columns) {
      const double v = rows[k] == 0 ? 0.0 : static_cast<double>(col[static_cast<std::size_t>(rows[k] - 1)]) / b;
      sum += v;
      sq += v * v;
    }
    if (reps > 0) row.mean = sum / reps;
    if (reps > 1) row.se = std::sqrt(std::max(0.0, (sq - reps * row.mean * row.mean) / (reps - 1)) / reps);
    out.push_back(row);
  }
  return out;
}

std::vector<double> fluctuation_samples(double q, double x, int b, int reps, std::uint64_t seed, int jobs) {
  if (b < 1) throw std::invalid_argument("fluctuations: b must be >= 1");
  const double xs[] = {x};
  const int m = row_counts(xs, b).front();
  const double centre = limit_shape_psi(q, x) * b;
  const double scale = limit_shape_sigma(q, x) * std::cbrt(static_cast<double>(b));
  return run_replicates<double>(reps, jobs, [&](int r) {
    RngStream rng(seed, static_cast<std::uint64_t>(r));
    return (static_cast<double>(sample_lpp_corner(m, b, q, rng)) - centre) / scale;
  });
}

std::vector<std::vector<double>> gue_corner_samples(int b, int c, double q, int reps, std::uint64_t seed,
                                                    CornerForm form, int jobs) {
  if (b < 1 || c < 1) throw std::invalid_argument("gue corners: b, c must be >= 1");
  const double centre = q * c / (1 - q);
  const double scale = std::sqrt(q) / (1 - q) * std::sqrt(static_cast<double>(c));
  return run_replicates<std::vector<double>>(reps, jobs, [&](int r) {
    RngStream rng(seed, static_cast<std::uint64_t>(r));
    const auto sample = sample_geometric_matrix(b, c, q, rng);
    std::vector<double> out(static_cast<std::size_t>(b));
    if (form == CornerForm::g_table) {
      const PerformanceTable g = performance_table(sample);
      for (int k = 1; k <= b; ++k) out[static_cast<std::size_t>(k - 1)] = (static_cast<double>(g.at(k, c)) - centre) / scale;
    } else {
      NMatrix rotated(b, c);
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < c; ++j) rotated(i, j) = sample.w(b - 1 - i, c - 1 - j);
      const PlanePartition pi = phi_inverse(rotated);
      for (int k = 1; k <= b; ++k) {
        out[static_cast<std::size_t>(k - 1)] = (static_cast<double>(pi.row_length(k - 1)) - centre) / scale;
      }
    }
    return out;
  });
}

}  // namespace dualg
