#pragma once

#include "dualg/exact.hpp"
#include "dualg/plane_partition.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dualg {

enum class Regime { poisson, negative_binomial, gaussian };

std::string regime_name(Regime r);
/// "poisson", "nb" or "gaussian"; throws std::invalid_argument otherwise.
Regime parse_regime(const std::string& name);

/// Ladder of boxes approaching one limit regime, with thresholds fixed in advance.
/// poisson/nb: `threshold` bounds the total variation at the last rung.
/// gaussian: `threshold` bounds |var/(vN) - 1| and `mean_threshold` bounds |mean/(mN) - 1|.
struct RegimeSpec {
  Regime regime = Regime::poisson;
  std::vector<BoxDims> ladder;
  double threshold = 0.0;
  double mean_threshold = 0.0;
};

/// Ladders used by the experiments and the acceptance suite.
RegimeSpec default_regime_spec(Regime r);

/// Limit parameters evaluated at a finite box.
struct RegimeParams {
  double t = 0.0;  // poisson: ab/c
  int nb_b = 0;    // nb: b
  double q = 0.0;  // nb: a/(a+c); gaussian: b/(b+c)
  double u = 0.0;  // gaussian: a/(b+c)
  double m = 0.0;  // gaussian: uq
  double v = 0.0;  // gaussian: u(u+1)q(1-q)
};

RegimeParams regime_params(Regime r, const BoxDims& box);

/// Limit pmf on 0..max_n (poisson or nb).
std::vector<double> limit_pmf(Regime r, const RegimeParams& p, int max_n);

struct RegimeReport {
  BoxDims box;
  RegimeParams params;
  bool exact_law = false;  // law computed in exact arithmetic before rounding
  double tv = 0.0;         // poisson/nb: includes the limit mass beyond a
  double mean = 0.0;
  double var = 0.0;
  double limit_mean = 0.0;
  double limit_var = 0.0;
  double mean_rel_err = 0.0;
  double var_rel_err = 0.0;
  double cdf_max_dev = 0.0;  // sup over n of |P(Γ <= n) - limit CDF|, continuity corrected for gaussian
};

/// Distance of the single-corner law at spec.ladder[index] to its limit.
/// Throws BudgetExceeded when a exceeds max_a.
RegimeReport regime_distance(const RegimeSpec& spec, std::size_t index, int max_a = 5000);

struct LadderReport {
  std::vector<RegimeReport> rungs;
  int increases = 0;     // rungs (after the first) where the distance went up
  bool monotone = true;  // at most one increase
  bool within_threshold = false;
};

/// Distance per rung: tv for poisson/nb, var_rel_err for gaussian.
LadderReport regime_ladder(const RegimeSpec& spec, int max_a = 5000);

struct PointwiseRow {
  BoxDims box;
  double value = 0.0;  // S_ρ(x; N), ρ = (a^b), N = b + c
  double limit = 0.0;
  double rel_err = 0.0;
};

/// S_ρ(x;N) against e^{t(x-1)} (poisson) or ((1-q)/(1-qx))^b (nb) along the ladder.
std::vector<PointwiseRow> pointwise_schur_limit(const RegimeSpec& spec, const Rational& x);

struct IndependenceRow {
  BoxDims box;
  double correlation = 0.0;  // corr(Γ_1, Γ_2)
};

/// Correlation of two corner counts along the ladder, from the exact pair law.
std::vector<IndependenceRow> independence_probe(std::span<const BoxDims> ladder);

/// Probe ladders small enough for the pair law.
std::vector<BoxDims> default_probe_ladder(Regime r);

double limit_shape_psi(double q, double x);
double limit_shape_sigma(double q, double x);

struct LimitShapeRow {
  double x = 0.0;
  int rows = 0;  // floor(x b)
  double mean = 0.0;  // mean of G(rows, b) / b
  double se = 0.0;
  double psi = 0.0;
};

/// Replicate r uses RngStream(seed, r); results are reduced in replicate order.
std::vector<LimitShapeRow> limit_shape_experiment(double q, std::span<const double> xs, int b, int reps,
                                                  std::uint64_t seed, int jobs = 1);

/// (G(floor(xb), b) - ψ(x) b) / (σ(x) b^{1/3}), one value per replicate.
std::vector<double> fluctuation_samples(double q, double x, int b, int reps, std::uint64_t seed, int jobs = 1);

enum class CornerForm { g_table, lambda };

/// reps x b matrix. g_table: column k is (G(k,c) - qc/(1-q)) / (√q √c / (1-q)).
/// lambda: the 180° rotated weights are mapped by Φ^{-1}; column k is λ_k with the
/// same scaling, so it equals the g_table column b-k+1.
std::vector<std::vector<double>> gue_corner_samples(int b, int c, double q, int reps, std::uint64_t seed,
                                                    CornerForm form = CornerForm::g_table, int jobs = 1);

}  // namespace dualg
