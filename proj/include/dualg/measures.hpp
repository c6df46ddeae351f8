#pragma once

#include "dualg/exact.hpp"
#include "dualg/partition.hpp"
#include "dualg/plane_partition.hpp"
#include "dualg/symfunc.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dualg {

enum class OutcomeKind { integer, vector, partition, joint };

/// One or more integer blocks: {n}, {γ}, {λ} or {γ, μ}.
using Outcome = std::vector<std::vector<int>>;

struct DistEntry {
  Outcome outcome;
  Rational exact;      // meaningful when the table is exact
  double value = 0.0;  // always filled
};

/// Finite law with a declared unassigned mass. Exact tables satisfy
/// total + deficit == 1 exactly; floating tables within rounding.
class DistTable {
 public:
  DistTable() = default;
  DistTable(OutcomeKind kind, bool exact) : kind_(kind), exact_(exact) {}

  OutcomeKind kind() const { return kind_; }
  bool exact() const { return exact_; }
  const std::vector<DistEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  void add(Outcome outcome, const Rational& p);
  void add(Outcome outcome, double p);

  const Rational& exact_deficit() const { return exact_deficit_; }
  double deficit() const { return deficit_; }
  void set_deficit(const Rational& d);
  void set_deficit(double d);

  Rational exact_total() const;
  double total() const;

  /// Probability of `outcome`, 0 when absent.
  Rational exact_probability(const Outcome& outcome) const;
  double probability(const Outcome& outcome) const;

  /// Throws std::logic_error on a negative entry or (exact tables) total + deficit != 1.
  void validate() const;

  std::string label(const Outcome& outcome) const;

 private:
  OutcomeKind kind_ = OutcomeKind::integer;
  bool exact_ = true;
  std::vector<DistEntry> entries_;
  Rational exact_deficit_ = 0;
  double deficit_ = 0.0;
};

/// Same support (ignoring zero entries) and identical exact probabilities.
bool exact_tables_equal(const DistTable& lhs, const DistTable& rhs);

struct ExhaustiveOptions {
  int jobs = 1;
  long budget = 50'000'000;  // cap on |PP(a,b,c)|
};

struct PgfCheck {
  Rational lhs;
  Rational rhs;
};

/// lhs: Σ_π ∏_ℓ x_ℓ^{X_ℓ(π)} / Z over PP(a,b,c); rhs: S_{(a^b)}(x; b+c). Needs #x <= c.
PgfCheck gamma_pgf_check(const BoxDims& box, std::span<const Rational> x, const ExhaustiveOptions& opt = {});

/// Exhaustive joint law of (X_{ℓ_1}, ..., X_{ℓ_k}) under the uniform measure.
DistTable gamma_joint_law(const BoxDims& box, std::span<const int> levels, const ExhaustiveOptions& opt = {});

/// Single corner law from gamma_law (exact up to N = b + c <= exact_max_n).
DistTable gamma_law_table(const BoxDims& box, int exact_max_n = kExactGammaLawMaxN);

struct GMeasureParams {
  int b = 1;
  int c = 1;
  std::vector<Rational> q;  // c values in (0, 1)

  /// 1 / Z_{b,c} = ∏ (1 - q_i)^b.
  Rational inverse_normalizer() const;
};

/// Throws std::invalid_argument unless b, c >= 1, #q == c and every q_i is in (0, 1).
GMeasureParams make_gmeasure(int b, int c, std::vector<Rational> q);

/// g_λ(q) / Z_{b,c}. Throws std::invalid_argument when ℓ(λ) > b (the probability is 0).
Rational g_measure_shape_prob(const GMeasureParams& params, const Partition& lambda);

/// All shapes with at most b rows and λ_1 <= max_first; the rest is the deficit.
DistTable g_measure_shape_law(const GMeasureParams& params, int max_first);

/// P(λ_1 <= a) = s_{(a^b)}(1^b, q) / Z_{b,c}.
Rational first_part_law_schur(const GMeasureParams& params, int a);

/// P(λ_1 <= a) = det[φ̂_{i-j}]_{i,j<=a} / Z_{b,c}, φ̂_k = Σ_ℓ C(b, ℓ+k) e_ℓ(q). Needs a >= 1.
Rational first_part_law_toeplitz(const GMeasureParams& params, int a);

/// Law of λ_1: P(λ_1 = a) for a = 0..max_a, the rest as deficit.
DistTable first_part_law_table(const GMeasureParams& params, int max_a);

/// Positions of the right tiles on slice k: Y_t = #{j : π_{b-k+t, j} >= t}, t = 1..k
/// (1-based rows). Throws std::invalid_argument unless 1 <= k <= min(b, c).
Partition slice_extract(const PlanePartition& pi, const BoxDims& box, int k);

enum class SliceFormula { ensemble, schur_pair, exhaustive };

struct SliceLaw {
  int k = 1;
  BoxDims box;
  DistTable table;
};

SliceLaw slice_law(const BoxDims& box, int k, SliceFormula formula, const ExhaustiveOptions& opt = {});

/// Kostka table P(Γ^(k) = γ, Y^(k) = μ) = K_{μγ} s_{μ^c}(1^{b+c-k}) / Z, outcome {γ, μ}.
DistTable joint_corner_slice_law(const BoxDims& box, int k);

/// Histogram of ((X_1, ..., X_k), Y^(k)) over PP(a,b,c).
DistTable joint_corner_slice_exhaustive(const BoxDims& box, int k, const ExhaustiveOptions& opt = {});

struct MonotonicityResult {
  bool holds = true;
  long pairs_checked = 0;
  std::string witness;  // first violating pair when !holds
};

/// For γ, γ' in the support of (Γ_1..Γ_k): if the decreasing rearrangement of γ'
/// dominates that of γ then P(γ) >= P(γ').
MonotonicityResult dominance_monotonicity_check(const BoxDims& box, int k, const ExhaustiveOptions& opt = {});

struct TruncatedLppLaw {
  /// Outcome {(G(b,c), G(b-1,c), ..., G(1,c))}; exact; deficit = mass of excluded matrices.
  DistTable table;
  int max_entry = 0;
};

/// Sums the i.i.d. geometric(q) product measure over all b x c matrices with
/// entries <= max_entry. Exact.
TruncatedLppLaw geometric_lpp_law_truncated(int b, int c, const Rational& q, int max_entry);

}  // namespace dualg
