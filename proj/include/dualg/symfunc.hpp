#pragma once

#include "dualg/exact.hpp"
#include "dualg/partition.hpp"
#include "dualg/plane_partition.hpp"
#include "dualg/poly.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace dualg {

/// The substitution (1^ones, x_1, ..., x_k).
struct EvalPoint {
  int ones = 0;
  std::vector<Rational> values;
};

/// Raised when an exhaustive evaluation would exceed its configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e_k at the point: coefficient of z^k in (1+z)^ones ∏ (1 + x_i z). Zero for k < 0.
Rational elementary(long k, const EvalPoint& point);

/// e_0, ..., e_max_k at the point.
std::vector<Rational> elementary_sequence(long max_k, const EvalPoint& point);

/// s_λ = det[e_{λ'_i - i + j}]_{i,j <= λ_1}.
Rational schur_eval(const Partition& lambda, const EvalPoint& point);

/// g_λ(x) = det[e_{λ'_i - i + j}(1^{λ'_i - 1}, x)]_{i,j <= λ_1}.
Rational grothendieck_eval(const Partition& lambda, std::span<const Rational> x);

/// Σ over plane partitions T of shape λ with entries in 1..max_entry of
/// ∏ x_ℓ^{#columns of T containing ℓ}. x must supply at least max_entry values.
/// Throws BudgetExceeded after `budget` fillings.
Rational grothendieck_eval_combinatorial(const Partition& lambda, std::span<const Rational> x,
                                         int max_entry, long budget = 2'000'000);

/// S_ρ(x; N) = s_ρ(x, 1^{N-k}) / s_ρ(1^N). Throws std::invalid_argument if
/// N < max(k, ℓ(ρ)).
Rational normalized_schur(const Partition& rho, std::span<const Rational> x, int n);

/// Law of a single corner count under the uniform measure on PP(a,b,c): the
/// coefficient of x^n is s_{(a^{b-1}, a-n)}(1^{N-1}) / s_{(a^b)}(1^N), N = b + c.
UniPoly gamma_law_polynomial(const BoxDims& box);

/// Same law in double precision from log-dimensions; usable at N in the thousands.
std::vector<double> gamma_law_floating(const BoxDims& box);

/// Default switch point between the exact and floating single-corner law.
inline constexpr int kExactGammaLawMaxN = 60;

struct GammaLaw {
  bool exact = true;
  std::vector<Rational> exact_probs;  // filled when exact
  std::vector<double> probs;          // always filled
};

/// Exact when b + c <= exact_max_n, otherwise log-space floating.
GammaLaw gamma_law(const BoxDims& box, int exact_max_n = kExactGammaLawMaxN);

/// Joint law of two corner counts (Γ_1, Γ_2), entry [n1][n2], via two branching
/// steps; needs c >= 2. Double precision from log-dimensions.
std::vector<std::vector<double>> gamma_pair_law_floating(const BoxDims& box);

/// Exact version of gamma_pair_law_floating for small boxes.
std::vector<std::vector<Rational>> gamma_pair_law_exact(const BoxDims& box);

}  // namespace dualg
