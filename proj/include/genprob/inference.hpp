#ifndef GENPROB_INFERENCE_HPP
#define GENPROB_INFERENCE_HPP

#include <optional>
#include <span>
#include <string>

#include "genprob/measure.hpp"

namespace genprob {

/// Outcome of solving x (*) prob(B) = prob(A and B) for the conditional
/// probability of A given B.
///
/// - unique: the structure has multiplicative inverses; x is the quotient.
/// - residuated: x is the greatest solution candidate from residuation;
///   `verified` records whether x actually satisfies the defining equation
///   (greatest-solution conditioning can be unsolvable).
/// - unconditionable: the structure offers neither route.
struct Conditioning {
  enum class Kind { unique, residuated, unconditionable };

  Kind kind = Kind::unconditionable;
  std::optional<Value> value;
  bool verified = false;
  std::string note;

  bool resolvable() const {
    return kind == Kind::unique || (kind == Kind::residuated && verified);
  }
};

/// Conditional probability of `a` given `b`. Requires a non-empty
/// intersection; on multiplicative-group structures prob(b) must be
/// non-zero (Errc::zero_condition).
Conditioning conditional(const ProbabilityMeasure& p, const Event& a, const Event& b);

/// Conditional probability of `b` given `a`, computed through the product
/// route: (P(a|b) (*) P(b)) divided by P(a) on multiplicative groups, the
/// two residuated conditionals elsewhere. `verified` additionally records the
/// symmetry P(b|a) (*) P(a) = P(a|b) (*) P(b).
Conditioning bayes(const ProbabilityMeasure& p, const Event& a, const Event& b);

/// Add-fold of P(cell) (*) P(a | cell) over a partition of the space; always
/// equals prob(a). Cells that miss `a`, or carry zero probability, contribute
/// P(a and cell) directly (which is zero in both cases). A cell whose
/// conditional cannot be resolved raises Errc::unresolvable_term.
Value total_probability(const ProbabilityMeasure& p, const Event& a,
                        std::span<const Event> partition);

/// one (-) prob(a); equals prob(complement of a). Additive groups only.
Value complement_prob(const ProbabilityMeasure& p, const Event& a);

/// prob(a) (+) prob(b) (-) prob(a and b); equals prob(a or b). Additive
/// groups only.
Value union_prob(const ProbabilityMeasure& p, const Event& a, const Event& b);

} // namespace genprob

#endif // GENPROB_INFERENCE_HPP
