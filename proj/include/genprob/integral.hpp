#ifndef GENPROB_INTEGRAL_HPP
#define GENPROB_INTEGRAL_HPP

#include <utility>

#include "genprob/measure.hpp"
#include "genprob/randvar.hpp"

namespace genprob {

/// Finite add-combination of coefficients times indicators of pairwise
/// disjoint events.
class SimpleFunction {
public:
  using Term = std::pair<Value, Event>;

  /// Validates that the term events are pairwise disjoint
  /// (Errc::overlapping_terms) and share one space.
  static SimpleFunction make(StructurePtr structure, std::vector<Term> terms);

  /// Single term (one, a): one on the event, zero off it.
  static SimpleFunction indicator(StructurePtr structure, const Event& a);

  const StructurePtr& structure_ptr() const noexcept { return structure_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Defining add-fold of coefficient (*) indicator at one outcome.
  Value eval_at(std::size_t outcome) const;

private:
  SimpleFunction(StructurePtr s, std::vector<Term> t)
      : structure_(std::move(s)), terms_(std::move(t)) {}

  StructurePtr structure_;
  std::vector<Term> terms_;
};

/// Integral of a simple function against a measure. The term list is first
/// canonicalized to atom level (possible because the events are measurable
/// and disjoint), giving one semantics for every instance; the value on the
/// raw term list is available separately below.
Value integrate_simple(const Measure& mu, const SimpleFunction& f);

/// Diagnostic: the add-fold of coefficient (*) mu(event) over the terms as
/// given. Coincides with integrate_simple on distributive instances.
Value integrate_simple_as_given(const Measure& mu, const SimpleFunction& f);

/// Integral of a non-negative measurable function: the canonical atom-level
/// simple form attains the supremum over dominated simple functions on a
/// finite space. Throws Errc::negative_value on a negative atom value.
Value integrate_nonneg(const Measure& mu, const RandomVariable& f);

/// Non-negative positive/negative parts with f = positive (-) negative at
/// every atom; at most one part is non-zero per atom. Additive groups only.
struct SignedParts {
  RandomVariable positive;
  RandomVariable negative;
};

SignedParts signed_parts(const RandomVariable& f);

/// integrate_nonneg(positive) (-) integrate_nonneg(negative).
Value integrate_signed(const Measure& mu, const RandomVariable& f);

/// Integral of f restricted to `a` (pointwise product with the indicator).
/// Signed f requires the additive-group capability.
Value integrate_over(const Measure& mu, const RandomVariable& f, const Event& a);

/// Expected value of x under p through the integral tower.
Value expected_value(const ProbabilityMeasure& p, const RandomVariable& x);

} // namespace genprob

#endif // GENPROB_INTEGRAL_HPP
