#ifndef GENPROB_MEASURE_HPP
#define GENPROB_MEASURE_HPP

#include <vector>

#include "genprob/space.hpp"
#include "genprob/structure.hpp"

namespace genprob {

/// Non-negative carrier-valued measure given by one weight per atom and
/// extended to measurable events by add-folds. Immutable after validation.
class Measure {
public:
  static Measure make(StructurePtr structure, AlgebraPtr algebra,
                      std::vector<Value> atom_weights);

  const Structure& structure() const noexcept { return *structure_; }
  const StructurePtr& structure_ptr() const noexcept { return structure_; }
  const SigmaAlgebra& algebra() const noexcept { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const std::vector<Value>& atom_weights() const noexcept { return atom_weights_; }

  /// Add-fold of the weights of the atoms inside `e`. The empty event folds
  /// to zero. Throws Errc::not_measurable for events outside the algebra.
  Value measure_of(const Event& e) const;

protected:
  Measure(StructurePtr structure, AlgebraPtr algebra, std::vector<Value> atom_weights);
  static void validate_shape(const Structure& s, const SigmaAlgebra& algebra,
                             const std::vector<Value>& weights);

  StructurePtr structure_;
  AlgebraPtr algebra_;
  std::vector<Value> atom_weights_;
};

/// Measure whose weights additionally fold to one over the whole space and
/// stay inside [zero, one] per atom.
class ProbabilityMeasure : public Measure {
public:
  static ProbabilityMeasure make(StructurePtr structure, AlgebraPtr algebra,
                                 std::vector<Value> atom_weights);

  Value prob(const Event& e) const { return measure_of(e); }

private:
  using Measure::Measure;
};

/// True iff prob(A and B) equals prob(A) (*) prob(B). Defined only for
/// overlapping events; throws Errc::empty_intersection otherwise.
bool independent(const ProbabilityMeasure& p, const Event& a, const Event& b);

} // namespace genprob

#endif // GENPROB_MEASURE_HPP
