#ifndef GENPROB_RANDVAR_HPP
#define GENPROB_RANDVAR_HPP

#include "genprob/inference.hpp"
#include "genprob/measure.hpp"

namespace genprob {

/// Carrier-valued function on the sample space, stored as one value per
/// atom. Atom-constancy is exactly measurability here: the preimage of any
/// value set is a union of atoms.
class RandomVariable {
public:
  static RandomVariable from_atom_values(StructurePtr structure, AlgebraPtr algebra,
                                         std::vector<Value> atom_values);

  /// One value per outcome; validates that the function is constant on each
  /// atom of the algebra (i.e. measurable).
  static RandomVariable from_outcome_values(StructurePtr structure, AlgebraPtr algebra,
                                            std::vector<Value> outcome_values);

  const Structure& structure() const noexcept { return *structure_; }
  const StructurePtr& structure_ptr() const noexcept { return structure_; }
  const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
  const SigmaAlgebra& algebra() const noexcept { return *algebra_; }
  const std::vector<Value>& atom_values() const noexcept { return values_; }
  const Value& at_atom(std::size_t atom) const { return values_.at(atom); }

  /// Distinct values in ascending carrier order.
  std::vector<Value> range() const;

private:
  RandomVariable(StructurePtr s, AlgebraPtr a, std::vector<Value> v);

  StructurePtr structure_;
  AlgebraPtr algebra_;
  std::vector<Value> values_;
};

/// Finite measurable subset of the carrier: a set of distinct values under
/// the structure's equality.
class ValueSet {
public:
  static ValueSet of(StructurePtr structure, std::vector<Value> values);

  const std::vector<Value>& values() const noexcept { return values_; }
  bool contains(const Value& v) const;
  bool empty() const noexcept { return values_.empty(); }

private:
  ValueSet(StructurePtr s, std::vector<Value> v) : structure_(std::move(s)), values_(std::move(v)) {}

  StructurePtr structure_;
  std::vector<Value> values_;
};

/// Union of the atoms whose value lies in `a`.
Event preimage(const RandomVariable& x, const ValueSet& a);

/// prob of {x in a}.
Value pushforward(const ProbabilityMeasure& p, const RandomVariable& x, const ValueSet& a);

/// prob of {x in a} and {y in b}.
Value joint(const ProbabilityMeasure& p, const RandomVariable& x, const RandomVariable& y,
            const ValueSet& a, const ValueSet& b);

/// True iff the joint factors through the two marginals. Defined only when
/// the two preimages overlap (Errc::empty_intersection otherwise).
bool rv_independent(const ProbabilityMeasure& p, const RandomVariable& x,
                    const RandomVariable& y, const ValueSet& a, const ValueSet& b);

/// Conditional distribution of {x in a} given {y in b}, via event
/// conditioning on {y in b}.
Conditioning conditional_distribution(const ProbabilityMeasure& p, const RandomVariable& x,
                                      const ValueSet& a, const RandomVariable& y,
                                      const ValueSet& b);

/// The pushforward as a measure in its own right: a probability measure on
/// the power set of x's range, with the range values as outcome labels.
ProbabilityMeasure induced_measure(const ProbabilityMeasure& p, const RandomVariable& x);

} // namespace genprob

#endif // GENPROB_RANDVAR_HPP
