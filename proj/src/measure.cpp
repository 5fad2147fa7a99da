#include "genprob/measure.hpp"

namespace genprob {

Measure::Measure(StructurePtr structure, AlgebraPtr algebra, std::vector<Value> atom_weights)
    : structure_(std::move(structure)),
      algebra_(std::move(algebra)),
      atom_weights_(std::move(atom_weights)) {}

void Measure::validate_shape(const Structure& s, const SigmaAlgebra& algebra,
                             const std::vector<Value>& weights) {
  if (weights.size() != algebra.atoms().size()) {
    fail(Errc::parse_error, "measure", "expected one weight per atom");
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (s.lt(weights[i], s.zero())) {
      fail(Errc::negative_weight, "measure",
           "ACMA1/ACPA1: atom " + std::to_string(i) + " has negative weight " +
               s.format(weights[i]));
    }
  }
}

Measure Measure::make(StructurePtr structure, AlgebraPtr algebra,
                      std::vector<Value> atom_weights) {
  validate_shape(*structure, *algebra, atom_weights);
  return Measure(std::move(structure), std::move(algebra), std::move(atom_weights));
}

Value Measure::measure_of(const Event& e) const {
  if (!algebra_->is_measurable(e)) {
    fail(Errc::not_measurable, "measure", "event is not measurable in this algebra");
  }
  Value acc = structure_->zero();
  const auto& atoms = algebra_->atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].is_subset_of(e)) acc = structure_->add(acc, atom_weights_[i]);
  }
  return acc;
}

ProbabilityMeasure ProbabilityMeasure::make(StructurePtr structure, AlgebraPtr algebra,
                                            std::vector<Value> atom_weights) {
  validate_shape(*structure, *algebra, atom_weights);
  const Value total = fold_add(*structure, atom_weights);
  if (!structure->equal(total, structure->one())) {
    fail(Errc::not_normalized, "measure",
         "ACPA2: weights fold to " + structure->format(total) + ", expected " +
             structure->format(structure->one()));
  }
  for (const Value& w : atom_weights) {
    if (structure->gt(w, structure->one())) {
      fail(Errc::negative_weight, "measure",
           "ACPA1: atom weight " + structure->format(w) + " exceeds the unit");
    }
  }
  return ProbabilityMeasure(std::move(structure), std::move(algebra), std::move(atom_weights));
}

bool independent(const ProbabilityMeasure& p, const Event& a, const Event& b) {
  const Event both = a & b;
  if (both.empty()) {
    fail(Errc::empty_intersection, "measure",
         "independence is defined only for overlapping events");
  }
  const Structure& s = p.structure();
  return s.equal(p.prob(both), s.mul(p.prob(a), p.prob(b)));
}

} // namespace genprob
