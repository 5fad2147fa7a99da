#include "genprob/randvar.hpp"

namespace genprob {

RandomVariable::RandomVariable(StructurePtr s, AlgebraPtr a, std::vector<Value> v)
    : structure_(std::move(s)), algebra_(std::move(a)), values_(std::move(v)) {}

RandomVariable RandomVariable::from_atom_values(StructurePtr structure, AlgebraPtr algebra,
                                                std::vector<Value> atom_values) {
  if (atom_values.size() != algebra->atoms().size()) {
    fail(Errc::parse_error, "randvar", "expected one value per atom");
  }
  return RandomVariable(std::move(structure), std::move(algebra), std::move(atom_values));
}

RandomVariable RandomVariable::from_outcome_values(StructurePtr structure, AlgebraPtr algebra,
                                                   std::vector<Value> outcome_values) {
  const auto& space = *algebra->space();
  if (outcome_values.size() != space.size()) {
    fail(Errc::parse_error, "randvar", "expected one value per outcome");
  }
  std::vector<Value> atom_values;
  atom_values.reserve(algebra->atoms().size());
  for (const Event& atom : algebra->atoms()) {
    std::optional<Value> rep;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (!atom.contains(i)) continue;
      if (!rep) {
        rep = outcome_values[i];
      } else if (!structure->equal(*rep, outcome_values[i])) {
        fail(Errc::not_measurable, "randvar",
             "variable is not constant on an atom, hence not measurable");
      }
    }
    atom_values.push_back(*rep);
  }
  return RandomVariable(std::move(structure), std::move(algebra), std::move(atom_values));
}

std::vector<Value> RandomVariable::range() const {
  std::vector<Value> out;
  for (const Value& v : values_) {
    bool known = false;
    for (const Value& w : out) {
      if (structure_->equal(v, w)) {
        known = true;
        break;
      }
    }
    if (!known) out.push_back(v);
  }
  // Selection sort by the carrier order; ranges are tiny.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    std::size_t lo = i;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (structure_->lt(out[j], out[lo])) lo = j;
    }
    std::swap(out[i], out[lo]);
  }
  return out;
}

ValueSet ValueSet::of(StructurePtr structure, std::vector<Value> values) {
  std::vector<Value> distinct;
  for (const Value& v : values) {
    bool known = false;
    for (const Value& w : distinct) {
      if (structure->equal(v, w)) {
        known = true;
        break;
      }
    }
    if (!known) distinct.push_back(v);
  }
  return ValueSet(std::move(structure), std::move(distinct));
}

bool ValueSet::contains(const Value& v) const {
  for (const Value& w : values_) {
    if (structure_->equal(v, w)) return true;
  }
  return false;
}

Event preimage(const RandomVariable& x, const ValueSet& a) {
  Event e = Event::none(x.algebra().space());
  const auto& atoms = x.algebra().atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (a.contains(x.at_atom(i))) e = e | atoms[i];
  }
  return e;
}

namespace {

void require_same_setting(const ProbabilityMeasure& p, const RandomVariable& x) {
  if (p.algebra_ptr() != x.algebra_ptr()) {
    fail(Errc::space_mismatch, "randvar", "variable lives on a different algebra");
  }
}

} // namespace

Value pushforward(const ProbabilityMeasure& p, const RandomVariable& x, const ValueSet& a) {
  require_same_setting(p, x);
  return p.prob(preimage(x, a));
}

Value joint(const ProbabilityMeasure& p, const RandomVariable& x, const RandomVariable& y,
            const ValueSet& a, const ValueSet& b) {
  require_same_setting(p, x);
  require_same_setting(p, y);
  return p.prob(preimage(x, a) & preimage(y, b));
}

bool rv_independent(const ProbabilityMeasure& p, const RandomVariable& x,
                    const RandomVariable& y, const ValueSet& a, const ValueSet& b) {
  require_same_setting(p, x);
  require_same_setting(p, y);
  const Event ex = preimage(x, a);
  const Event ey = preimage(y, b);
  if ((ex & ey).empty()) {
    fail(Errc::empty_intersection, "randvar",
         "independence is defined only for overlapping preimages");
  }
  const Structure& s = p.structure();
  return s.equal(p.prob(ex & ey), s.mul(p.prob(ex), p.prob(ey)));
}

Conditioning conditional_distribution(const ProbabilityMeasure& p, const RandomVariable& x,
                                      const ValueSet& a, const RandomVariable& y,
                                      const ValueSet& b) {
  require_same_setting(p, x);
  require_same_setting(p, y);
  return conditional(p, preimage(x, a), preimage(y, b));
}

ProbabilityMeasure induced_measure(const ProbabilityMeasure& p, const RandomVariable& x) {
  require_same_setting(p, x);
  const Structure& s = p.structure();
  const std::vector<Value> range = x.range();
  std::vector<std::string> labels;
  std::vector<Value> weights;
  labels.reserve(range.size());
  weights.reserve(range.size());
  for (const Value& v : range) {
    labels.push_back(s.format(v));
    weights.push_back(pushforward(p, x, ValueSet::of(p.structure_ptr(), {v})));
  }
  auto space = make_space(std::move(labels));
  return ProbabilityMeasure::make(p.structure_ptr(), power_set_algebra(std::move(space)),
                                  std::move(weights));
}

} // namespace genprob
