#include "genprob/integral.hpp"

namespace genprob {

SimpleFunction SimpleFunction::make(StructurePtr structure, std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!(terms[i].second & terms[j].second).empty()) {
        fail(Errc::overlapping_terms, "integral",
             "simple-function events must be pairwise disjoint");
      }
    }
  }
  return SimpleFunction(std::move(structure), std::move(terms));
}

SimpleFunction SimpleFunction::indicator(StructurePtr structure, const Event& a) {
  std::vector<Term> terms{{structure->one(), a}};
  return SimpleFunction(std::move(structure), std::move(terms));
}

Value SimpleFunction::eval_at(std::size_t outcome) const {
  Value acc = structure_->zero();
  for (const auto& [coeff, event] : terms_) {
    const Value ind = event.contains(outcome) ? structure_->one() : structure_->zero();
    acc = structure_->add(acc, structure_->mul(coeff, ind));
  }
  return acc;
}

namespace {

// Atom-level value table of a simple function under a measure's algebra:
// an atom inside term i carries coefficient a_i, anything uncovered carries
// zero. Terms must be measurable for this to be well defined.
std::vector<Value> atom_table(const Measure& mu, const SimpleFunction& f) {
  const Structure& s = mu.structure();
  const auto& atoms = mu.algebra().atoms();
  std::vector<Value> table(atoms.size(), s.zero());
  for (const auto& [coeff, event] : f.terms()) {
    if (!mu.algebra().is_measurable(event)) {
      fail(Errc::not_measurable, "integral", "simple-function event is not measurable");
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i].is_subset_of(event)) table[i] = coeff;
    }
  }
  return table;
}

Value integrate_atom_table(const Measure& mu, std::span<const Value> table) {
  const Structure& s = mu.structure();
  Value acc = s.zero();
  for (std::size_t i = 0; i < table.size(); ++i) {
    acc = s.add(acc, s.mul(table[i], mu.atom_weights()[i]));
  }
  return acc;
}

void require_same_algebra(const Measure& mu, const RandomVariable& f) {
  if (mu.algebra_ptr() != f.algebra_ptr()) {
    fail(Errc::space_mismatch, "integral", "function lives on a different algebra");
  }
}

} // namespace

Value integrate_simple(const Measure& mu, const SimpleFunction& f) {
  return integrate_atom_table(mu, atom_table(mu, f));
}

Value integrate_simple_as_given(const Measure& mu, const SimpleFunction& f) {
  const Structure& s = mu.structure();
  Value acc = s.zero();
  for (const auto& [coeff, event] : f.terms()) {
    acc = s.add(acc, s.mul(coeff, mu.measure_of(event)));
  }
  return acc;
}

Value integrate_nonneg(const Measure& mu, const RandomVariable& f) {
  require_same_algebra(mu, f);
  const Structure& s = mu.structure();
  for (const Value& v : f.atom_values()) {
    if (s.lt(v, s.zero())) {
      fail(Errc::negative_value, "integral", "function value " + s.format(v) + " is negative");
    }
  }
  return integrate_atom_table(mu, f.atom_values());
}

SignedParts signed_parts(const RandomVariable& f) {
  const Structure& s = f.structure();
  if (!s.caps().additive_group) {
    fail(Errc::capability_missing, "integral",
         "signed decomposition needs an additive group; '" + s.id() + "' is not one");
  }
  std::vector<Value> pos, neg;
  pos.reserve(f.atom_values().size());
  neg.reserve(f.atom_values().size());
  for (const Value& v : f.atom_values()) {
    if (s.geq(v, s.zero())) {
      pos.push_back(v);
      neg.push_back(s.zero());
    } else {
      pos.push_back(s.zero());
      neg.push_back(s.neg(v));
    }
  }
  return SignedParts{
      RandomVariable::from_atom_values(f.structure_ptr(), f.algebra_ptr(), std::move(pos)),
      RandomVariable::from_atom_values(f.structure_ptr(), f.algebra_ptr(), std::move(neg))};
}

Value integrate_signed(const Measure& mu, const RandomVariable& f) {
  require_same_algebra(mu, f);
  const SignedParts parts = signed_parts(f);
  const Structure& s = mu.structure();
  return sub(s, integrate_nonneg(mu, parts.positive), integrate_nonneg(mu, parts.negative));
}

Value integrate_over(const Measure& mu, const RandomVariable& f, const Event& a) {
  require_same_algebra(mu, f);
  if (!mu.algebra().is_measurable(a)) {
    fail(Errc::not_measurable, "integral", "restriction event is not measurable");
  }
  const Structure& s = mu.structure();
  const auto& atoms = mu.algebra().atoms();
  std::vector<Value> restricted;
  restricted.reserve(atoms.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Value ind = atoms[i].is_subset_of(a) ? s.one() : s.zero();
    restricted.push_back(s.mul(f.at_atom(i), ind));
  }
  auto g = RandomVariable::from_atom_values(f.structure_ptr(), f.algebra_ptr(),
                                            std::move(restricted));
  bool nonneg = true;
  for (const Value& v : g.atom_values()) {
    if (s.lt(v, s.zero())) {
      nonneg = false;
      break;
    }
  }
  return nonneg ? integrate_nonneg(mu, g) : integrate_signed(mu, g);
}

Value expected_value(const ProbabilityMeasure& p, const RandomVariable& x) {
  require_same_algebra(p, x);
  const Structure& s = p.structure();
  for (const Value& v : x.atom_values()) {
    if (s.lt(v, s.zero())) return integrate_signed(p, x);
  }
  return integrate_nonneg(p, x);
}

} // namespace genprob
