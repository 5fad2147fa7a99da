#include "genprob/structure.hpp"

namespace genprob {

Value Structure::neg(const Value&) const {
  fail(Errc::capability_missing, "algebra", "'" + id() + "' has no additive inverse");
}

Value Structure::recip(const Value&) const {
  fail(Errc::capability_missing, "algebra", "'" + id() + "' has no multiplicative inverse");
}

Value Structure::residuate(const Value&, const Value&) const {
  fail(Errc::capability_missing, "algebra", "'" + id() + "' has no residuation");
}

Value sub(const Structure& s, const Value& a, const Value& b) {
  if (!s.caps().additive_group) {
    fail(Errc::capability_missing, "algebra",
         "subtraction needs an additive group; '" + s.id() + "' is not one");
  }
  return s.add(a, s.neg(b));
}

Value div(const Structure& s, const Value& a, const Value& b) {
  if (!s.caps().multiplicative_group) {
    fail(Errc::capability_missing, "algebra",
         "division needs a multiplicative group; '" + s.id() + "' is not one");
  }
  if (s.is_zero(b)) fail(Errc::division_by_zero, "algebra", "division by the zero element");
  return s.mul(a, s.recip(b));
}

Value fold_add(const Structure& s, std::span<const Value> xs) {
  Value acc = s.zero();
  for (const Value& x : xs) acc = s.add(acc, x);
  return acc;
}

} // namespace genprob
