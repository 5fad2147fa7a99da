#include "genprob/instances.hpp"

#include <cmath>
#include <cstdio>

namespace genprob {

namespace {

// Samplers draw from a coarse grid so that products of a few sampled values
// stay far above the float tolerance (a near-zero product of non-zero grid
// values would otherwise trip the NMP4 biconditional).
constexpr int kGrid = 64;

class RationalStructure final : public Structure {
public:
  const std::string& id() const override {
    static const std::string name = "classical-rational";
    return name;
  }

  Caps caps() const override { return {true, true, true, true}; }

  Value zero() const override { return Value(Rational(0)); }
  Value one() const override { return Value(Rational(1)); }

  Value add(const Value& a, const Value& b) const override { return Value(a.rat() + b.rat()); }
  Value mul(const Value& a, const Value& b) const override { return Value(a.rat() * b.rat()); }
  int compare(const Value& a, const Value& b) const override { return a.rat().cmp(b.rat()); }

  Value neg(const Value& a) const override { return Value(-a.rat()); }

  Value recip(const Value& a) const override {
    if (a.rat().is_zero()) {
      fail(Errc::division_by_zero, "algebra", "reciprocal of the zero element");
    }
    return Value(Rational(1) / a.rat());
  }

  // Greatest x with x*b <= a exists only for b > 0 and equals a/b.
  Value residuate(const Value& a, const Value& b) const override {
    if (b.rat().cmp(Rational(0)) <= 0) {
      fail(Errc::division_by_zero, "algebra",
           "residuation has no greatest solution for a non-positive divisor");
    }
    return Value(a.rat() / b.rat());
  }

  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> num(0, kGrid);
    return Value(Rational(num(rng), kGrid));
  }

  Value parse(std::string_view text) const override { return Value(Rational::parse(text)); }
  std::string format(const Value& v) const override { return v.rat().str(); }
};

class FloatStructure : public Structure {
public:
  explicit FloatStructure(double tolerance) : tol_(tolerance) {}

  Value zero() const override { return Value(0.0); }
  Value one() const override { return Value(1.0); }

  int compare(const Value& a, const Value& b) const override {
    const double x = a.flt();
    const double y = b.flt();
    if (std::fabs(x - y) <= tol_) return 0;
    return x < y ? -1 : 1;
  }

  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> num(0, kGrid);
    return Value(static_cast<double>(num(rng)) / kGrid);
  }

  Value parse(std::string_view text) const override {
    return Value(Rational::parse(text).to_double());
  }

  std::string format(const Value& v) const override {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v.flt());
    return buf;
  }

protected:
  double tol_;
};

class ClassicalFloat final : public FloatStructure {
public:
  using FloatStructure::FloatStructure;

  const std::string& id() const override {
    static const std::string name = "classical-float";
    return name;
  }

  Caps caps() const override { return {true, true, true, true}; }

  Value add(const Value& a, const Value& b) const override { return Value(a.flt() + b.flt()); }
  Value mul(const Value& a, const Value& b) const override { return Value(a.flt() * b.flt()); }
  Value neg(const Value& a) const override { return Value(-a.flt()); }

  Value recip(const Value& a) const override {
    if (is_zero(a)) fail(Errc::division_by_zero, "algebra", "reciprocal of the zero element");
    return Value(1.0 / a.flt());
  }

  Value residuate(const Value& a, const Value& b) const override {
    if (compare(b, zero()) <= 0) {
      fail(Errc::division_by_zero, "algebra",
           "residuation has no greatest solution for a non-positive divisor");
    }
    return Value(a.flt() / b.flt());
  }
};

class PossibilityStructure final : public FloatStructure {
public:
  using FloatStructure::FloatStructure;

  const std::string& id() const override {
    static const std::string name = "possibility";
    return name;
  }

  Caps caps() const override { return {false, false, true, true}; }

  Value add(const Value& a, const Value& b) const override {
    return Value(std::max(a.flt(), b.flt()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(std::min(a.flt(), b.flt()));
  }

  // Greatest x in [0,1] with min(x, b) <= a: the whole carrier when b <= a,
  // otherwise a itself.
  Value residuate(const Value& a, const Value& b) const override {
    return leq(b, a) ? one() : a;
  }
};

class ViterbiStructure final : public FloatStructure {
public:
  using FloatStructure::FloatStructure;

  const std::string& id() const override {
    static const std::string name = "viterbi";
    return name;
  }

  Caps caps() const override { return {false, true, true, true}; }

  Value add(const Value& a, const Value& b) const override {
    return Value(std::max(a.flt(), b.flt()));
  }
  Value mul(const Value& a, const Value& b) const override { return Value(a.flt() * b.flt()); }

  Value recip(const Value& a) const override {
    if (is_zero(a)) fail(Errc::division_by_zero, "algebra", "reciprocal of the zero element");
    return Value(1.0 / a.flt());
  }

  Value residuate(const Value& a, const Value& b) const override {
    if (compare(b, zero()) <= 0) {
      fail(Errc::division_by_zero, "algebra",
           "residuation has no greatest solution for a zero divisor");
    }
    return Value(a.flt() / b.flt());
  }
};

class BooleanStructure final : public FloatStructure {
public:
  BooleanStructure() : FloatStructure(0.0) {}

  const std::string& id() const override {
    static const std::string name = "boolean";
    return name;
  }

  Caps caps() const override { return {false, false, true, true}; }

  Value add(const Value& a, const Value& b) const override {
    return Value(std::max(a.flt(), b.flt()));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(std::min(a.flt(), b.flt()));
  }

  Value residuate(const Value& a, const Value& b) const override {
    return leq(b, a) ? one() : a;
  }

  Value sample(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> coin(0, 1);
    return Value(static_cast<double>(coin(rng)));
  }

  Value parse(std::string_view text) const override {
    const Value v = FloatStructure::parse(text);
    if (v.flt() != 0.0 && v.flt() != 1.0) {
      fail(Errc::parse_error, "algebra", "boolean carrier admits only 0 and 1");
    }
    return v;
  }
};

} // namespace

StructurePtr classical_rational() { return std::make_shared<RationalStructure>(); }
StructurePtr classical_float(double tolerance) {
  return std::make_shared<ClassicalFloat>(tolerance);
}
StructurePtr possibility(double tolerance) {
  return std::make_shared<PossibilityStructure>(tolerance);
}
StructurePtr viterbi(double tolerance) { return std::make_shared<ViterbiStructure>(tolerance); }
StructurePtr boolean() { return std::make_shared<BooleanStructure>(); }

StructurePtr make_structure(std::string_view id, double tolerance) {
  if (id == "classical-rational") return classical_rational();
  if (id == "classical-float") return classical_float(tolerance);
  if (id == "possibility") return possibility(tolerance);
  if (id == "viterbi") return viterbi(tolerance);
  if (id == "boolean") return boolean();
  fail(Errc::parse_error, "model", "unknown structure instance '" + std::string(id) + "'");
}

std::vector<std::string> registered_instances() {
  return {"classical-rational", "classical-float", "possibility", "viterbi", "boolean"};
}

} // namespace genprob
