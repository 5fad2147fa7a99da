#ifndef GENPROB_VALUE_HPP
#define GENPROB_VALUE_HPP

#include <variant>

#include "genprob/errors.hpp"
#include "genprob/rational.hpp"

namespace genprob {

/// A carrier element. Each structure instance fixes which alternative it
/// uses; mixing representations across structures is a programming error.
class Value {
public:
  Value() : rep_(Rational()) {}
  explicit Value(Rational r) : rep_(r) {}
  explicit Value(double d) : rep_(d) {}

  bool holds_rational() const noexcept { return std::holds_alternative<Rational>(rep_); }

  const Rational& rat() const {
    if (!holds_rational()) fail(Errc::internal, "algebra", "carrier value is not rational");
    return std::get<Rational>(rep_);
  }

  double flt() const {
    if (holds_rational()) fail(Errc::internal, "algebra", "carrier value is not floating point");
    return std::get<double>(rep_);
  }

private:
  std::variant<Rational, double> rep_;
};

} // namespace genprob

#endif // GENPROB_VALUE_HPP
