#ifndef GENPROB_STRUCTURE_HPP
#define GENPROB_STRUCTURE_HPP

#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>

#include "genprob/value.hpp"

namespace genprob {

/// Optional capabilities on top of the ordered (add, mul) monoid pair every
/// structure provides. Group flags imply the corresponding inverse is
/// implemented; residuation means residuate(a, b) yields the greatest x with
/// x (*) b below-or-equal a.
struct Caps {
  bool additive_group = false;
  bool multiplicative_group = false;
  bool distributive = false;
  bool residuation = false;
};

/// An ordered algebraic structure: a totally ordered carrier with commutative
/// monotone addition (identity `zero`) and commutative monotone multiplication
/// (identity `one`, annihilator `zero`). Implementations are immutable and
/// all operations are pure, so instances are safe to share across threads.
class Structure {
public:
  virtual ~Structure() = default;

  virtual const std::string& id() const = 0;
  virtual Caps caps() const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;

  /// Total order on the carrier; returns <0, 0, >0. Floating-point backed
  /// instances compare with an absolute tolerance.
  virtual int compare(const Value& a, const Value& b) const = 0;

  /// Additive inverse. Throws Errc::capability_missing unless the structure
  /// declares additive_group.
  virtual Value neg(const Value& a) const;

  /// Multiplicative inverse of a non-zero element. Throws
  /// Errc::capability_missing / Errc::division_by_zero.
  virtual Value recip(const Value& a) const;

  /// Greatest x with mul(x, b) below-or-equal a, when it exists.
  virtual Value residuate(const Value& a, const Value& b) const;

  /// Random carrier value between zero and one; deterministic in the engine
  /// state. Used by law checking and property tests.
  virtual Value sample(std::mt19937_64& rng) const = 0;

  virtual Value parse(std::string_view text) const = 0;
  virtual std::string format(const Value& v) const = 0;

  bool equal(const Value& a, const Value& b) const { return compare(a, b) == 0; }
  bool geq(const Value& a, const Value& b) const { return compare(a, b) >= 0; }
  bool leq(const Value& a, const Value& b) const { return compare(a, b) <= 0; }
  bool gt(const Value& a, const Value& b) const { return compare(a, b) > 0; }
  bool lt(const Value& a, const Value& b) const { return compare(a, b) < 0; }
  bool is_zero(const Value& a) const { return equal(a, zero()); }
};

using StructurePtr = std::shared_ptr<const Structure>;

/// a (+) (-b). Requires the additive-group capability.
Value sub(const Structure& s, const Value& a, const Value& b);

/// a (*) recip(b). Requires the multiplicative-group capability and b != 0.
Value div(const Structure& s, const Value& a, const Value& b);

/// Left fold of (+) starting at zero; the empty sequence yields zero.
Value fold_add(const Structure& s, std::span<const Value> xs);

} // namespace genprob

#endif // GENPROB_STRUCTURE_HPP
