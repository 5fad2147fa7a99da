#ifndef GENPROB_RATIONAL_HPP
#define GENPROB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "genprob/errors.hpp"

namespace genprob {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (denominator > 0, gcd(|num|, den) == 1). Intermediates run through
/// 128-bit arithmetic; results that do not fit 64 bits throw Errc::overflow.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Exact three-way comparison: -1, 0, +1.
  int cmp(const Rational& o) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) { return a.cmp(b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.cmp(b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.cmp(b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.cmp(b) >= 0; }

  /// Lowest terms; integral values print without the denominator.
  std::string str() const;

  /// Accepts "p/q", "p", and plain decimal strings such as "0.25".
  static Rational parse(std::string_view text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_;
  std::int64_t den_;
};

} // namespace genprob

#endif // GENPROB_RATIONAL_HPP
