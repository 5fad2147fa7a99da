#include "genprob/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace genprob {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    fail(Errc::overflow, "algebra", "rational arithmetic overflowed 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::from_i128(__int128 num, __int128 den) {
  if (den == 0) fail(Errc::division_by_zero, "algebra", "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  const __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_i128(num, den);
}

int Rational::cmp(const Rational& o) const {
  const __int128 lhs = static_cast<__int128>(num_) * o.den_;
  const __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_i128(
      static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_i128(static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(Errc::division_by_zero, "algebra", "rational division by zero");
  return Rational::from_i128(static_cast<__int128>(a.num_) * b.den_,
                             static_cast<__int128>(a.den_) * b.num_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() -> Rational {
    fail(Errc::parse_error, "algebra", "not a rational literal: '" + std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return bad();

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t p = 0, q = 0;
    const auto lhs = text.substr(0, slash);
    const auto rhs = text.substr(slash + 1);
    auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), p);
    auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), q);
    if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() ||
        r2.ec != std::errc{} || r2.ptr != rhs.data() + rhs.size()) {
      return bad();
    }
    if (q == 0) fail(Errc::parse_error, "algebra", "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    std::int64_t p = 0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), p);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) return bad();
    return Rational(p);
  }

  // Decimal: digits '.' digits, optional sign.
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto d = body.find('.');
  const auto ipart = body.substr(0, d);
  const auto fpart = body.substr(d + 1);
  if (ipart.empty() && fpart.empty()) return bad();
  __int128 num = 0;
  __int128 den = 1;
  for (char c : ipart) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return bad();
    num = num * 10 + (c - '0');
    if (num > static_cast<__int128>(1) << 100) fail(Errc::overflow, "algebra", "decimal literal too long");
  }
  for (char c : fpart) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return bad();
    num = num * 10 + (c - '0');
    den *= 10;
    if (den > static_cast<__int128>(1) << 100) fail(Errc::overflow, "algebra", "decimal literal too long");
  }
  if (negative) num = -num;
  return from_i128(num, den);
}

} // namespace genprob
