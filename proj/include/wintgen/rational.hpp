#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wintgen {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("rational division by zero") {}
};

// Exact rational in canonical form (gcd(num, den) = 1, den > 0).
// Values that fit in int64 are stored inline; larger ones fall back to GMP.
// A value is always stored inline when it fits, so equal values have equal
// representations.
class Rational {
 public:
  Rational() = default;
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(int v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);
  // Exact value of a finite double via its shortest decimal representation.
  static Rational from_double_decimal(double v);

  bool is_zero() const { return big_ == nullptr && num_ == 0; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  double to_double() const;
  std::string to_string() const;  // "p" or "p/q"

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;
  // Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> exact_sqrt() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y);
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y);
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline Rational pow(const Rational& x, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace wintgen
