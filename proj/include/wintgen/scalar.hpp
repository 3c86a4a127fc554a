#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>

#include "wintgen/rational.hpp"

namespace wintgen {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from(const Rational& q) { return q; }
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational abs(const Rational& x) { return x.abs(); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from(const Rational& q) { return q.to_double(); }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static bool is_zero(double x) { return x == 0.0; }
  static std::string to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
};

template <class S>
concept Scalar = requires(const S& x, const S& y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { x / y } -> std::convertible_to<S>;
  { ScalarTraits<S>::is_zero(x) } -> std::convertible_to<bool>;
};

template <class S>
S scalar_from(const Rational& q) {
  return ScalarTraits<S>::from(q);
}

template <class S>
bool is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

template <class S>
S abs_of(const S& x) {
  return ScalarTraits<S>::abs(x);
}

template <class S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

template <class S>
std::string scalar_string(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

}  // namespace wintgen
