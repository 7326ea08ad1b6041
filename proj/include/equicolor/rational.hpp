#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace equicolor {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

inline Rational rational_pow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return a > b ? a - b : b - a; }

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace equicolor
