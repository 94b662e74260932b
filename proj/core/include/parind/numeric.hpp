#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace parind {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& x, long e) {
  if (e >= 0) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
  }
  Rational r = rational_pow(x, -e);
  return Rational(1) / r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact integer square root test.
inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

/// Exact square root of a rational, when one exists in Q.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  auto n = exact_isqrt(numerator(x));
  if (!n) return std::nullopt;
  auto d = exact_isqrt(denominator(x));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int64_t ipow64(int64_t base, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline int64_t mulmod64(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>((static_cast<__int128>(a) * b) % m);
}

}  // namespace parind
