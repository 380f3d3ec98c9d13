#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "error.hpp"

namespace pluri {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Floor of a/b for b > 0 and any sign of a.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Ceiling of a/b for b > 0.
constexpr __int128 ceil_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

// lcm with overflow detection; throws Unsupported past int64.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out))
    throw Unsupported("lcm exceeds 64-bit range");
  return out;
}

inline std::int64_t lcm_of(std::span<const int> values) {
  std::int64_t acc = 1;
  for (int v : values) acc = checked_lcm(acc, v);
  return acc;
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out))
      throw Unsupported("power exceeds 64-bit range");
  }
  return out;
}

// Exponent e with value == base^e, or -1 if value is not a power of base.
inline int exact_log(std::int64_t value, std::int64_t base) {
  if (value < 1 || base < 2) return -1;
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  return value == 1 ? e : -1;
}

}  // namespace pluri
