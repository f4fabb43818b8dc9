#pragma once

/// @file int.hpp
/// @brief Arbitrary-precision integer used for all scalar arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace cqs {

using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Floor division for any sign combination; b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

/// Representative in [0, m).
inline Int mod(const Int& a, const Int& m) { return a - floor_div(a, m) * m; }

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 1.
inline Int mod_inverse(const Int& a, const Int& m) {
  Int r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    Int t = r0 / r1;
    Int r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  return mod(s0, m);
}

/// Three-way comparison; the multiprecision types predate operator<=>.
inline std::strong_ordering compare(const Int& a, const Int& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace cqs
