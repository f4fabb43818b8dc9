#pragma once

/// @file chain.hpp
/// @brief Integer coefficient chains and Hirzebruch-Jung continued fractions
/// [c1, ..., ck] = c1 - 1/[c2, ..., ck].

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cqs/errors.hpp"
#include "cqs/int.hpp"
#include "cqs/rational.hpp"

namespace cqs {

enum class ChainRole { A, B, K, Generic };

struct CoeffChain {
  std::vector<Int> coefficients;
  ChainRole role = ChainRole::Generic;

  std::size_t size() const { return coefficients.size(); }
  const Int& operator[](std::size_t i) const { return coefficients[i]; }

  friend bool operator==(const CoeffChain& a, const CoeffChain& b) {
    return a.coefficients == b.coefficients;
  }
};

inline std::vector<Int> ints(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  out.reserve(xs.size());
  for (long long x : xs) out.emplace_back(x);
  return out;
}

inline Int sum(const std::vector<Int>& xs) {
  Int s = 0;
  for (const Int& x : xs) s += x;
  return s;
}

/// "1,2,2,1" style rendering; `sep` between entries.
inline std::string join(const std::vector<Int>& xs, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i].str();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const CoeffChain& c) {
  return os << '[' << join(c.coefficients) << ']';
}

/// Unique expansion of n/q with every entry >= 2, by repeated ceiling
/// division.
inline CoeffChain hj_expand(const Int& n, const Int& q, ChainRole role = ChainRole::Generic) {
  if (n < 2 || q <= 0 || q >= n || gcd(n, q) != 1)
    throw DomainError("hj_expand: need n >= 2, 0 < q < n, gcd(n, q) = 1");
  CoeffChain out{{}, role};
  Int num = n, den = q;
  while (den != 0) {
    Int c = ceil_div(num, den);
    out.coefficients.push_back(c);
    Int rest = c * den - num;
    num = den;
    den = rest;
  }
  return out;
}

/// Right-to-left evaluation. Empty optional when a tail evaluating to zero
/// would be used as a divisor.
inline std::optional<Rat> cf_eval(const std::vector<Int>& chain) {
  if (chain.empty()) throw DomainError("cf_eval: empty chain");
  Rat value(chain.back());
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    if (value.num() == 0) return std::nullopt;
    value = Rat(chain[i]) - Rat(1) / value;
  }
  return value;
}

inline std::optional<Rat> cf_eval(const CoeffChain& chain) { return cf_eval(chain.coefficients); }

}  // namespace cqs
