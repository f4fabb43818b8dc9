#pragma once

/// @file rational.hpp
/// @brief Exact rationals kept in lowest terms with a positive denominator,
/// so that equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>

#include "cqs/errors.hpp"
#include "cqs/int.hpp"

namespace cqs {

template <class T>
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(T n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by intent
  Rational(T n, T d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  const T& num() const { return num_; }
  const T& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Rational operator-() const { return Rational(T(-num_), den_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    T lhs = a.num_ * b.den_;
    T rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  struct Reduced {};
  Rational(T n, T d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    T g = boost::multiprecision::gcd(num_ < 0 ? T(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  T num_;
  T den_;
};

using Rat = Rational<Int>;

}  // namespace cqs
