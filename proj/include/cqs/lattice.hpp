#pragma once

/// @file lattice.hpp
/// @brief Two-dimensional lattice vectors in N (rays, points) and in the dual
/// lattice M (functionals, roof normals).
///
/// The side is part of the type, so pairing an N-vector with another
/// N-vector does not compile.

#include <ostream>
#include <utility>

#include "cqs/errors.hpp"
#include "cqs/int.hpp"
#include "cqs/rational.hpp"

namespace cqs {

enum class Side { N, M };

template <Side S>
struct Vec {
  Int x;
  Int y;

  friend bool operator==(const Vec& a, const Vec& b) { return a.x == b.x && a.y == b.y; }
  friend std::strong_ordering operator<=>(const Vec& a, const Vec& b) {
    if (auto c = compare(a.x, b.x); c != 0) return c;
    return compare(a.y, b.y);
  }

  friend Vec operator+(const Vec& a, const Vec& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec operator-(const Vec& a, const Vec& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec operator*(const Int& k, const Vec& v) { return {k * v.x, k * v.y}; }
  Vec operator-() const { return {-x, -y}; }

  bool is_zero() const { return x == 0 && y == 0; }

  friend std::ostream& operator<<(std::ostream& os, const Vec& v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

using NVec = Vec<Side::N>;
using MVec = Vec<Side::M>;

inline Int pair(const NVec& v, const MVec& w) { return v.x * w.x + v.y * w.y; }

template <Side S>
Int det(const Vec<S>& a, const Vec<S>& b) {
  return a.x * b.y - a.y * b.x;
}

template <Side S>
Int content(const Vec<S>& v) {
  return gcd(v.x, v.y);
}

template <Side S>
bool is_primitive(const Vec<S>& v) {
  return content(v) == 1;
}

template <Side S>
Vec<S> primitive(const Vec<S>& v) {
  if (v.is_zero()) throw DegenerateError("primitive: zero vector");
  Int g = content(v);
  return {v.x / g, v.y / g};
}

/// Point of N ⊗ Q.
struct RatPoint {
  Rat x;
  Rat y;

  RatPoint() = default;
  RatPoint(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RatPoint(const NVec& v) : x(v.x), y(v.y) {}

  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }

  friend std::ostream& operator<<(std::ostream& os, const RatPoint& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

/// Length of [p, q] in the rank-one lattice induced on the line through them:
/// q - p = t * d with d the primitive integer direction, result |t|.
inline Rat lattice_length(const RatPoint& p, const RatPoint& q) {
  if (p == q) throw DegenerateError("lattice_length: coincident endpoints");
  Rat dx = q.x - p.x;
  Rat dy = q.y - p.y;
  // Clear denominators to get an integer direction.
  Int scale = dx.den() * dy.den() / gcd(dx.den(), dy.den());
  NVec dir = primitive(NVec{dx.num() * (scale / dx.den()), dy.num() * (scale / dy.den())});
  Rat t = dir.x != 0 ? dx / Rat(dir.x) : dy / Rat(dir.y);
  return t < Rat(0) ? -t : t;
}

inline Rat lattice_length(const NVec& p, const NVec& q) {
  return lattice_length(RatPoint(p), RatPoint(q));
}

/// Primitive w in M with <d, w> = 0 and <witness, w> > 0.
inline MVec primitive_normal(const NVec& d, const NVec& witness) {
  if (d.is_zero()) throw DegenerateError("primitive_normal: zero direction");
  NVec pd = primitive(d);
  MVec w{-pd.y, pd.x};
  Int s = pair(witness, w);
  if (s == 0) throw DegenerateError("primitive_normal: witness parallel to direction");
  return s > 0 ? w : -w;
}

/// Integer 2x2 matrix acting on column vectors of N.
struct Mat2 {
  Int a, b, c, d;  // [[a, b], [c, d]]

  friend bool operator==(const Mat2&, const Mat2&) = default;

  NVec operator()(const NVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Int determinant() const { return a * d - b * c; }

  /// Inverse of a unimodular matrix.
  Mat2 inverse() const {
    Int dt = determinant();
    if (dt != 1 && dt != -1) throw DomainError("Mat2::inverse: matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
  }

  static Mat2 identity() { return {1, 0, 0, 1}; }
};

}  // namespace cqs
