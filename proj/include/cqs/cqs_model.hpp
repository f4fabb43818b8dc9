#pragma once

/// @file cqs_model.hpp
/// @brief Cyclic quotient singularities Y(n, q) as cones <(1,0), (-q,n)>.
///
/// Index conventions, used throughout the library:
///   - a-chain entry a_i (i = 2..e-1) is `a_chain[i - 2]`;
///   - semigroup generator w^i (i = 1..e) is `w[i - 1]`;
///   - minimal-resolution ray v^i (i = 0..r+1) is `v[i]`, with b_i = `b_chain[i - 1]`.

#include <string>
#include <utility>
#include <vector>

#include "cqs/chain.hpp"
#include "cqs/errors.hpp"
#include "cqs/int.hpp"
#include "cqs/lattice.hpp"

namespace cqs {

struct InputCone {
  NVec g1;
  NVec g2;
};

struct NormalForm {
  Int n;
  Int q;
  Int dual_q;       // q^{-1} mod n
  Mat2 transform;   // input coordinates -> normal coordinates
  InputCone input;  // generators as given
  Int e;            // embedding dimension
  CoeffChain a_chain;
  CoeffChain b_chain;

  NVec first() const { return {1, 0}; }
  NVec last() const { return {-q, n}; }
  std::size_t r() const { return b_chain.size(); }
  bool is_hypersurface() const { return e <= 3; }

  /// Map a normal-coordinate vector back to the input coordinates.
  NVec to_input(const NVec& v) const { return transform.inverse()(v); }
};

namespace detail {

inline NormalForm assemble(const Int& n, const Int& q, const Mat2& transform, InputCone input) {
  NormalForm nf;
  nf.n = n;
  nf.q = q;
  nf.dual_q = mod_inverse(q, n);
  nf.transform = transform;
  nf.input = std::move(input);
  nf.a_chain = hj_expand(n, n - q, ChainRole::A);
  nf.b_chain = hj_expand(n, q, ChainRole::B);
  nf.e = Int(nf.a_chain.size() + 2);
  return nf;
}

}  // namespace detail

/// Y(n, q) given directly.
inline NormalForm normal_form(const Int& n, const Int& q) {
  if (n == 1) throw SmoothCone();
  if (n < 2 || q <= 0 || q >= n || gcd(n, q) != 1)
    throw DomainError("Y(n,q) needs n >= 2, 0 < q < n, gcd(n, q) = 1");
  return detail::assemble(n, q, Mat2::identity(), {{1, 0}, {-q, n}});
}

/// Finds the unique unimodular map with g1 -> (1,0), g2 -> (-q,n),
/// 0 <= q < n. Order matters: swapping the generators gives (n, q^{-1}).
inline NormalForm normalize_cone(const InputCone& c) {
  if (!is_primitive(c.g1) || !is_primitive(c.g2))
    throw DomainError("cone generators must be primitive");
  Int dt = det(c.g1, c.g2);
  if (dt == 0) throw DomainError("cone generators are parallel");
  Int n = abs(dt);
  if (n == 1) throw SmoothCone();

  // Bezout: s*x + t*y = 1 gives a row sending g1 to 1.
  const Int& x = c.g1.x;
  const Int& y = c.g1.y;
  Int r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int k = floor_div(r0, r1);
    Int tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - k * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  Mat2 m{s0, t0, -y, x};  // m(g1) = (1, 0), det m = 1
  NVec img = m(c.g2);     // (s, det(g1, g2))
  if (img.y < 0) {
    m = Mat2{1, 0, 0, -1} * m;
    img = m(c.g2);
  }
  // Shear along the first axis: (s, n) -> (s + k n, n) with -n < s + k n <= 0.
  Int k = floor_div(-img.x, n);
  m = Mat2{1, k, 0, 1} * m;
  img = m(c.g2);
  Int q = -img.x;
  if (m(c.g1) != NVec{1, 0} || img.y != n || q < 0 || q >= n)
    throw ConsistencyError("normalize_cone: transform failed its own check");
  return detail::assemble(n, q, m, c);
}

/// w^1 = (0,1), w^2 = (1,1), w^{i+1} = a_i w^i - w^{i-1}; ends at (n, q).
inline std::vector<MVec> w_generators(const NormalForm& nf) {
  std::vector<MVec> w{{0, 1}, {1, 1}};
  for (const Int& a : nf.a_chain.coefficients) {
    const MVec& cur = w.back();
    const MVec& prev = w[w.size() - 2];
    w.push_back(a * cur - prev);
  }
  if (w.back() != MVec{nf.n, nf.q})
    throw ConsistencyError("w_generators: endpoint is not (n, q)");
  return w;
}

/// v^0 = (1,0), v^1 = (0,1), v^{i+1} = b_i v^i - v^{i-1}; ends at (-q, n).
inline std::vector<NVec> v_rays(const NormalForm& nf) {
  std::vector<NVec> v{{1, 0}, {0, 1}};
  for (const Int& b : nf.b_chain.coefficients) {
    const NVec& cur = v.back();
    const NVec& prev = v[v.size() - 2];
    v.push_back(b * cur - prev);
  }
  if (v.back() != nf.last()) throw ConsistencyError("v_rays: endpoint is not (-q, n)");
  return v;
}

enum class ClassTag { Smooth, DuValA, T, General };

struct SingularityClass {
  ClassTag tag = ClassTag::General;
  Int h;  // roof height
  Int l;  // roof lattice length

  bool is_t_or_smooth() const { return tag != ClassTag::General; }
  /// Milnor number l/h - 1 of the Q-Gorenstein smoothing (T and smooth cones).
  Int milnor() const {
    if (!is_t_or_smooth()) throw DomainError("milnor: cone is not a T-singularity");
    return l / h - 1;
  }

  std::string label() const {
    switch (tag) {
      case ClassTag::Smooth:
        return "Smooth";
      case ClassTag::DuValA:
        return "A" + Int(l - 1).str();
      case ClassTag::T:
        return "T";
      case ClassTag::General:
        break;
    }
    return "General";
  }

  friend bool operator==(const SingularityClass& a, const SingularityClass& b) {
    return a.tag == b.tag && a.h == b.h && a.l == b.l;
  }
};

struct ConeRoof {
  MVec w;  // primitive, <u, w> = <u', w> = h
  SingularityClass cls;
};

/// Intrinsic roof and class of the cone <u, u'>: w is the primitive normal to
/// u' - u that is positive on the cone, h = <u, w>, l = lattice length of
/// [u, u']. Always det(u, u') = l * h.
inline ConeRoof cone_roof(NVec u, NVec v) {
  if (!is_primitive(u) || !is_primitive(v))
    throw DomainError("classify_cone: generators must be primitive");
  Int dt = det(u, v);
  if (dt == 0) throw DegenerateError("classify_cone: generators are parallel");
  if (dt < 0) {
    std::swap(u, v);
    dt = -dt;
  }
  NVec d = v - u;
  Int l = content(d);
  MVec w = primitive_normal(d, u);
  Int h = pair(u, w);
  if (pair(v, w) != h || l * h != dt)
    throw ConsistencyError("classify_cone: det(u, u') != l * h");

  SingularityClass cls{ClassTag::General, h, l};
  if (dt == 1)
    cls.tag = ClassTag::Smooth;
  else if (h == 1)
    cls.tag = ClassTag::DuValA;
  else if (l % h == 0)
    cls.tag = ClassTag::T;
  return {w, cls};
}

inline SingularityClass classify_cone(const NVec& u, const NVec& v) { return cone_roof(u, v).cls; }

/// dim T^1 = sum a_i - 2, for e >= 4.
inline Int dim_t1(const NormalForm& nf) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  return sum(nf.a_chain.coefficients) - 2;
}

}  // namespace cqs
