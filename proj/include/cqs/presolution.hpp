#pragma once

/// @file presolution.hpp
/// @brief Fans subdividing sigma = <(1,0), (-q,n)>: the minimal resolution,
/// the fans Sigma_k attached to admissible chains, and a brute-force search
/// for P-resolutions over ray subsets.
///
/// All fans live in normal-form coordinates. A P-resolution fan is one whose
/// cones are all smooth or T-cones (h | l) and whose roof path is strictly
/// convex at every interior ray.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cqs/cqs_model.hpp"
#include "cqs/errors.hpp"
#include "cqs/kset.hpp"
#include "cqs/lattice.hpp"

namespace cqs {

struct Roof {
  MVec w;  // primitive
  Int h;   // > 0
  Int l;   // lattice length, > 0 for cones that survive in a fan
  RatPoint lo;
  RatPoint hi;
};

struct FanCone {
  NVec lo;
  NVec hi;
  Roof roof;
  SingularityClass cls;
  int chain_index = -1;  // i of tau_i for fans built from a chain
};

struct Fan {
  std::vector<NVec> rays;  // angularly ordered from (1,0) to (-q,n)
  std::vector<FanCone> cones;

  const NVec& first() const { return rays.front(); }
  const NVec& last() const { return rays.back(); }
  std::size_t interior_ray_count() const { return rays.size() - 2; }

  /// Fans compare as ray sets.
  friend bool operator==(const Fan& a, const Fan& b) { return a.rays == b.rays; }
};

inline Rat pair(const RatPoint& p, const MVec& w) { return p.x * Rat(w.x) + p.y * Rat(w.y); }

/// Fan over consecutive rays with intrinsic roofs through the primitive
/// generators.
inline Fan make_fan(std::vector<NVec> rays) {
  if (rays.size() < 2) throw DomainError("make_fan: need at least two rays");
  Fan fan{std::move(rays), {}};
  for (std::size_t j = 0; j + 1 < fan.rays.size(); ++j) {
    const NVec& u = fan.rays[j];
    const NVec& v = fan.rays[j + 1];
    if (det(u, v) <= 0) throw DomainError("make_fan: rays are not strictly ordered");
    ConeRoof cr = cone_roof(u, v);
    fan.cones.push_back({u, v, Roof{cr.w, cr.cls.h, cr.cls.l, RatPoint(u), RatPoint(v)}, cr.cls});
  }
  return fan;
}

inline Fan minimal_resolution_fan(const NormalForm& nf) { return make_fan(v_rays(nf)); }

/// The trivial subdivision: sigma itself.
inline Fan identity_fan(const NormalForm& nf) { return make_fan({nf.first(), nf.last()}); }

enum class ValidationCheck { None, Structure, TTest, RoofContinuity, Convexity };

struct ValidationReport {
  bool ok = true;
  ValidationCheck failed = ValidationCheck::None;
  std::size_t index = 0;  // offending cone (or ray, for convexity)
  std::string message;
};

inline ValidationReport validate_presolution(const Fan& fan) {
  auto fail = [](ValidationCheck c, std::size_t i, std::string msg) {
    return ValidationReport{false, c, i, std::move(msg)};
  };
  if (fan.rays.size() < 2 || fan.cones.size() + 1 != fan.rays.size())
    return fail(ValidationCheck::Structure, 0, "cone count does not match ray count");

  std::vector<ConeRoof> intrinsic;
  for (std::size_t j = 0; j < fan.cones.size(); ++j) {
    const FanCone& c = fan.cones[j];
    if (c.lo != fan.rays[j] || c.hi != fan.rays[j + 1] || det(c.lo, c.hi) <= 0)
      return fail(ValidationCheck::Structure, j, "cone is not a strictly ordered pair of adjacent rays");
    intrinsic.push_back(cone_roof(c.lo, c.hi));
    if (!intrinsic.back().cls.is_t_or_smooth())
      return fail(ValidationCheck::TTest, j, "cone is neither smooth nor a T-cone (h does not divide l)");
  }

  for (std::size_t j = 0; j < fan.cones.size(); ++j) {
    const Roof& roof = fan.cones[j].roof;
    const NVec& u = fan.cones[j].lo;
    const NVec& v = fan.cones[j].hi;
    bool on_line = pair(roof.lo, roof.w) == Rat(roof.h) && pair(roof.hi, roof.w) == Rat(roof.h);
    auto on_ray = [](const RatPoint& p, const NVec& ray) {
      return p.x * Rat(ray.y) == p.y * Rat(ray.x) && p.x * Rat(ray.x) + p.y * Rat(ray.y) > Rat(0);
    };
    if (!on_line || !on_ray(roof.lo, u) || !on_ray(roof.hi, v))
      return fail(ValidationCheck::RoofContinuity, j, "roof endpoints are off the roof line or rays");
    if (j + 1 < fan.cones.size() && !(roof.hi == fan.cones[j + 1].roof.lo))
      return fail(ValidationCheck::RoofContinuity, j, "adjacent roofs do not meet on the shared ray");
  }

  // Strict convexity: the far end of the next roof lies strictly above the
  // line of the current roof.
  for (std::size_t j = 0; j + 1 < fan.cones.size(); ++j) {
    const Roof& roof = fan.cones[j].roof;
    if (pair(fan.cones[j + 1].roof.hi, roof.w) <= Rat(roof.h))
      return fail(ValidationCheck::Convexity, j + 1, "roof path is not strictly convex at ray " +
                                                         std::to_string(j + 1));
  }
  return {};
}

namespace detail {

inline std::string describe(const std::vector<Int>& k) { return "[" + join(k) + "]"; }

}  // namespace detail

/// Sigma_k. Interior rays are orthogonal to q_{i-1} w^i - q_i w^{i-1}
/// (i = 3..e-1); tau_i has roof line <., w^i> = q_i and length
/// (a_i - k_i) q_i. Each roof corner is also obtained by solving
/// <p, w^{i-1}> = q_{i-1}, <p, w^i> = q_i, and the two routes must agree.
inline Fan build_sigma_k(const NormalForm& nf, const KChain& chain) {
  const std::vector<Int>& k = chain.k;
  const std::vector<Int>& a = nf.a_chain.coefficients;
  if (k.size() != a.size() || !is_zero_chain(k))
    throw DomainError("build_sigma_k: chain " + detail::describe(k) + " is not in K(Y)");
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] > a[j]) throw DomainError("build_sigma_k: chain exceeds the a-chain");

  const std::vector<MVec> w = w_generators(nf);
  const std::vector<Int> q = q_sequence(k);
  const std::size_t e = a.size() + 2;
  auto wi = [&](std::size_t i) -> const MVec& { return w[i - 1]; };
  auto qi = [&](std::size_t i) -> const Int& { return q[i - 1]; };
  auto fail = [&](const std::string& what) {
    return ValidationError("build_sigma_k " + detail::describe(k) + ": " + what);
  };

  // Roof corners p_i, i = 2..e.
  std::vector<NVec> corner(e + 1);
  for (std::size_t i = 2; i <= e; ++i) {
    const MVec& w0 = wi(i - 1);
    const MVec& w1 = wi(i);
    Int dw = w0.x * w1.y - w0.y * w1.x;
    if (dw != 1 && dw != -1) throw ConsistencyError("consecutive w generators are not a basis");
    corner[i] = NVec{(qi(i - 1) * w1.y - qi(i) * w0.y) * dw, (w0.x * qi(i) - w1.x * qi(i - 1)) * dw};
  }
  if (corner[2] != nf.first() || corner[e] != nf.last())
    throw fail("outer roof corners are not the generators of sigma");

  // Rays by rotating the cleared-denominator normal into sigma.
  std::vector<NVec> rays{nf.first()};
  for (std::size_t i = 3; i + 1 <= e; ++i) {
    MVec m = qi(i - 1) * wi(i) - qi(i) * wi(i - 1);
    NVec ray = primitive(NVec{-m.y, m.x});
    if (det(nf.first(), ray) < 0 || det(ray, nf.last()) < 0) ray = -ray;
    if (det(nf.first(), ray) < 0 || det(ray, nf.last()) < 0) throw fail("ray leaves sigma");
    if (!is_primitive(corner[i])) throw fail("roof corner is not primitive");
    if (ray != corner[i]) throw fail("ray and roof corner disagree");
    if (ray != rays.back()) rays.push_back(ray);
  }
  if (rays.back() != nf.last()) rays.push_back(nf.last());

  Fan fan{rays, {}};
  for (std::size_t i = 2; i + 1 <= e; ++i) {
    Int len = (a[i - 2] - k[i - 2]) * qi(i);
    const NVec& lo = corner[i];
    const NVec& hi = corner[i + 1];
    if (len == 0) {
      if (lo != hi) throw fail("degenerate cone with distinct corners");
      continue;
    }
    ConeRoof cr = cone_roof(lo, hi);
    if (cr.w != wi(i) || cr.cls.h != qi(i) || cr.cls.l != len)
      throw fail("intrinsic roof of tau_" + std::to_string(i) + " differs from the chain prediction");
    if (!cr.cls.is_t_or_smooth()) throw fail("tau_" + std::to_string(i) + " fails the T-test");
    fan.cones.push_back({lo, hi, Roof{wi(i), qi(i), len, RatPoint(lo), RatPoint(hi)}, cr.cls,
                         static_cast<int>(i)});
  }

  ValidationReport rep = validate_presolution(fan);
  if (!rep.ok) throw fail(rep.message);
  return fan;
}

/// RDP resolution: Sigma_k for (1,2,...,2,1), cross-checked against the rays
/// through the vertices of conv(sigma ∩ N \ {0}), which are v^0, v^{r+1} and
/// the v^i with b_i >= 3.
inline Fan rdp_fan(const NormalForm& nf) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  Fan fan = build_sigma_k(nf, make_kchain(rdp_chain(nf.a_chain.size())));

  std::vector<NVec> v = v_rays(nf);
  std::vector<NVec> vertices{v.front()};
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (nf.b_chain[i - 1] >= 3) vertices.push_back(v[i]);
  vertices.push_back(v.back());
  if (vertices != fan.rays) throw ConsistencyError("rdp_fan: chain route and hull-vertex route differ");
  for (const FanCone& c : fan.cones)
    if (c.cls.tag != ClassTag::Smooth && c.cls.tag != ClassTag::DuValA)
      throw ConsistencyError("rdp_fan: cone is not a rational double point");
  return fan;
}

/// Primitive lattice points of the closed triangle conv{0, v^0, v^{r+1}}
/// other than the two generators, in angular order.
inline std::vector<NVec> dominating_rays(const NormalForm& nf) {
  std::vector<NVec> out;
  // p = s (1,0) + t (-q,n) with s, t >= 0 and s + t <= 1; scaled by n:
  // t n = y, s n = x n + q y.
  for (Int y = 0; y <= nf.n; ++y) {
    for (Int x = -nf.q; x <= 1; ++x) {
      Int sn = x * nf.n + nf.q * y;
      if (sn < 0 || sn + y > nf.n) continue;
      NVec p{x, y};
      if (p.is_zero() || p == nf.first() || p == nf.last() || !is_primitive(p)) continue;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(), [](const NVec& u, const NVec& v) { return det(u, v) > 0; });
  return out;
}

/// Every subset of the dominating fan's interior rays that passes
/// validate_presolution, sorted by ray list.
inline std::vector<Fan> brute_force_presolutions(const NormalForm& nf, std::size_t max_rays = 20) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  std::vector<NVec> cand = dominating_rays(nf);
  if (cand.size() > max_rays)
    throw ResourceError("brute_force_presolutions: " + std::to_string(cand.size()) +
                        " candidate rays exceed the bound " + std::to_string(max_rays));
  std::vector<Fan> out;
  const std::uint64_t subsets = std::uint64_t{1} << cand.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<NVec> rays{nf.first()};
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (mask >> j & 1) rays.push_back(cand[j]);
    rays.push_back(nf.last());
    Fan fan = make_fan(std::move(rays));
    if (validate_presolution(fan).ok) out.push_back(std::move(fan));
  }
  std::sort(out.begin(), out.end(), [](const Fan& x, const Fan& y) { return x.rays < y.rays; });
  return out;
}

}  // namespace cqs
