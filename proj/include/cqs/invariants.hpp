#pragma once

/// @file invariants.hpp
/// @brief Milnor numbers and component dimensions of the reduced versal base,
/// each computed twice: from the chain data (a_i, k_i, q_i) and from the
/// geometry of the fans.
///
/// With S = sum over cones of l/h:
///   milnor_toric = S - 1
///   milnor_stevens = dim T^1 - 3(e - 3) + #{2 < i < e-1 : q_i = 1} + 2
///   dim_toric = nu - 3r + 2S - 2
///   dim_stevens = #{2 < i < e-1 : q_i = 1} + sum (a_i - k_i)
/// dim T^1 = sum a_i - 2 is the value that makes the two Milnor formulas
/// agree on the Artin component.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cqs/cqs_model.hpp"
#include "cqs/errors.hpp"
#include "cqs/kset.hpp"
#include "cqs/presolution.hpp"

namespace cqs {

/// Sum over the two-dimensional cones of l/h; every summand must be integral.
inline Int roof_ratio_sum(const Fan& fan) {
  Int s = 0;
  for (const FanCone& c : fan.cones) {
    if (c.roof.l % c.roof.h != 0)
      throw ConsistencyError("roof ratio l/h = " + c.roof.l.str() + "/" + c.roof.h.str() +
                             " is not integral");
    s += c.roof.l / c.roof.h;
  }
  return s;
}

inline Int milnor_toric(const Fan& fan) { return roof_ratio_sum(fan) - 1; }

/// #{i : 2 < i < e-1, q_i = 1}.
inline Int count_unit_q(const KChain& chain) {
  const std::size_t e = chain.size() + 2;
  Int count = 0;
  for (std::size_t i = 3; i + 2 <= e; ++i)
    if (chain.q(i) == 1) ++count;
  return count;
}

inline Int milnor_stevens(const NormalForm& nf, const KChain& chain) {
  return dim_t1(nf) - 3 * (nf.e - 3) + count_unit_q(chain) + 2;
}

/// Sum of det(v^{i-1}, v^{i+1}) over the interior rays of the minimal
/// resolution; equals sum b_i.
inline Int nu(const NormalForm& nf) {
  std::vector<NVec> v = v_rays(nf);
  Int total = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) total += det(v[i - 1], v[i + 1]);
  if (total != sum(nf.b_chain.coefficients))
    throw ConsistencyError("nu: determinant sum differs from sum of b_i");
  return total;
}

inline Int r(const NormalForm& nf) { return Int(nf.r()); }

/// h^1 of the tangent sheaf of the minimal resolution, sum (b_i - 1).
inline Int h1_theta(const NormalForm& nf) { return nu(nf) - r(nf); }

inline Int dim_toric(const NormalForm& nf, const Fan& fan) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  if (fan.first() != nf.first() || fan.last() != nf.last())
    throw DomainError("dim_toric: fan does not subdivide this cone");
  return nu(nf) - 3 * r(nf) + 2 * roof_ratio_sum(fan) - 2;
}

inline Int dim_stevens(const NormalForm& nf, const KChain& chain) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  if (chain.size() != nf.a_chain.size()) throw DomainError("dim_stevens: chain length mismatch");
  Int excess = 0;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (chain.k[j] > nf.a_chain[j]) throw DomainError("dim_stevens: chain exceeds the a-chain");
    excess += nf.a_chain[j] - chain.k[j];
  }
  return count_unit_q(chain) + excess;
}

/// dim S_1 - dim S_2 read off the two fans alone.
inline Int dim_difference(const Fan& fan1, const Fan& fan2) {
  if (fan1.first() != fan2.first() || fan1.last() != fan2.last())
    throw DomainError("dim_difference: fans subdivide different cones");
  return 2 * roof_ratio_sum(fan1) - 2 * roof_ratio_sum(fan2);
}

struct ComponentReport {
  KChain k_chain;
  Fan fan;
  Int milnor_toric;
  Int milnor_stevens;
  Int dim_toric;
  Int dim_stevens;
  bool is_artin = false;
};

struct SingularityReport {
  NormalForm nf;
  Int r;
  Int nu;
  Int dim_t1;
  Int h1_theta;
  std::vector<ComponentReport> components;
  std::vector<std::string> warnings;
};

namespace detail {

struct ReferenceChain {
  long long n;
  long long q;
  std::vector<long long> printed;
  std::vector<long long> matching;  // admissible chain with the same invariants
};

/// Chains quoted for specific singularities in the literature that are worth
/// checking against the enumeration.
inline const std::vector<ReferenceChain>& reference_chains() {
  static const std::vector<ReferenceChain> table{{18, 11, {2, 3, 1, 2}, {1, 3, 1, 2}}};
  return table;
}

inline std::vector<Int> to_ints(const std::vector<long long>& xs) {
  return {xs.begin(), xs.end()};
}

inline std::vector<std::string> reference_warnings(const NormalForm& nf,
                                                   const std::vector<KChain>& chains) {
  std::vector<std::string> out;
  for (const ReferenceChain& ref : reference_chains()) {
    std::vector<Int> printed = to_ints(ref.printed);
    std::vector<Int> matching = to_ints(ref.matching);
    if (nf.n != ref.n) continue;
    if (nf.q != ref.q) {
      if (nf.q != mod_inverse(Int(ref.q), Int(ref.n))) continue;
      std::reverse(printed.begin(), printed.end());
      std::reverse(matching.begin(), matching.end());
    }
    bool listed = std::any_of(chains.begin(), chains.end(),
                              [&](const KChain& c) { return c.k == printed; });
    if (listed) continue;
    std::optional<Rat> value = cf_eval(printed);
    std::ostringstream shown;
    if (value)
      shown << *value;
    else
      shown << "undefined";
    std::ostringstream msg;
    msg << "reference chain [" << join(printed) << "] for Y(" << nf.n << "," << nf.q
        << ") is inadmissible (continued fraction evaluates to "
        << shown.str()
        << ", not 0); the admissible chain with matching invariants is [" << join(matching)
        << "]";
    out.push_back(msg.str());
  }
  return out;
}

inline ConsistencyError mismatch(const NormalForm& nf, const KChain& c, const std::string& what,
                                 const Int& lhs, const Int& rhs) {
  std::ostringstream msg;
  msg << "(" << nf.n << " " << nf.q << " " << join(c.k) << ") " << what << ": " << lhs
      << " != " << rhs;
  return ConsistencyError(msg.str());
}

}  // namespace detail

/// One component per admissible chain, lexicographic, with every
/// cross-formula identity enforced.
inline SingularityReport component_table(const NormalForm& nf) {
  if (nf.is_hypersurface()) throw HypersurfaceCase();
  SingularityReport rep;
  rep.nf = nf;
  rep.r = r(nf);
  rep.nu = nu(nf);
  rep.dim_t1 = dim_t1(nf);
  rep.h1_theta = h1_theta(nf);

  const std::vector<Int> artin = rdp_chain(nf.a_chain.size());
  std::vector<KChain> chains = enumerate_KY(nf.a_chain);
  for (KChain& chain : chains) {
    ComponentReport c;
    c.fan = build_sigma_k(nf, chain);
    c.milnor_toric = milnor_toric(c.fan);
    c.milnor_stevens = milnor_stevens(nf, chain);
    c.dim_toric = dim_toric(nf, c.fan);
    c.dim_stevens = dim_stevens(nf, chain);
    c.is_artin = chain.k == artin;
    if (c.milnor_toric != c.milnor_stevens)
      throw detail::mismatch(nf, chain, "milnor toric vs stevens", c.milnor_toric, c.milnor_stevens);
    if (c.dim_toric != c.dim_stevens)
      throw detail::mismatch(nf, chain, "dim toric vs stevens", c.dim_toric, c.dim_stevens);
    Int via_h1 = rep.h1_theta + 2 * c.milnor_toric - 2 * rep.r;
    if (c.dim_toric != via_h1)
      throw detail::mismatch(nf, chain, "dim vs h1 + 2 milnor - 2r", c.dim_toric, via_h1);
    c.k_chain = std::move(chain);
    rep.components.push_back(std::move(c));
  }

  auto artin_it = std::find_if(rep.components.begin(), rep.components.end(),
                               [](const ComponentReport& c) { return c.is_artin; });
  if (artin_it == rep.components.end())
    throw ConsistencyError("component_table: Artin chain missing from K(Y)");
  for (const ComponentReport& c : rep.components)
    if (c.dim_toric > artin_it->dim_toric)
      throw detail::mismatch(nf, c.k_chain, "dimension exceeds the Artin component", c.dim_toric,
                             artin_it->dim_toric);

  std::vector<KChain> listed;
  for (const ComponentReport& c : rep.components) listed.push_back(c.k_chain);
  rep.warnings = detail::reference_warnings(nf, listed);
  return rep;
}

}  // namespace cqs
