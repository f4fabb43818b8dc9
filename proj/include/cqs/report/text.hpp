#pragma once

/// @file text.hpp
/// @brief Plain-text rendering of a singularity report.

#include <sstream>
#include <string>

#include "cqs/cqs.hpp"

namespace cqs::report {

inline std::string to_text(const SingularityReport& rep) {
  const NormalForm& nf = rep.nf;
  std::ostringstream os;
  os << "Y(" << nf.n << "," << nf.q << ")  dual q = " << nf.dual_q << "  e = " << nf.e << "\n";
  os << "a-chain " << nf.a_chain << "  b-chain " << nf.b_chain << "\n";
  os << "r = " << rep.r << "  nu = " << rep.nu << "  dim T1 = " << rep.dim_t1
     << "  h1(Theta) = " << rep.h1_theta << "\n";
  os << rep.components.size() << " P-resolution(s)\n";
  for (const ComponentReport& c : rep.components) {
    os << "  k = [" << join(c.k_chain.k) << "]  q = (" << join(c.k_chain.q_seq) << ")"
       << (c.is_artin ? "  Artin" : "") << "\n";
    os << "    rays";
    for (const NVec& v : c.fan.rays) os << " " << nf.to_input(v);
    os << "\n    cones";
    for (const FanCone& cone : c.fan.cones)
      os << " " << cone.cls.label() << "{h=" << cone.roof.h << ",l=" << cone.roof.l << "}";
    os << "\n    milnor " << c.milnor_toric << " (stevens " << c.milnor_stevens << ")  dim "
       << c.dim_toric << " (stevens " << c.dim_stevens << ")\n";
  }
  for (const std::string& w : rep.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace cqs::report
