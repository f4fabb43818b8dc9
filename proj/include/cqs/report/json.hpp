#pragma once

/// @file json.hpp
/// @brief Canonical JSON form of a singularity report (schema version "1").
///
/// Keys are sorted (nlohmann::json objects are ordered maps), components keep
/// the lexicographic chain order, and integers beyond 53 bits become
/// {"int": "<decimal>"}. See docs/schema.md.

#include <json.hpp>

#include <optional>
#include <string>

#include "cqs/cqs.hpp"

namespace cqs::report {

inline constexpr const char* kSchemaVersion = "1";

inline nlohmann::json json_int(const Int& x) {
  static const Int kSafe = (Int(1) << 53) - 1;
  if (abs(x) <= kSafe) return x.convert_to<long long>();
  return nlohmann::json{{"int", x.str()}};
}

inline nlohmann::json json_ints(const std::vector<Int>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Int& x : xs) out.push_back(json_int(x));
  return out;
}

template <Side S>
nlohmann::json json_vec(const Vec<S>& v) {
  return nlohmann::json::array({json_int(v.x), json_int(v.y)});
}

/// What the user asked for, echoed into the document.
struct InputEcho {
  enum class Kind { Cone, NQ } kind = Kind::NQ;
  InputCone cone;
  Int n;
  Int q;
};

inline nlohmann::json to_json(const InputEcho& in) {
  if (in.kind == InputEcho::Kind::Cone)
    return {{"kind", "cone"}, {"g1", json_vec(in.cone.g1)}, {"g2", json_vec(in.cone.g2)}};
  return {{"kind", "nq"}, {"n", json_int(in.n)}, {"q", json_int(in.q)}};
}

inline nlohmann::json to_json(const NormalForm& nf) {
  const Mat2& t = nf.transform;
  return {{"n", json_int(nf.n)},
          {"q", json_int(nf.q)},
          {"dual_q", json_int(nf.dual_q)},
          {"e", json_int(nf.e)},
          {"transform", nlohmann::json::array({nlohmann::json::array({json_int(t.a), json_int(t.b)}),
                                               nlohmann::json::array({json_int(t.c), json_int(t.d)})})},
          {"a_chain", json_ints(nf.a_chain.coefficients)},
          {"b_chain", json_ints(nf.b_chain.coefficients)}};
}

inline nlohmann::json to_json(const FanCone& c) {
  return {{"generators", nlohmann::json::array({json_vec(c.lo), json_vec(c.hi)})},
          {"roof", {{"w", json_vec(c.roof.w)}, {"h", json_int(c.roof.h)}, {"l", json_int(c.roof.l)}}},
          {"class", c.cls.label()}};
}

inline nlohmann::json to_json(const NormalForm& nf, const ComponentReport& c) {
  nlohmann::json rays = nlohmann::json::array();
  nlohmann::json rays_input = nlohmann::json::array();
  for (const NVec& v : c.fan.rays) {
    rays.push_back(json_vec(v));
    rays_input.push_back(json_vec(nf.to_input(v)));
  }
  nlohmann::json cones = nlohmann::json::array();
  for (const FanCone& cone : c.fan.cones) cones.push_back(to_json(cone));
  return {{"k_chain", json_ints(c.k_chain.k)},
          {"q_seq", json_ints(c.k_chain.q_seq)},
          {"rays", rays},
          {"rays_input", rays_input},
          {"cones", cones},
          {"milnor", {{"toric", json_int(c.milnor_toric)}, {"stevens", json_int(c.milnor_stevens)}}},
          {"dim", {{"toric", json_int(c.dim_toric)}, {"stevens", json_int(c.dim_stevens)}}},
          {"is_artin", c.is_artin}};
}

inline nlohmann::json to_json(const InputEcho& in, const SingularityReport& rep) {
  nlohmann::json components = nlohmann::json::array();
  for (const ComponentReport& c : rep.components) components.push_back(to_json(rep.nf, c));
  return {{"schema_version", kSchemaVersion},
          {"input", to_json(in)},
          {"normal_form", to_json(rep.nf)},
          {"r", json_int(rep.r)},
          {"nu", json_int(rep.nu)},
          {"dim_t1", json_int(rep.dim_t1)},
          {"h1_theta", json_int(rep.h1_theta)},
          {"components", components},
          {"warnings", rep.warnings}};
}

/// Pretty-printed with two-space indent and a trailing newline.
inline std::string serialize(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cqs::report
