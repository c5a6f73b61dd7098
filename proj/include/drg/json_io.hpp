#ifndef DRG_JSON_IO_HPP
#define DRG_JSON_IO_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "automorphisms.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "imprimitive.hpp"
#include "intersection_array.hpp"
#include "motion_bounds.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"
#include "tradeoff.hpp"

namespace drg {

using Json = nlohmann::ordered_json;

// Exact values travel as strings ("p/q"); integers stay numbers when they fit.
inline Json json_value(const Rational& r) { return r.str(); }

inline Json json_value(const Integer& x)
{
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Json json_value(const RawArray& a) { return Json{{"b", a.b}, {"c", a.c}}; }
inline Json json_value(const IntersectionArray& a) { return json_value(a.raw()); }

/// {"b":[..],"c":[..]} into an unvalidated array; ParseError on bad shape.
inline RawArray raw_array_from_json(const Json& j)
{
  if (!j.is_object() || !j.contains("b") || !j.contains("c"))
    fail(ErrorCode::ParseError, "expected an object with integer arrays \"b\" and \"c\"");
  RawArray a;
  try {
    a.b = j.at("b").get<std::vector<std::int64_t>>();
    a.c = j.at("c").get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("\"b\" and \"c\" must be integer arrays: ") + e.what());
  }
  return a;
}

inline Json json_value(const ParameterTable& t)
{
  Json kd = Json::array();
  for (const auto& x : t.kdist) kd.push_back(json_value(x));
  return Json{{"array", json_value(t.array)}, {"a", t.a},          {"k", kd},      {"n", json_value(t.n)},
              {"lambda", t.lambda},          {"mu", t.mu},        {"q", t.q}, {"diameter", t.diameter()}};
}

inline Json json_value(const std::vector<Eigenvalue>& ev)
{
  Json out = Json::array();
  for (const auto& e : ev) out.push_back(Json{{"value", e.value}, {"multiplicity", e.multiplicity}});
  return out;
}

inline Json json_value(const Spectrum& s)
{
  return Json{{"eigenvalues", json_value(s.eigenvalues)}, {"xi", s.xi}, {"theta_min", s.theta_min}};
}

inline Json json_value(const TradeoffResult& r)
{
  return Json{{"j", r.j},
              {"s", r.s},
              {"C", json_value(r.C)},
              {"lhs", json_value(r.lhs)},
              {"rhs", json_value(r.rhs)},
              {"holds", r.holds},
              {"lambda_bounds_hold", r.diag.lambda_bounds_hold},
              {"mu_bound_holds", r.diag.mu_bound_holds},
              {"triangle_holds", r.diag.triangle_holds}};
}

inline Json json_value(const Verdict& v)
{
  if (v.geometric()) return Json{{"kind", "GeometricCandidate"}, {"m", v.m}};
  return Json{{"kind", "MotionBound"}, {"gamma", v.gamma}, {"case", to_string(v.motion_case)}};
}

inline Json json_value(const ClassifierReport& c)
{
  Json j{{"verdict", json_value(c.verdict)},
         {"tree_verdict", json_value(c.tree_verdict)},
         {"tree_branch", std::string(1, c.tree_branch)},
         {"m_d", json_value(c.md)},
         {"eps", c.eps},
         {"eta", c.eta},
         {"gamma_d", c.gamma_d},
         {"eta_at_most_seventh", c.eta_at_most_seventh},
         {"theta_min", c.theta_min},
         {"theta_min_consistent", c.theta_min_consistent},
         {"note", c.note}};
  j["corollary_m"] = c.corollary_m ? Json(*c.corollary_m) : Json(nullptr);
  j["witness"] = c.witness >= 0 ? Json(c.witness) : Json(nullptr);
  return j;
}

inline Json json_value(const MotionReport& r)
{
  Json dv = Json::array();
  for (const auto& x : r.dist.dvals) dv.push_back(json_value(x));
  Json ledger = Json::array();
  for (const auto& e : r.ledger)
    ledger.push_back(Json{{"name", e.name}, {"applicable", e.applicable}, {"holds", e.holds}, {"lhs", e.lhs},
                          {"rhs", e.rhs}, {"note", e.note}});
  Json elem{{"two_k_minus_q", r.elementary.two_k_minus_q}, {"k_minus_mu", r.elementary.k_minus_mu}};
  elem["third_of_k"] = r.elementary.third_of_k ? Json(*r.elementary.third_of_k) : Json(nullptr);
  Json j{{"distinguishing", dv},
         {"d_min", json_value(r.dist.dmin)},
         {"bounds", Json{{"spectral", r.spectral.value}, {"d_min", json_value(r.combinatorial)}}},
         {"elementary", elem},
         {"transfer_holds", r.transfer_holds},
         {"ledger", ledger}};
  j["classifier"] = r.classifier ? json_value(*r.classifier) : Json(nullptr);
  return j;
}

inline Json json_value(const ImprimitiveVerdict& v)
{
  Json j{{"kind", v.exception() ? "CocktailPartyException" : "MotionBound"}, {"label", v.label}, {"checks", v.checks}};
  if (!v.exception()) {
    j["fraction"] = json_value(v.fraction);
    j["bound"] = v.bound;
  }
  return j;
}

inline Json json_value(const ImprimitivityProfile& p)
{
  Json chain = Json::array();
  for (const auto& s : p.reduction_chain) {
    Json step{{"op", s.op}, {"note", s.note}};
    step["array"] = s.result.b.empty() ? Json(nullptr) : json_value(s.result);
    chain.push_back(step);
  }
  Json j{{"bipartite", p.is_bipartite}, {"antipodal", p.is_antipodal}, {"t", p.t}};
  j["r"] = p.r ? json_value(*p.r) : Json(nullptr);
  j["halved"] = p.halved ? json_value(*p.halved) : Json(nullptr);
  j["folded"] = p.folded ? json_value(*p.folded) : Json(nullptr);
  j["reduction_chain"] = chain;
  return j;
}

inline Json json_value(const AutomorphismSummary& s)
{
  Json hist = Json::object();
  for (auto [deg, count] : s.degree_histogram) hist[std::to_string(deg)] = count;
  Json j{{"order", json_value(s.order)},
         {"orbit_lengths", s.orbit_lengths},
         {"generator_count", s.generators.size()},
         {"motion_exact", s.motion_exact},
         {"degree_histogram", hist}};
  j["motion"] = s.motion ? Json(*s.motion) : Json(nullptr);
  return j;
}

}  // namespace drg

#endif  // DRG_JSON_IO_HPP
