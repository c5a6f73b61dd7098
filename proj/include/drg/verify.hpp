#ifndef DRG_VERIFY_HPP
#define DRG_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "automorphisms.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "feasibility.hpp"
#include "graph.hpp"
#include "imprimitive.hpp"
#include "json_io.hpp"
#include "motion_bounds.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"
#include "tradeoff.hpp"

namespace drg {

/// One line of a verification suite.
struct CheckLine {
  std::string array_id;
  std::string check;
  bool holds = false;
  Json lhs;
  Json rhs;

  Json json() const
  {
    return Json{{"array_id", array_id}, {"check", check}, {"holds", holds}, {"lhs", lhs}, {"rhs", rhs}};
  }
};

using Suite = std::vector<CheckLine>;

namespace detail {

inline std::string fmt(double x)
{
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

/// Runs `body`; a library error becomes a failed line carrying its message.
inline void guarded(Suite& out, const std::string& id, const std::string& check, const std::function<void()>& body)
{
  try {
    body();
  } catch (const Error& e) {
    out.push_back({id, check, false, e.what(), nullptr});
  }
}

}  // namespace detail

inline Suite verify_catalog_feasibility()
{
  Suite out;
  for (const auto& e : catalog()) {
    const auto v = feasibility_report(e.array);
    out.push_back({e.id, "feasibility", v.empty(), static_cast<std::int64_t>(v.size()), 0});
  }
  return out;
}

/// Every admissible (j, s) on every catalog array, exactly.
inline Suite verify_tradeoff()
{
  Suite out;
  for (const auto& e : catalog())
    detail::guarded(out, e.id, "tradeoff", [&] {
      for (const auto& r : tradeoff_sweep(e.array))
        out.push_back({e.id, "tradeoff j=" + std::to_string(r.j) + " s=" + std::to_string(r.s), r.holds,
                       json_value(r.lhs), json_value(r.rhs)});
    });
  return out;
}

/// FE/BE against the closed-form lower bounds for j <= 20, and eps_delta
/// against its closed form for d = 3..8, all at the given delta.
inline Suite verify_sequences(const Rational& delta = Rational(1, 9))
{
  Suite out;
  const std::string id = "delta=" + delta.str();
  detail::guarded(out, id, "sequences", [&] {
    const auto alpha = fe_sequence(delta, 21);
    const auto beta = be_sequence(delta, alpha);
    for (int j = 1; j <= 20; ++j) {
      const auto cf = closed_form_bounds(delta, j, 3);
      const double a = to_double(alpha[j]);
      const double b = to_double(beta[j + 2]);
      out.push_back({id, "fe_lower j=" + std::to_string(j), a >= cf.alpha_lb, detail::fmt(a), detail::fmt(cf.alpha_lb)});
      out.push_back({id, "be_lower j=" + std::to_string(j), b >= cf.beta_lb, detail::fmt(b), detail::fmt(cf.beta_lb)});
    }
    for (int d = 3; d <= 8; ++d) {
      const Rational e = eps_delta(d, delta);
      const Real50 cf = detail::eps_closed_form(delta, d);
      out.push_back({id, "eps_delta d=" + std::to_string(d), detail::to_real(e) >= cf, detail::fmt(to_double(e)),
                     detail::fmt(cf.convert_to<double>())});
    }
  });
  return out;
}

/// Dichotomy and expansion on every catalog array with the explicit
/// constants; a TheoremViolation is a failed line.
inline Suite verify_dichotomy()
{
  Suite out;
  for (int d = 3; d <= 8; ++d) {
    const auto r = check_default_constants(d);
    out.push_back({"d=" + std::to_string(d), "constants_eps_compatible", r.eps_compatible, detail::fmt(r.eps), nullptr});
    out.push_back(
        {"d=" + std::to_string(d), "constants_eta_dominated", r.eta_dominated, detail::fmt(r.eta), detail::fmt(r.eta_required)});
  }
  for (const auto& e : catalog()) {
    detail::guarded(out, e.id, "dichotomy", [&] {
      const auto v = spectral_gap_dichotomy(e.array);
      out.push_back({e.id, "dichotomy", true, v.expanding() ? "expanding i=" + std::to_string(v.index) : "spectral gap",
                     v.expanding() ? Json(nullptr) : Json(detail::fmt(v.xi_cap))});
    });
    detail::guarded(out, e.id, "expansion", [&] {
      const auto r = expansion_check(e.array);
      out.push_back({e.id, "expansion", true, detail::fmt(r.dominant_fraction), r.premise_met ? "premise met" : "premise not met"});
    });
  }
  return out;
}

struct NamedBound {
  std::string name;
  double value = 0;
};

/// Every motion lower bound the array-level modules produce for an entry.
inline std::vector<NamedBound> motion_lower_bounds(const CatalogEntry& e)
{
  std::vector<NamedBound> out;
  const auto table = derive_parameters(e.array);
  const auto spec = eigen_spectrum(e.array);
  const auto prof = detect(e.array);
  const auto rep = motion_report(table, spec, prof.is_bipartite, e.primitive);
  out.push_back({"d_min", to_double(rep.combinatorial)});
  out.push_back({"spectral", rep.spectral.value});
  out.push_back({"two_k_minus_q", double(rep.elementary.two_k_minus_q)});
  out.push_back({"k_minus_mu", double(rep.elementary.k_minus_mu)});
  if (rep.elementary.third_of_k) out.push_back({"third_of_k", *rep.elementary.third_of_k});
  if (rep.classifier && !rep.classifier->verdict.geometric())
    out.push_back({"classifier", rep.classifier->verdict.gamma * table.n_double()});
  if (e.primitive) {
    const int d = table.diameter();
    for (int j = 0; j < d; ++j) {
      const Rational alpha(std::min(e.array.b(j), e.array.c(j + 1)), e.array.k());
      out.push_back({"alpha_n_over_d j=" + std::to_string(j), to_double(primitive_distinguish_bound(table, alpha, j).bound)});
    }
  }
  if (prof.is_bipartite) out.push_back({"bipartite_spectral", bipartite_motion_bound(table, spec)});
  const int d = e.array.diameter();
  if (prof.is_bipartite && d == 3) {
    const auto v = bip3_analysis(e.array);
    if (!v.exception()) out.push_back({"bip3", v.bound});
  }
  if (prof.is_antipodal && d == 3) {
    const auto v = antip3_analysis(e.array);
    if (!v.exception()) out.push_back({"antip3", v.bound});
  }
  if (prof.is_bipartite && prof.is_antipodal && d == 4) out.push_back({"bip_antip4", bip_antip4_analysis(e.array).verdict.bound});
  if (prof.is_bipartite && d >= 4) out.push_back({"bipartite_d4", bipartite_d4_bound(e.array).bound});
  return out;
}

inline bool same_spectrum(const std::vector<Eigenvalue>& a, const std::vector<Eigenvalue>& b, double tol = 1e-6)
{
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i].value - b[i].value) > tol || a[i].multiplicity != b[i].multiplicity) return false;
  return true;
}

/// Cross-validation of the array-level modules against concrete graphs.
inline Suite verify_oracle(int max_n = kDefaultMaxN)
{
  Suite out;
  for (const auto& e : catalog()) {
    if (!e.has_graph()) continue;
    detail::guarded(out, e.id, "oracle", [&] {
      const auto g = e.build();
      const auto chk = check_distance_regular(g);
      out.push_back({e.id, "array", chk.distance_regular() && *chk.array == e.array.raw(),
                     chk.distance_regular() ? json_value(*chk.array) : Json(chk.witness), json_value(e.array)});
      const auto table = derive_parameters(e.array);
      out.push_back({e.id, "p_tensor", empirical_p(g) == table.p, nullptr, nullptr});

      const auto spec = eigen_spectrum(e.array);
      out.push_back({e.id, "spectrum", same_spectrum(adjacency_spectrum(g), spec.eigenvalues), nullptr, nullptr});

      const auto dex = distinguishing_exact(g);
      const auto dal = distinguishing_numbers(table);
      out.push_back({e.id, "distinguishing", dex == dal.dvals, json_value(dex.front()), json_value(dal.dvals.front())});

      if (g.order() <= max_n) {
        const auto aut = automorphism_summary(g, max_n);
        if (aut.motion && aut.motion_exact) {
          for (const auto& b : motion_lower_bounds(e))
            out.push_back({e.id, "motion_bound " + b.name, b.value <= double(*aut.motion) + 1e-9, detail::fmt(b.value),
                           *aut.motion});
        }
      }

      const auto prof = detect(e.array);
      if (prof.is_bipartite) {
        const auto h = check_distance_regular(halved_graph(g));
        out.push_back({e.id, "halved", h.distance_regular() && *h.array == halved_array(e.array),
                       h.distance_regular() ? json_value(*h.array) : Json(h.witness), json_value(halved_array(e.array))});
      }
      if (prof.is_antipodal && e.array.diameter() >= 3) {
        const auto f = check_distance_regular(folded_graph(g));
        const auto fa = folded_array(e.array).array;
        out.push_back({e.id, "folded", f.distance_regular() && *f.array == fa,
                       f.distance_regular() ? json_value(*f.array) : Json(f.witness), json_value(fa)});
      }
    });
  }
  return out;
}

inline Suite verify_all(int max_n = kDefaultMaxN)
{
  Suite out = verify_catalog_feasibility();
  for (auto* suite : {&verify_tradeoff, &verify_dichotomy}) {
    auto s = suite();
    out.insert(out.end(), s.begin(), s.end());
  }
  auto s = verify_sequences();
  out.insert(out.end(), s.begin(), s.end());
  s = verify_oracle(max_n);
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

inline bool all_hold(const Suite& s)
{
  return std::all_of(s.begin(), s.end(), [](const CheckLine& l) { return l.holds; });
}

}  // namespace drg

#endif  // DRG_VERIFY_HPP
