#ifndef DRG_MOTION_BOUNDS_HPP
#define DRG_MOTION_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "expansion.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"

namespace drg {

struct DistinguishingNumbers {
  std::vector<Integer> dvals;  // D(1)..D(d) at positions 0..d-1
  Integer dmin;

  const Integer& at(int i) const { return dvals.at(static_cast<std::size_t>(i - 1)); }
};

/// D(i) = n - sum_{t=1}^{d} p^i_{t,t}: vertices at equal distance from both
/// ends of a distance-i pair are exactly the non-distinguishing ones.
inline DistinguishingNumbers distinguishing_numbers(const ParameterTable& t)
{
  const int d = t.diameter();
  DistinguishingNumbers out;
  for (int i = 1; i <= d; ++i) {
    Integer same = 0;
    for (int s = 1; s <= d; ++s) same += t.p(i, s, s);
    out.dvals.push_back(t.n - same);
  }
  out.dmin = *std::min_element(out.dvals.begin(), out.dvals.end());
  return out;
}

/// Every pair distinguished by at least dmin vertices forces motion >= dmin.
inline Integer motion_from_distinguishing(const Integer& dmin) { return dmin; }

/// D(j) <= d D(i) for all i, j (holds for primitive graphs).
inline bool distinguishing_transfer(const std::vector<Integer>& dvals, int d)
{
  for (const auto& a : dvals)
    for (const auto& b : dvals)
      if (a > d * b) return false;
  return true;
}

/// A lower bound that may be uninformative (<= 0); never clamped.
struct Bound {
  double value = 0;
  bool informative() const { return value > 0; }
};

/// n (k - xi - q) / k.
inline Bound spectral_motion_bound(const ParameterTable& t, const Spectrum& spec)
{
  const double k = double(t.k());
  return {t.n_double() * (k - spec.xi - double(t.q)) / k};
}

struct DistinguishBound {
  Rational bound;  // alpha n / d
  Integer dmin;
  bool within_dmin = false;
};

/// D_min >= (alpha/d) n when b_j >= alpha k and c_{j+1} >= alpha k.
inline DistinguishBound primitive_distinguish_bound(const ParameterTable& t, const Rational& alpha, int j)
{
  const int d = t.diameter();
  if (alpha <= 0) fail(ErrorCode::PremiseViolated, "alpha must be positive");
  if (j < 0 || j > d - 1) fail(ErrorCode::PremiseViolated, "j must satisfy 0 <= j <= d-1");
  const Rational k = t.k();
  if (t.array.b(j) < alpha * k)
    fail(ErrorCode::PremiseViolated, "b_" + std::to_string(j) + " = " + std::to_string(t.array.b(j)) + " < alpha k");
  if (t.array.c(j + 1) < alpha * k)
    fail(ErrorCode::PremiseViolated,
         "c_" + std::to_string(j + 1) + " = " + std::to_string(t.array.c(j + 1)) + " < alpha k");
  DistinguishBound r;
  r.bound = alpha * Rational(t.n) / d;
  r.dmin = distinguishing_numbers(t).dmin;
  r.within_dmin = r.bound <= Rational(r.dmin);
  return r;
}

struct LedgerEntry {
  std::string name;
  bool applicable = false;
  bool holds = true;
  double lhs = 0;
  double rhs = 0;
  std::string note;
};

/// Parameter inequalities valid for every distance-regular graph, each
/// evaluated and recorded. A failed applicable entry means the array is not
/// the array of a distance-regular graph.
inline std::vector<LedgerEntry> structural_inequalities(const ParameterTable& t)
{
  const int d = t.diameter();
  const auto k = t.k();
  const auto lam = t.lambda;
  const auto mu = t.mu;
  const auto a2 = t.array.a(2);
  std::vector<LedgerEntry> out;
  auto push = [&](std::string name, bool applicable, double lhs, double rhs, bool holds, std::string note = {}) {
    out.push_back({std::move(name), applicable, applicable ? holds : true, lhs, rhs, std::move(note)});
  };

  push("k-mu <= 2(k-lambda)", true, double(k - mu), double(2 * (k - lam)), k - mu <= 2 * (k - lam));
  push("k-lambda <= 2(k-mu)", a2 != 0, double(k - lam), double(2 * (k - mu)), k - lam <= 2 * (k - mu),
       a2 == 0 ? "needs a_2 != 0" : "");

  // r = (n-1)/k; the two caps of the min-estimate lemma, strict.
  {
    const Real50 r = Real50(t.n - 1) / k;
    const Real50 kk(k);
    const Real50 root = pow(r / d, Real50(1) / (d - 1));
    const Real50 cap_min = kk / (1 + std::min(Real50((r - 1) / (d - 1)), root));
    const Real50 cap_mu = kk * std::max(Real50((d - 1) / (r - 1)), Real50(1 / root));
    const auto mn = std::min(lam, mu);
    push("min(lambda,mu) < k/(1+min((r-1)/(d-1),(r/d)^(1/(d-1))))", true, double(mn),
         cap_min.convert_to<double>(), Real50(mn) < cap_min);
    push("mu < k max((d-1)/(r-1),(d/r)^(1/(d-1)))", true, double(mu), cap_mu.convert_to<double>(),
         Real50(mu) < cap_mu);
  }

  const auto mn = std::min(lam, mu);
  push("min(lambda,mu) <= (d-1)k/d", d >= 3, double(mn), double(d - 1) * double(k) / d, mn * d <= (d - 1) * k,
       d >= 3 ? "" : "needs d >= 3");
  push("a_2 = 0 implies lambda = 0", d >= 3 && a2 == 0, double(lam), 0.0, lam == 0,
       d >= 3 && a2 == 0 ? "" : "needs d >= 3 and a_2 = 0");
  push("mu <= k/2", d >= 4, double(mu), double(k) / 2, 2 * mu <= k, d >= 4 ? "" : "needs d >= 4");
  return out;
}

/// Motion lower bounds that follow from the ledger facts alone.
struct ElementaryBounds {
  std::int64_t two_k_minus_q = 0;  // 2(k - q): |N(u) xor N(v)|
  std::int64_t k_minus_mu = 0;
  std::optional<double> third_of_k;  // k/3, non-bipartite with d >= 3 and k > 2
};

inline ElementaryBounds elementary_bounds(const ParameterTable& t, bool bipartite)
{
  ElementaryBounds e;
  e.two_k_minus_q = 2 * (t.k() - t.q);
  e.k_minus_mu = t.k() - t.mu;
  if (!bipartite && t.diameter() >= 3 && t.k() > 2) e.third_of_k = double(t.k()) / 3;
  return e;
}

struct MetschResult {
  bool condition3 = false;  // 2 l1 - l2 > (2m-1)(mu-1) - 1
  bool condition4 = false;  // k < (m+1)(l1+1) - m(m+1)(mu-1)/2
  bool applies = false;
  std::int64_t line_size_threshold = 0;  // l1 + 2 - (m-1)(mu-1)
  std::int64_t max_lines_per_vertex = 0;
};

inline MetschResult metsch_lines(std::int64_t l1, std::int64_t l2, std::int64_t mu, std::int64_t m, std::int64_t k)
{
  MetschResult r;
  r.condition3 = 2 * l1 - l2 > (2 * m - 1) * (mu - 1) - 1;
  r.condition4 = 2 * k < 2 * (m + 1) * (l1 + 1) - m * (m + 1) * (mu - 1);
  const bool positive = l1 > 0 && l2 > 0 && mu > 0 && m > 0 && k > 0 && l1 <= l2;
  r.applies = positive && r.condition3 && r.condition4;
  r.line_size_threshold = l1 + 2 - (m - 1) * (mu - 1);
  r.max_lines_per_vertex = m;
  return r;
}

/// The m >= 2 with (m-1)(lambda+1) < k <= m(lambda+1), if lambda >= m(m+1)mu/2.
inline std::optional<std::int64_t> geometricity_check(const ParameterTable& t)
{
  const std::int64_t l1 = t.lambda + 1;
  const std::int64_t m = (t.k() + l1 - 1) / l1;
  if (m < 2) return std::nullopt;
  if (2 * t.lambda >= m * (m + 1) * t.mu) return m;
  return std::nullopt;
}

/// 1 - k / theta_min.
inline double delsarte_clique_bound(const Spectrum& spec, std::int64_t k)
{
  if (!(spec.theta_min < 0)) fail(ErrorCode::DomainError, "Delsarte bound needs theta_min < 0");
  return 1.0 - double(k) / spec.theta_min;
}

/// floor(5 d^{log2 d + 1}); exact when d is a power of two.
inline Integer m_d(int d)
{
  if (d < 2) fail(ErrorCode::DomainError, "m_d needs d >= 2");
  if (is_power_of_two(d)) {
    const int e = exact_log2(d);
    return Integer(5) << (e * (e + 1));
  }
  return stable_floor([d](auto tag) {
    using T = decltype(tag);
    const T dd(d);
    return T(5) * pow(dd, log2(dd) + 1);
  });
}

enum class MotionCase { PrimitiveDistinguish, MuLarge, Spectral };

inline const char* to_string(MotionCase c)
{
  switch (c) {
    case MotionCase::PrimitiveDistinguish: return "Primitive-distinguish";
    case MotionCase::MuLarge: return "Mu-large";
    case MotionCase::Spectral: return "Spectral";
  }
  return "?";
}

struct Verdict {
  enum class Kind { MotionBound, GeometricCandidate };
  Kind kind = Kind::MotionBound;
  double gamma = 0;  // MotionBound: motion >= gamma n
  MotionCase motion_case = MotionCase::PrimitiveDistinguish;
  std::int64_t m = 0;  // GeometricCandidate

  bool geometric() const { return kind == Kind::GeometricCandidate; }
};

struct ClassifierReport {
  Verdict verdict;       // final answer
  Verdict tree_verdict;  // what the case tree alone yields
  char tree_branch = 'a';
  std::optional<std::int64_t> corollary_m;
  Integer md;
  double eps = 0;
  double eta = 0;
  double gamma_d = 0;  // min(eps/d, (eta^3/d)^{d-1}/7, eta/10)
  bool eta_at_most_seventh = false;
  bool theta_min_consistent = true;  // theta_min >= -m for geometric verdicts
  double theta_min = 0;
  int witness = -1;
  std::string note;
};

/// Either a linear motion bound or a geometric candidate with m <= m_d.
///
/// The geometricity corollary is tried first: when it applies the graph is
/// geometric with smallest eigenvalue -m, which is one outcome of the
/// theorem. The case tree (expanding index, mu large, lambda small, else
/// geometric) is always replayed and reported alongside.
inline ClassifierReport classify_primitive(const IntersectionArray& arr)
{
  const int d = arr.diameter();
  if (d < 3) fail(ErrorCode::DomainError, "classify_primitive needs d >= 3");
  const auto table = derive_parameters(arr);
  const auto consts = default_constants(d);
  ClassifierReport rep;
  rep.md = m_d(d);
  rep.eps = to_double(consts.eps);
  const Real50 eta = consts.eta;
  rep.eta = eta.convert_to<double>();
  rep.eta_at_most_seventh = eta <= Real50(1) / 7;
  const Real50 dd(d);
  const Real50 g_a = detail::to_real(consts.eps) / dd;
  const Real50 g_b = pow(eta * eta * eta / dd, d - 1) / 7;
  const Real50 g_c = eta / 10;
  rep.gamma_d = std::min({g_a, g_b, g_c}).convert_to<double>();

  const auto eig = tridiagonal_eigenvalues(arr);
  rep.theta_min = eig.back();

  const auto dich = spectral_gap_dichotomy(arr, consts);
  const Real50 kk(arr.k());
  if (dich.expanding()) {
    rep.tree_branch = 'a';
    rep.witness = dich.index;
    rep.tree_verdict = {Verdict::Kind::MotionBound, g_a.convert_to<double>(), MotionCase::PrimitiveDistinguish, 0};
  } else if (Real50(table.mu) > eta * eta * eta * kk) {
    rep.tree_branch = 'b';
    rep.tree_verdict = {Verdict::Kind::MotionBound, g_b.convert_to<double>(), MotionCase::MuLarge, 0};
  } else if (Real50(table.lambda) < Real50(9) * eta * kk / 10) {
    rep.tree_branch = 'c';
    rep.tree_verdict = {Verdict::Kind::MotionBound, g_c.convert_to<double>(), MotionCase::Spectral, 0};
  } else {
    rep.tree_branch = 'd';
    const std::int64_t m = (arr.k() + table.lambda) / (table.lambda + 1);
    rep.tree_verdict = {Verdict::Kind::GeometricCandidate, 0, MotionCase::PrimitiveDistinguish, m};
    if (rep.eta_at_most_seventh && 2 * table.lambda < m * (m + 1) * table.mu)
      fail(ErrorCode::TheoremViolation, "case tree reached the geometric branch but lambda < m(m+1)mu/2");
  }

  rep.corollary_m = geometricity_check(table);
  if (rep.corollary_m && Integer(*rep.corollary_m) <= rep.md) {
    rep.verdict = {Verdict::Kind::GeometricCandidate, 0, MotionCase::PrimitiveDistinguish, *rep.corollary_m};
    rep.note = "geometricity corollary applies";
  } else {
    rep.verdict = rep.tree_verdict;
    rep.note = "case tree";
  }
  if (rep.verdict.geometric()) rep.theta_min_consistent = rep.theta_min >= -double(rep.verdict.m) - 1e-6;
  return rep;
}

struct MotionReport {
  DistinguishingNumbers dist;
  Bound spectral;
  Integer combinatorial;  // D_min
  ElementaryBounds elementary;
  std::vector<LedgerEntry> ledger;
  bool transfer_holds = true;
  std::optional<ClassifierReport> classifier;  // d >= 3 and primitivity attested
};

inline MotionReport motion_report(const ParameterTable& t, const Spectrum& spec, bool bipartite,
                                  bool primitive_attested)
{
  MotionReport r;
  r.dist = distinguishing_numbers(t);
  r.spectral = spectral_motion_bound(t, spec);
  r.combinatorial = motion_from_distinguishing(r.dist.dmin);
  r.elementary = elementary_bounds(t, bipartite);
  r.ledger = structural_inequalities(t);
  r.transfer_holds = distinguishing_transfer(r.dist.dvals, t.diameter());
  if (primitive_attested && t.diameter() >= 3) r.classifier = classify_primitive(t.array);
  return r;
}

}  // namespace drg

#endif  // DRG_MOTION_BOUNDS_HPP
