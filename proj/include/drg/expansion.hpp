#ifndef DRG_EXPANSION_HPP
#define DRG_EXPANSION_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"

namespace drg {

/// Relative slack when comparing a float spectrum against an exact bound.
inline constexpr double kSpectralSlack = 1e-9;

/// A sequence whose first meaningful index is `first` (0 for FE, 2 for BE).
struct IndexedSequence {
  int first = 0;
  std::vector<Rational> values;

  int last() const { return first + static_cast<int>(values.size()) - 1; }
  const Rational& operator[](int i) const { return values.at(static_cast<std::size_t>(i - first)); }
};

/// FE(delta): alpha_0 = 1 and
/// alpha_{j+1} = (1-delta) / (sum_{t<=ceil((j+2)/2)} 1/alpha_{t-1} + sum_{t<=floor((j+2)/2)} 1/alpha_{t-1}).
inline IndexedSequence fe_sequence(const Rational& delta, int length)
{
  if (!(delta > 0 && delta < 1)) fail(ErrorCode::DomainError, "delta must lie in (0, 1)");
  IndexedSequence a{0, {Rational(1)}};
  // prefix[m] = sum_{t=0}^{m-1} 1/alpha_t
  std::vector<Rational> prefix{Rational(0), Rational(1)};
  for (int j = 0; j + 1 <= length; ++j) {
    const int hi = (j + 3) / 2;  // ceil((j+2)/2)
    const int lo = (j + 2) / 2;  // floor((j+2)/2)
    const Rational next = (1 - delta) / (prefix[hi] + prefix[lo]);
    a.values.push_back(next);
    prefix.push_back(prefix.back() + 1 / next);
  }
  return a;
}

/// BE(delta, alpha): beta_j = (1-delta) / sum_{t=0}^{j-2} 1/alpha_t for
/// 2 <= j <= alpha.last() + 2.
inline IndexedSequence be_sequence(const Rational& delta, const IndexedSequence& alpha)
{
  IndexedSequence b{2, {}};
  Rational sum = 0;
  for (int t = 0; t <= alpha.last(); ++t) {
    sum += 1 / alpha[t];
    b.values.push_back((1 - delta) / sum);
  }
  return b;
}

/// The alpha_{j+1} that the recurrence would produce from alpha_0..alpha_j,
/// without requiring alpha to be the FE sequence itself.
inline Rational next_alpha(const Rational& delta, const IndexedSequence& alpha, int j)
{
  Rational sum = 0;
  for (int t = 1; t <= (j + 3) / 2; ++t) sum += 1 / alpha[t - 1];
  for (int t = 1; t <= (j + 2) / 2; ++t) sum += 1 / alpha[t - 1];
  return (1 - delta) / sum;
}

/// (delta, j, alpha, d)-compatibility. Both clauses are decided exactly: the
/// second one, 2(d+2)^2 eps^{1/(d+1)} <= beta_{j+2} delta, is raised to the
/// power d+1 so no root is taken.
inline bool is_compatible(const Rational& eps, const Rational& delta, int j, const IndexedSequence& alpha, int d)
{
  if (eps <= 0 || j < 0 || j > alpha.last()) return false;
  const Rational& aj = alpha[j];
  if (aj <= eps) return false;
  Rational inv = 0;
  for (int t = 1; t <= j + 1; ++t) inv += 1 / alpha[t - 1];
  const Rational clause1 = (aj - 5 * eps) / (aj - eps) - 2 * eps * inv;
  if (!(clause1 > 1 - delta)) return false;
  const Rational beta = (1 - delta) / inv;  // beta_{j+2}
  const Rational root_cap = beta * delta / (2 * (d + 2) * (d + 2));
  return eps <= rational_pow(root_cap, static_cast<unsigned>(d + 1));
}

/// (delta, d)-compatibility against the FE(delta) sequence.
inline bool is_compatible(const Rational& eps, const Rational& delta, int d)
{
  return is_compatible(eps, delta, d - 2, fe_sequence(delta, std::max(d - 2, 0)), d);
}

struct ClosedFormBounds {
  double alpha_lb = 0;  // (1-delta)^2/2 * j^{-log2 j}
  double beta_lb = 0;   // (1-delta)^3/(2(j+1)) * j^{-log2 j}
  double eps_lb = 0;    // (delta/22)^{d+1} d^{-(d+1)(3+log2 d)}
};

namespace detail {

inline double round_down(const Real50& x)
{
  double v = x.convert_to<double>();
  if (Real50(v) > x) v = std::nextafter(v, 0.0);
  return v;
}

inline Real50 to_real(const Rational& r) { return Real50(numerator(r)) / Real50(denominator(r)); }

inline Real50 eps_closed_form(const Rational& delta, int d)
{
  const Real50 dd(d);
  return pow(to_real(delta) / 22, d + 1) * pow(dd, -(d + 1) * (3 + log2(dd)));
}

}  // namespace detail

inline ClosedFormBounds closed_form_bounds(const Rational& delta, int j, int d)
{
  if (!(delta > 0 && delta <= Rational(1, 9)) || j < 1 || d < 3)
    fail(ErrorCode::DomainError, "closed-form bounds need 0 < delta <= 1/9, j >= 1, d >= 3");
  const Real50 dl = detail::to_real(delta);
  const Real50 jj(j);
  const Real50 decay = pow(jj, -log2(jj));
  ClosedFormBounds out;
  out.alpha_lb = detail::round_down(pow(1 - dl, 2) / 2 * decay);
  out.beta_lb = detail::round_down(pow(1 - dl, 3) / (2 * (jj + 1)) * decay);
  out.eps_lb = detail::round_down(detail::eps_closed_form(delta, d));
  return out;
}

/// Approximation of EPS_delta(d) = sup of (delta, d)-compatible eps: returns
/// a compatible eps whose (1 + tol) multiple is not compatible.
inline Rational eps_delta(int d, const Rational& delta, double tol = 1e-9)
{
  if (d < 2) fail(ErrorCode::DomainError, "eps_delta needs d >= 2");
  if (!(delta > 0 && delta < 1)) fail(ErrorCode::DomainError, "delta must lie in (0, 1)");
  const auto alpha = fe_sequence(delta, d - 2);
  auto ok = [&](double e) { return is_compatible(exact_rational(e), delta, d - 2, alpha, d); };

  double lo = d >= 3 ? detail::eps_closed_form(delta, d).convert_to<double>() : 1e-12;
  for (int tries = 0; !ok(lo); ++tries) {
    if (tries > 200 || lo < 1e-300) fail(ErrorCode::NoFeasibleEps, "no compatible eps found");
    lo /= 16;
  }
  double hi = std::min(1.0, to_double(alpha[d - 2]));
  while (ok(hi)) hi *= 2;  // cannot loop long: eps >= alpha_{d-2} is never compatible
  for (int it = 0; it < 200 && hi > lo * (1 + tol); ++it) {
    const double mid = std::sqrt(lo) * std::sqrt(hi);
    if (!(mid > lo && mid < hi)) break;
    (ok(mid) ? lo : hi) = mid;
  }
  return exact_rational(lo);
}

enum class ThreeCase { BothLarge, SpectralGapCase, ForwardCase };

inline const char* to_string(ThreeCase c)
{
  switch (c) {
    case ThreeCase::BothLarge: return "BothLarge";
    case ThreeCase::SpectralGapCase: return "SpectralGapCase";
    case ThreeCase::ForwardCase: return "ForwardCase";
  }
  return "?";
}

struct CaseResult {
  int j = 0;
  ThreeCase which = ThreeCase::BothLarge;
  Rational beta_next;   // beta_{j+2}
  Rational alpha_next;  // alpha_{j+1}
  double xi = 0;
  double xi_cap = 0;    // k(1 - (1-delta) beta_{j+2}), meaningful for SpectralGapCase
  std::string detail;
};

/// Which of the three mutually covering cases applies at level j, with the
/// case's consequent re-verified (against the T(X) spectrum for case 2).
inline CaseResult case_analysis(const IntersectionArray& arr, const Rational& delta, int j,
                                const IndexedSequence& alpha, const Rational& eps)
{
  const int d = arr.diameter();
  const Rational k = arr.k();
  if (j < 0 || j > d - 2) fail(ErrorCode::PremiseViolated, "level j must satisfy 0 <= j <= d-2");
  if (alpha.last() < j) fail(ErrorCode::PremiseViolated, "alpha must provide alpha_0..alpha_j");
  for (int t = 1; t <= j; ++t)
    if (!(alpha[t] < alpha[t - 1]) || alpha[t] <= 0)
      fail(ErrorCode::PremiseViolated, "alpha must be positive and decreasing");
  if (!is_compatible(eps, delta, j, alpha, d))
    fail(ErrorCode::PremiseViolated, "eps is not (delta, j, alpha, d)-compatible");
  if (arr.c(j + 1) > eps * k) fail(ErrorCode::PremiseViolated, "c_" + std::to_string(j + 1) + " > eps k");
  for (int i = 0; i <= j; ++i)
    if (arr.b(i) < alpha[i] * k) fail(ErrorCode::PremiseViolated, "b_" + std::to_string(i) + " < alpha_i k");

  CaseResult r;
  r.j = j;
  Rational inv = 0;
  for (int t = 0; t <= j; ++t) inv += 1 / alpha[t];
  r.beta_next = (1 - delta) / inv;
  r.alpha_next = next_alpha(delta, alpha, j);

  const bool b_large = arr.b(j + 1) >= eps * k;
  const bool c_large = arr.c(j + 2) >= eps * k;
  if (b_large && c_large) {
    r.which = ThreeCase::BothLarge;
    r.detail = "b_{j+1} >= eps k and c_{j+2} >= eps k";
    return r;
  }
  if (c_large) {
    r.which = ThreeCase::SpectralGapCase;
    const auto eig = tridiagonal_eigenvalues(arr);
    const double kd = double(arr.k());
    r.xi = zero_weight_radius(eig);
    r.xi_cap = kd * (1 - to_double((1 - delta) * r.beta_next));
    if (r.xi > r.xi_cap + kSpectralSlack * kd)
      fail(ErrorCode::TheoremViolation, "xi = " + std::to_string(r.xi) + " exceeds " + std::to_string(r.xi_cap) +
                                            " at j = " + std::to_string(j) + " for " + arr.str());
    r.detail = "b_{j+1} < eps k, c_{j+2} >= eps k, xi <= k(1-(1-delta)beta_{j+2})";
    return r;
  }
  r.which = ThreeCase::ForwardCase;
  if (arr.b(j + 1) < r.alpha_next * k)
    fail(ErrorCode::TheoremViolation, "b_{j+1} < alpha_{j+1} k at j = " + std::to_string(j) + " for " + arr.str());
  r.detail = "c_{j+2} < eps k, b_{j+1} >= alpha_{j+1} k";
  return r;
}

/// eps, eta for a diameter, with delta recorded for the case replay.
struct DichotomyConstants {
  int d = 0;
  Rational delta;
  Rational eps;
  Real50 eta;
};

/// The explicit constants eps = 200^{-(d+1)} d^{-(d+1)(log2 d + 3)} and
/// eta = d^{-(1+log2 d)}/4, for delta = 1/9.
inline DichotomyConstants default_constants(int d)
{
  if (d < 2) fail(ErrorCode::DomainError, "constants need d >= 2");
  const Real50 dd(d);
  const Real50 l = log2(dd);
  const Real50 eps = pow(Real50(200), -(d + 1)) * pow(dd, -(d + 1) * (l + 3));
  return {d, Rational(1, 9), exact_rational(eps), pow(dd, -(1 + l)) / 4};
}

/// eps from eps_delta and eta = (1-delta) min(alpha_{d-1}, beta_d).
inline DichotomyConstants derived_constants(int d, const Rational& delta)
{
  const auto alpha = fe_sequence(delta, d - 1);
  const auto beta = be_sequence(delta, alpha);
  const Rational eta = (1 - delta) * std::min(alpha[d - 1], beta[d]);
  return {d, delta, eps_delta(d, delta), detail::to_real(eta)};
}

/// Whether the explicit constants meet what the dichotomy proof needs: eps
/// (delta, d)-compatible and eta <= (1-delta) min(alpha_{d-1}, beta_d).
struct ConstantsCheck {
  int d = 0;
  bool eps_compatible = false;
  bool eta_dominated = false;
  double eps = 0;
  double eta = 0;
  double eta_required = 0;
};

inline ConstantsCheck check_default_constants(int d)
{
  const auto c = default_constants(d);
  const auto alpha = fe_sequence(c.delta, d - 1);
  const auto beta = be_sequence(c.delta, alpha);
  const Rational need = (1 - c.delta) * std::min(alpha[d - 1], beta[d]);
  ConstantsCheck r;
  r.d = d;
  r.eps_compatible = is_compatible(c.eps, c.delta, d);
  r.eta_dominated = c.eta <= detail::to_real(need);
  r.eps = to_double(c.eps);
  r.eta = c.eta.convert_to<double>();
  r.eta_required = to_double(need);
  return r;
}

struct DichotomyVerdict {
  enum class Branch { ExpandingIndex, SpectralGap };
  Branch branch = Branch::ExpandingIndex;
  int index = -1;       // witness i for ExpandingIndex
  double eta = 0;
  double xi = 0;
  double xi_cap = 0;    // k(1 - eta) for SpectralGap
  double eps = 0;
  std::vector<CaseResult> case_trace;
  std::vector<std::string> trace_notes;

  bool expanding() const { return branch == Branch::ExpandingIndex; }
};

/// Either some i has b_i >= eps k and c_{i+1} >= eps k, or xi <= k(1 - eta).
/// The smallest witness i >= 1 is preferred; i = 0 is used only if no such i
/// exists. The proof's case sequence is replayed when its premises hold.
inline DichotomyVerdict spectral_gap_dichotomy(const IntersectionArray& arr, const DichotomyConstants& c)
{
  const int d = arr.diameter();
  if (c.d != d) fail(ErrorCode::DomainError, "constants were computed for another diameter");
  const Rational k = arr.k();
  DichotomyVerdict v;
  v.eps = to_double(c.eps);
  v.eta = c.eta.convert_to<double>();
  auto witness = [&](int i) { return arr.b(i) >= c.eps * k && arr.c_ext(i + 1) >= c.eps * k; };

  // Replay: i0 is the index with c_{i0} <= eps k < c_{i0+1} (c_{d+1} = k).
  int i0 = 0;
  while (i0 <= d && arr.c_ext(i0 + 1) <= c.eps * k) ++i0;
  const auto alpha = fe_sequence(c.delta, std::max(d - 1, 1));
  for (int j = 0; j + 1 <= i0 && j <= d - 2; ++j) {
    try {
      v.case_trace.push_back(case_analysis(arr, c.delta, j, alpha, c.eps));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::TheoremViolation) throw;
      v.trace_notes.push_back("j=" + std::to_string(j) + ": " + e.what());
      break;
    }
  }

  for (int i = 1; i <= d - 1; ++i)
    if (witness(i)) {
      v.index = i;
      return v;
    }
  if (witness(0)) {
    v.index = 0;
    return v;
  }
  v.branch = DichotomyVerdict::Branch::SpectralGap;
  const double kd = double(arr.k());
  v.xi = zero_weight_radius(tridiagonal_eigenvalues(arr));
  v.xi_cap = kd * (1 - v.eta);
  if (v.xi > v.xi_cap + kSpectralSlack * kd)
    fail(ErrorCode::TheoremViolation, "no expanding index yet xi = " + std::to_string(v.xi) + " > k(1-eta) = " +
                                          std::to_string(v.xi_cap) + " for " + arr.str());
  return v;
}

inline DichotomyVerdict spectral_gap_dichotomy(const IntersectionArray& arr)
{
  return spectral_gap_dichotomy(arr, default_constants(arr.diameter()));
}

struct ExpansionReport {
  int dominant = 0;         // t maximising k_t
  double dominant_fraction = 0;  // k_t / n
  double epsilon = 0;       // eps/(1+eps)
  double eta = 0;
  double xi_over_k = 0;
  bool premise_met = false;
  bool gap_verified = false;
};

/// If k_t >= (1 - eps/(1+eps)) n for some t, checks xi <= k(1 - eta).
inline ExpansionReport expansion_check(const IntersectionArray& arr)
{
  const auto c = default_constants(arr.diameter());
  const auto kd = detail::distance_degrees(arr.raw());
  Rational n = 0;
  for (const auto& x : kd) n += x;
  int t = 1;
  for (int i = 2; i <= arr.diameter(); ++i)
    if (kd[i] > kd[t]) t = i;
  const Rational small_eps = c.eps / (1 + c.eps);
  ExpansionReport r;
  r.dominant = t;
  r.dominant_fraction = to_double(kd[t] / n);
  r.epsilon = to_double(small_eps);
  r.eta = c.eta.convert_to<double>();
  const double k = double(arr.k());
  const double xi = zero_weight_radius(tridiagonal_eigenvalues(arr));
  r.xi_over_k = xi / k;
  r.premise_met = kd[t] >= (1 - small_eps) * n;
  if (r.premise_met) {
    if (xi > k * (1 - r.eta) + kSpectralSlack * k)
      fail(ErrorCode::TheoremViolation, "dominant distance but xi/k = " + std::to_string(r.xi_over_k) + " for " +
                                            arr.str());
    r.gap_verified = true;
  }
  return r;
}

}  // namespace drg

#endif  // DRG_EXPANSION_HPP
