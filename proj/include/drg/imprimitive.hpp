#ifndef DRG_IMPRIMITIVE_HPP
#define DRG_IMPRIMITIVE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"

namespace drg {

struct ChainStep {
  std::string op;  // "halve" or "fold"
  RawArray result;
  std::string note;
};

struct ImprimitivityProfile {
  bool is_bipartite = false;
  bool is_antipodal = false;
  int t = 0;  // floor(d/2)
  std::optional<Rational> r;
  std::optional<RawArray> halved;
  std::optional<RawArray> folded;
  std::vector<ChainStep> reduction_chain;

  bool primitive_candidate() const { return !is_bipartite && !is_antipodal; }
};

namespace detail {

inline bool raw_bipartite(const RawArray& a)
{
  for (int i = 0; i <= a.diameter(); ++i)
    if (raw_b(a, i) + raw_c(a, i) != a.degree()) return false;
  return true;
}

inline bool raw_antipodal(const RawArray& a)
{
  const int d = a.diameter();
  const int t = d / 2;
  for (int i = 0; i <= d; ++i)
    if (i != t && raw_b(a, i) != raw_c(a, d - i)) return false;
  return true;
}

inline Rational raw_cover_index(const RawArray& a)
{
  const int d = a.diameter();
  const int t = d / 2;
  return 1 + Rational(raw_b(a, t), raw_c(a, d - t));
}

// {b_0 b_1/mu, b_2 b_3/mu, ...; c_1 c_2/mu, c_3 c_4/mu, ...}
inline RawArray raw_halved(const RawArray& a)
{
  if (!raw_bipartite(a)) fail(ErrorCode::NotBipartite, a.str() + " is not bipartite");
  const int d = a.diameter();
  if (d < 2) fail(ErrorCode::DomainError, "halving needs d >= 2");
  const std::int64_t mu = raw_c(a, 2);
  RawArray h;
  for (int i = 0; i < d / 2; ++i) {
    const std::int64_t bb = raw_b(a, 2 * i) * raw_b(a, 2 * i + 1);
    const std::int64_t cc = raw_c(a, 2 * i + 1) * raw_c(a, 2 * i + 2);
    if (bb % mu != 0 || cc % mu != 0)
      fail(ErrorCode::NonIntegral, "halved array of " + a.str() + " is not integral at position " + std::to_string(i));
    h.b.push_back(bb / mu);
    h.c.push_back(cc / mu);
  }
  return h;
}

// {b_0..b_{t-1}; c_1..c_{t-1}, gamma c_t}, gamma = r for even d, else 1.
inline RawArray raw_folded(const RawArray& a)
{
  if (!raw_antipodal(a)) fail(ErrorCode::NotAntipodal, a.str() + " is not antipodal");
  const int d = a.diameter();
  if (d <= 2) fail(ErrorCode::DiameterTwo, "the folded graph of a diameter-2 antipodal graph is complete");
  const int t = d / 2;
  const Rational r = raw_cover_index(a);
  if (!is_integral(r)) fail(ErrorCode::NonIntegral, "cover index r = " + r.str() + " of " + a.str());
  const std::int64_t gamma = d == 2 * t ? numerator(r).convert_to<std::int64_t>() : 1;
  RawArray f;
  for (int i = 0; i < t; ++i) f.b.push_back(raw_b(a, i));
  for (int i = 1; i < t; ++i) f.c.push_back(raw_c(a, i));
  f.c.push_back(gamma * raw_c(a, t));
  return f;
}

}  // namespace detail

inline RawArray halved_array(const IntersectionArray& arr) { return detail::raw_halved(arr.raw()); }

struct FoldResult {
  RawArray array;
  std::int64_t r = 0;
};

inline FoldResult folded_array(const IntersectionArray& arr)
{
  FoldResult f{detail::raw_folded(arr.raw()), 0};
  f.r = numerator(detail::raw_cover_index(arr.raw())).convert_to<std::int64_t>();
  return f;
}

/// Halving then folding, each at most once, ending at a primitive candidate.
inline std::vector<ChainStep> reduction_chain(const IntersectionArray& arr)
{
  if (arr.k() <= 2) fail(ErrorCode::PremiseViolated, "reduction chain needs k > 2");
  const RawArray& a = arr.raw();
  const int d = a.diameter();
  const bool bip = detail::raw_bipartite(a);
  const bool ant = detail::raw_antipodal(a);
  std::vector<ChainStep> chain;
  if (bip && (d % 2 == 1 || !ant)) {
    chain.push_back({"halve", detail::raw_halved(a), "bipartite, odd diameter or not antipodal: halved graph primitive"});
  } else if (ant && (d % 2 == 1 || !bip)) {
    chain.push_back({"fold", detail::raw_folded(a), "antipodal, odd diameter or not bipartite: folded graph primitive"});
  } else if (bip && ant) {
    const RawArray h = detail::raw_halved(a);
    chain.push_back({"halve", h, "bipartite and antipodal, even diameter: halved graph antipodal"});
    if (h.diameter() >= 3)
      chain.push_back({"fold", detail::raw_folded(h), "folded halved graph primitive"});
    else
      chain.push_back({"fold", RawArray{}, "halved graph has diameter 2: its folded graph is complete"});
  }
  return chain;
}

inline ImprimitivityProfile detect(const IntersectionArray& arr)
{
  const RawArray& a = arr.raw();
  ImprimitivityProfile p;
  p.is_bipartite = detail::raw_bipartite(a);
  p.is_antipodal = detail::raw_antipodal(a);
  p.t = arr.diameter() / 2;
  if (p.is_antipodal) p.r = detail::raw_cover_index(a);
  try {
    if (p.is_bipartite) p.halved = detail::raw_halved(a);
  } catch (const Error&) {
  }
  try {
    if (p.is_antipodal && arr.diameter() >= 3) p.folded = detail::raw_folded(a);
  } catch (const Error&) {
  }
  if (arr.k() > 2) {
    try {
      p.reduction_chain = reduction_chain(arr);
    } catch (const Error&) {
    }
  }
  return p;
}

/// A motion lower bound as a fraction of n, or a named exception.
struct ImprimitiveVerdict {
  enum class Kind { MotionBound, CocktailParty };
  Kind kind = Kind::MotionBound;
  Rational fraction;  // motion >= fraction * n
  double bound = 0;   // fraction * n
  std::string label;  // which case produced it
  std::vector<std::string> checks;

  bool exception() const { return kind == Kind::CocktailParty; }
};

namespace detail {

inline bool near(double x, double y) { return std::abs(x - y) <= 1e-6 * std::max(1.0, std::abs(y)); }

inline ImprimitiveVerdict bound_verdict(const Rational& fraction, const Integer& n, std::string label)
{
  ImprimitiveVerdict v;
  v.fraction = fraction;
  v.bound = to_double(fraction * Rational(n));
  v.label = std::move(label);
  return v;
}

}  // namespace detail

/// Bipartite diameter 3: array {k, k-1, k-mu; 1, mu, k}, n = 2 + 2k(k-1)/mu,
/// spectrum k, -k, +-sqrt(k-mu). K_{m,m} minus a perfect matching (k_3 = 1)
/// is the exception; otherwise motion >= n/12.
inline ImprimitiveVerdict bip3_analysis(const IntersectionArray& arr)
{
  if (!detail::raw_bipartite(arr.raw())) fail(ErrorCode::NotBipartite, arr.str() + " is not bipartite");
  if (arr.diameter() != 3) fail(ErrorCode::PremiseViolated, "bip3 analysis needs d = 3");
  const auto k = arr.k();
  const auto mu = arr.c(2);
  if (arr.b(1) != k - 1 || arr.b(2) != k - mu || arr.c(3) != k)
    fail(ErrorCode::ShapeViolation, arr.str() + " is not of the form {k, k-1, k-mu; 1, mu, k}");
  if ((2 * k * (k - 1)) % mu != 0) fail(ErrorCode::ShapeViolation, "2k(k-1)/mu is not an integer");
  const auto table = derive_parameters(arr);
  const Integer n_formula = 2 + 2 * k * (k - 1) / mu;
  if (table.n != n_formula) fail(ErrorCode::ShapeViolation, "n differs from 2 + 2k(k-1)/mu");
  const auto eig = tridiagonal_eigenvalues(arr);
  const double s = std::sqrt(double(k - mu));
  if (!(detail::near(eig[0], double(k)) && detail::near(eig[1], s) && detail::near(eig[2], -s) &&
        detail::near(eig[3], -double(k))))
    fail(ErrorCode::ShapeViolation, "spectrum is not {k, sqrt(k-mu), -sqrt(k-mu), -k}");

  ImprimitiveVerdict v;
  if (table.kdist[3] == 1) {
    v.kind = ImprimitiveVerdict::Kind::CocktailParty;
    v.label = "k_3 = 1: complete bipartite minus a perfect matching";
  } else {
    // Pass to the distance-3 graph when k > n/4, as in the case split.
    std::int64_t kk = k, mm = mu;
    std::string via = "X";
    if (Integer(4 * k) > table.n) {
      kk = table.kdist[3].convert_to<std::int64_t>();
      mm = 2 * kk * (kk - 1) / (table.n - 2).convert_to<std::int64_t>();
      via = "distance-3 graph";
    }
    std::string sub = 3 * mm >= 2 * kk ? "mu >= 2k/3" : (4 * mm >= kk ? "k/4 <= mu < 2k/3" : "mu <= k/4");
    v = detail::bound_verdict(Rational(1, 12), table.n, "n/12 (" + sub + " on " + via + ")");
  }
  v.checks = {"shape {k,k-1,k-mu;1,mu,k}", "n = 2 + 2k(k-1)/mu = " + n_formula.str(), "eigenvalues +-sqrt(k-mu)"};
  return v;
}

struct Antipodal3Parameters {
  std::int64_t r = 0;
  std::int64_t m = 0;  // lambda != mu only
  std::int64_t t = 0;
  bool lambda_equals_mu = false;
};

/// Antipodal diameter 3: n = r(k+1); for lambda != mu, k = mt with
/// mu = (m-1)(t+1)/r and lambda - mu = t - m; for lambda = mu, k = r mu + 1.
inline ImprimitiveVerdict antip3_analysis(const IntersectionArray& arr, Antipodal3Parameters* out = nullptr)
{
  if (!detail::raw_antipodal(arr.raw())) fail(ErrorCode::NotAntipodal, arr.str() + " is not antipodal");
  if (arr.diameter() != 3) fail(ErrorCode::PremiseViolated, "antip3 analysis needs d = 3");
  const auto table = derive_parameters(arr);
  const auto k = arr.k();
  const auto lam = table.lambda;
  const auto mu = table.mu;
  const Rational rq = detail::raw_cover_index(arr.raw());
  if (!is_integral(rq) || rq < 2) fail(ErrorCode::ShapeViolation, "cover index r = " + rq.str());
  const std::int64_t r = numerator(rq).convert_to<std::int64_t>();
  if (table.n != Integer(r) * (k + 1)) fail(ErrorCode::ShapeViolation, "n != r(k+1)");
  Antipodal3Parameters prm;
  prm.r = r;
  ImprimitiveVerdict v;
  const Integer& n = table.n;

  if (lam == mu) {
    prm.lambda_equals_mu = true;
    if (k != r * mu + 1) fail(ErrorCode::ShapeViolation, "lambda = mu but k != r mu + 1");
    if (r >= 4)
      v = detail::bound_verdict(Rational(1, 6), n, "lambda = mu, r >= 4: spectral, n/6");
    else
      v = detail::bound_verdict(Rational(2 * (r - 1), 3 * r * r), n, "lambda = mu, r <= 3: 2(r-1)n/(3r^2)");
  } else {
    // m^2 + (lambda - mu) m - k = 0
    const std::int64_t delta = lam - mu;
    const std::int64_t disc = delta * delta + 4 * k;
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(double(disc))));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    if (root * root != disc || (root - delta) % 2 != 0)
      fail(ErrorCode::ShapeViolation, "no integers m, t with k = mt and t - m = lambda - mu");
    const std::int64_t m = (root - delta) / 2;
    const std::int64_t t = m + delta;
    if (m < 2 || t < 1 || m * t != k) fail(ErrorCode::ShapeViolation, "m >= 2, t >= 1, k = mt fails");
    if (mu * r != (m - 1) * (t + 1)) fail(ErrorCode::ShapeViolation, "mu r != (m-1)(t+1)");
    prm.m = m;
    prm.t = t;
    if (t > m) {
      if (m >= 3 && r >= 3)
        v = detail::bound_verdict(Rational(1, 9), n, "t > m, m >= 3, r >= 3: spectral, n/9");
      else if (r == 2 && m >= 4)
        v = detail::bound_verdict(Rational(1, 9), n, "t > m, r = 2, m >= 4: spectral, n/9");
      else if (r == 2 && m == 3)
        v = detail::bound_verdict(Rational(1, 3), n, "t > m, r = 2, m = 3: D_min, n/3");
      else
        v = detail::bound_verdict(Rational(1, 13), n, "t > m, m = 2: D_min, n/13");
    } else {
      if (t == 1) {
        v.kind = ImprimitiveVerdict::Kind::CocktailParty;
        v.label = "m > t = 1: complete bipartite minus a perfect matching";
      } else if (r >= 4) {
        v = detail::bound_verdict(Rational(1, 8), n, "m > t >= 2, r >= 4: spectral, n/8");
      } else {
        v = detail::bound_verdict(Rational(1, 12), n, "m > t >= 2, r <= 3: D_min, n/12");
      }
    }
  }
  v.checks = {"n = r(k+1)", prm.lambda_equals_mu ? "k = r mu + 1" : "k = mt, mu r = (m-1)(t+1)"};
  if (out) *out = prm;
  return v;
}

struct BipAntip4Result {
  ImprimitiveVerdict verdict;
  std::int64_t m = 0;
  double eq1 = 0;  // (m-1) n / m^2
  double eq2 = 0;  // (k - sqrt k - mu) n / (2k)
  std::string proof_choice;  // eq1 for m <= 4, eq2 beyond
  bool at_least_015n = false;
};

/// Bipartite antipodal diameter 4: k = m mu, n = 2 m^2 mu, array
/// {m mu, m mu - 1, (m-1) mu, 1; 1, mu, m mu - 1, m mu}, spectrum
/// +-k (1), +-sqrt(k) ((m-1)k), 0 (2k-2).
inline BipAntip4Result bip_antip4_analysis(const IntersectionArray& arr)
{
  if (!detail::raw_bipartite(arr.raw())) fail(ErrorCode::NotBipartite, arr.str() + " is not bipartite");
  if (!detail::raw_antipodal(arr.raw())) fail(ErrorCode::NotAntipodal, arr.str() + " is not antipodal");
  if (arr.diameter() != 4) fail(ErrorCode::PremiseViolated, "bip-antip4 analysis needs d = 4");
  const auto k = arr.k();
  const auto mu = arr.c(2);
  if (k % mu != 0) fail(ErrorCode::ShapeViolation, "k/mu is not an integer in " + arr.str());
  const std::int64_t m = k / mu;
  const RawArray expect{{m * mu, m * mu - 1, (m - 1) * mu, 1}, {1, mu, m * mu - 1, m * mu}};
  if (m < 2 || arr.raw() != expect) fail(ErrorCode::ShapeViolation, arr.str() + " does not match the m, mu pattern");
  const auto table = derive_parameters(arr);
  if (table.n != Integer(2 * m * m * mu)) fail(ErrorCode::ShapeViolation, "n != 2 m^2 mu");
  const auto spec = eigen_spectrum(arr);
  const double sk = std::sqrt(double(k));
  const std::vector<std::pair<double, std::int64_t>> want{
      {double(k), 1}, {sk, (m - 1) * k}, {0.0, 2 * k - 2}, {-sk, (m - 1) * k}, {-double(k), 1}};
  for (std::size_t i = 0; i < want.size(); ++i)
    if (!detail::near(spec.eigenvalues[i].value + 1.0, want[i].first + 1.0) ||
        spec.eigenvalues[i].multiplicity != want[i].second)
      fail(ErrorCode::ShapeViolation, "spectrum differs from the bipartite antipodal d = 4 pattern");

  BipAntip4Result r;
  r.m = m;
  const double n = table.n_double();
  r.eq1 = double(m - 1) * n / double(m * m);
  r.eq2 = (double(k) - sk - double(mu)) * n / (2.0 * double(k));
  r.proof_choice = m <= 4 ? "eq1" : "eq2";
  const bool first = r.eq1 >= r.eq2;
  r.verdict.fraction = first ? Rational(m - 1, m * m) : exact_rational(r.eq2 / n);
  r.verdict.bound = first ? r.eq1 : r.eq2;
  r.verdict.label = first ? "D_min: (m-1)n/m^2" : "bipartite spectral: (k-sqrt(k)-mu)n/(2k)";
  r.verdict.checks = {"k = m mu", "n = 2 m^2 mu", "pattern", "spectrum"};
  r.at_least_015n = r.verdict.bound >= 0.15 * n;
  return r;
}

/// n (k - |lambda_2| - q) / (2k) for bipartite graphs; may be <= 0.
inline double bipartite_motion_bound(const ParameterTable& t, const Spectrum& spec)
{
  if (!detail::raw_bipartite(t.array.raw())) fail(ErrorCode::NotBipartite, t.array.str() + " is not bipartite");
  const double k = double(t.k());
  return t.n_double() * (k - std::abs(spec.second_largest()) - double(t.q)) / (2.0 * k);
}

struct BipartiteD4Report {
  Rational gamma;  // (2d)^{-2d-5}
  double bound = 0;
  std::vector<std::string> ledger;
};

/// motion >= (2d)^{-2d-5} n for bipartite d >= 4 whose halved graph is
/// primitive (attested by the caller). The internal split over j with
/// eps = (2d)^{-d-2} is replayed as a diagnostic.
inline BipartiteD4Report bipartite_d4_bound(const IntersectionArray& arr, bool halved_primitive = true)
{
  if (!detail::raw_bipartite(arr.raw())) fail(ErrorCode::NotBipartite, arr.str() + " is not bipartite");
  const int d = arr.diameter();
  if (d < 4) fail(ErrorCode::PremiseViolated, "needs d >= 4");
  if (!halved_primitive) fail(ErrorCode::PremiseViolated, "halved graph must be primitive");
  const auto table = derive_parameters(arr);
  BipartiteD4Report rep;
  rep.gamma = 1 / Rational(pow(Integer(2 * d), static_cast<unsigned>(2 * d + 5)));
  rep.bound = to_double(rep.gamma * Rational(table.n));

  const int t = d / 2;
  const Rational eps = 1 / Rational(pow(Integer(2 * d), static_cast<unsigned>(d + 2)));
  const Rational k = arr.k();
  auto c = [&](int i) { return i > d ? arr.k() : arr.c(i); };
  auto b = [&](int i) { return i >= d ? std::int64_t{0} : arr.b(i); };
  int j = 0;
  for (int cand = 1; cand <= t; ++cand)
    if (c(2 * cand - 1) <= eps * k && c(2 * cand + 1) >= eps * k) {
      j = cand;
      break;
    }
  rep.ledger.push_back("t = floor(d/2) = " + std::to_string(t) + "; the halved diameter is the same t");
  const Rational case1 = Rational(1, 6 * t * (std::int64_t{1} << t));
  const Rational case3 = eps * eps / (2 * t);
  rep.ledger.push_back("candidate constants: 1/(6t2^t) = " + case1.str() + ", 1/6, eps^2/(2t) = " + case3.str());
  if (j == 0) {
    rep.ledger.push_back("no j with c_{2j-1} <= eps k <= c_{2j+1} (c_1 > eps k): split not reached");
  } else if (b(2 * j + 1) <= eps * k) {
    rep.ledger.push_back(j == 1 ? "case 1: j = 1, b_3 <= eps k" : "case 2: j >= 2, b_{2j+1} <= eps k");
  } else {
    rep.ledger.push_back("case 3: b_{2j+1} > eps k, j = " + std::to_string(j));
  }
  return rep;
}

/// A lower bound on motion as a fraction of the vertex count, carried back
/// along the reduction chain.
struct TransferVerdict {
  Rational fraction;
  std::vector<std::string> steps;
  std::string branch;  // imprimitive composition case
  std::vector<std::string> exceptions;
};

/// Known facts on antipodal covers of the classical families.
inline std::string classical_cover_fact(const std::string& family, std::int64_t s, std::int64_t d)
{
  if (family == "hamming")
    return s == 2 && d == 2 ? "H(2,2), the quadrangle, is covered by the octagon"
                            : "H(d,s) has no distance-regular antipodal covers";
  if (family == "johnson")
    return d >= 2 ? "J(s,d) has no distance-regular antipodal covers" : "not covered by the lookup";
  if (family == "johnson-complement")
    return s >= 8 ? "complement of J(s,2) has no distance-regular antipodal covers" : "not covered by the lookup";
  if (family == "hamming-complement")
    return s >= 4 ? "complement of H(2,s) has no distance-regular antipodal covers" : "not covered by the lookup";
  return "not covered by the lookup";
}

/// Folding keeps the fraction, halving halves it (min over the two halves,
/// each on n/2 vertices). Also labels the imprimitive composition branch.
inline TransferVerdict reduction_motion_transfer(const Rational& reduced_fraction, const ImprimitivityProfile& p,
                                                 int d)
{
  TransferVerdict v;
  v.fraction = reduced_fraction;
  for (auto it = p.reduction_chain.rbegin(); it != p.reduction_chain.rend(); ++it) {
    if (it->op == "fold") {
      v.steps.push_back("fold: cover keeps fraction " + v.fraction.str());
    } else {
      v.fraction /= 2;
      v.steps.push_back("halve: fraction becomes " + v.fraction.str());
    }
  }
  if (p.primitive_candidate()) {
    v.branch = "primitive: caller-supplied constant";
  } else if (p.is_bipartite && !p.is_antipodal && d >= 4) {
    v.branch = "bipartite, not antipodal, d >= 4: (2d)^{-2d-5}";
  } else if (p.is_bipartite && d == 3) {
    v.branch = "bipartite, d = 3: n/12 unless complete bipartite minus a matching";
    v.exceptions.push_back("complete bipartite minus a perfect matching");
  } else if (p.is_bipartite && p.is_antipodal && d == 4) {
    v.branch = "bipartite antipodal, d = 4: 0.15 n";
  } else if (p.is_bipartite && p.is_antipodal && d % 2 == 0) {
    v.branch = "bipartite antipodal, even d >= 6: min(gamma'_{d/2}, 1/12)";
  } else if (p.is_antipodal && d == 3) {
    v.branch = "antipodal, d = 3: n/13 unless complete bipartite minus a matching";
    v.exceptions.push_back("complete bipartite minus a perfect matching");
  } else if (p.is_antipodal) {
    v.branch = "antipodal, d >= 4: min(gamma_{floor(d/2)}, 1/8), covers of small classical graphs n/14";
    v.exceptions.push_back("Johnson J(s,d)");
    v.exceptions.push_back("Hamming H(d,s)");
  } else {
    v.branch = "unclassified";
  }
  return v;
}

}  // namespace drg

#endif  // DRG_IMPRIMITIVE_HPP
