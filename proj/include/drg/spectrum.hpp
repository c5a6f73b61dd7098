#ifndef DRG_SPECTRUM_HPP
#define DRG_SPECTRUM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "error.hpp"
#include "intersection_array.hpp"
#include "parameters.hpp"
#include "tridiagonal_eigen.hpp"

namespace drg {

/// Eigenvalue separation tolerance, relative to k.
inline constexpr double kSeparationTolerance = 1e-9;
/// Maximum distance of a computed multiplicity from the nearest integer.
inline constexpr double kMultiplicityTolerance = 1e-6;

/// Tridiagonal T(X): diagonal a_i, superdiagonal b_i, subdiagonal c_{i+1}.
struct IntersectionMatrix {
  std::vector<std::int64_t> diag;   // a_0..a_d
  std::vector<std::int64_t> upper;  // b_0..b_{d-1}
  std::vector<std::int64_t> lower;  // c_1..c_d

  int size() const { return static_cast<int>(diag.size()); }

  std::int64_t operator()(int r, int c) const
  {
    if (r == c) return diag[r];
    if (c == r + 1) return upper[r];
    if (r == c + 1) return lower[c];
    return 0;
  }

  std::int64_t row_sum(int r) const
  {
    std::int64_t s = diag[r];
    if (r + 1 < size()) s += upper[r];
    if (r > 0) s += lower[r - 1];
    return s;
  }

  Eigen::MatrixXd dense() const
  {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
    for (int r = 0; r < size(); ++r)
      for (int c = std::max(0, r - 1); c <= std::min(size() - 1, r + 1); ++c) m(r, c) = double((*this)(r, c));
    return m;
  }
};

inline IntersectionMatrix intersection_matrix(const IntersectionArray& arr)
{
  IntersectionMatrix t;
  for (int i = 0; i <= arr.diameter(); ++i) t.diag.push_back(arr.a(i));
  t.upper = arr.raw().b;
  t.lower = arr.raw().c;
  return t;
}

struct Eigenvalue {
  double value = 0;
  std::int64_t multiplicity = 0;
};

struct Spectrum {
  std::vector<Eigenvalue> eigenvalues;  // strictly decreasing
  double xi = 0;                        // zero-weight spectral radius
  double theta_min = 0;

  double principal() const { return eigenvalues.front().value; }
  double second_largest() const { return eigenvalues.at(1).value; }
  std::int64_t total_multiplicity() const
  {
    std::int64_t s = 0;
    for (const auto& e : eigenvalues) s += e.multiplicity;
    return s;
  }
};

namespace detail {

// Eigenvalues of the symmetrisation of T(X) (off-diagonals sqrt(b_i c_{i+1})),
// which is similar to T(X) whenever every b_i c_{i+1} > 0.
inline std::vector<double> raw_tridiagonal_eigenvalues(const RawArray& r)
{
  const int d = r.diameter();
  std::vector<double> diag, off;
  for (int i = 0; i <= d; ++i) diag.push_back(double(raw_a(r, i)));
  for (int i = 0; i < d; ++i) off.push_back(std::sqrt(double(raw_b(r, i)) * double(raw_c(r, i + 1))));
  return symmetric_tridiagonal_eigenvalues(std::move(diag), std::move(off));
}

// m(theta) = n / sum_i k_i u_i(theta)^2 with u_0 = 1, u_1 = theta/k and
// theta u_i = c_i u_{i-1} + a_i u_i + b_i u_{i+1}.
inline long double raw_multiplicity(const RawArray& r, const std::vector<Rational>& kdist, double theta)
{
  const int d = r.diameter();
  const long double k = r.degree();
  std::vector<long double> u{1.0L, theta / k};
  for (int i = 1; i < d; ++i)
    u.push_back(((theta - raw_a(r, i)) * u[i] - raw_c(r, i) * u[i - 1]) / raw_b(r, i));
  long double n = 0, norm = 0;
  for (int i = 0; i <= d; ++i) {
    const long double ki = kdist[i].convert_to<long double>();
    n += ki;
    norm += ki * u[i] * u[i];
  }
  return n / norm;
}

}  // namespace detail

/// Distinct eigenvalues of T(X), non-increasing; no multiplicity checks.
inline std::vector<double> tridiagonal_eigenvalues(const IntersectionArray& arr)
{
  return detail::raw_tridiagonal_eigenvalues(arr.raw());
}

inline double zero_weight_radius(const std::vector<double>& eig)
{
  return std::max(std::abs(eig.at(1)), std::abs(eig.back()));
}

inline Spectrum eigen_spectrum(const IntersectionArray& arr)
{
  const double k = double(arr.k());
  auto eig = tridiagonal_eigenvalues(arr);
  for (std::size_t i = 0; i + 1 < eig.size(); ++i)
    if (eig[i] - eig[i + 1] < kSeparationTolerance * k)
      fail(ErrorCode::DegenerateSpectrum, "eigenvalues " + std::to_string(eig[i]) + " and " +
                                              std::to_string(eig[i + 1]) + " coincide within tolerance in " +
                                              arr.str());
  auto kdist = detail::distance_degrees(arr.raw());
  Spectrum spec;
  for (double theta : eig) {
    const long double m = detail::raw_multiplicity(arr.raw(), kdist, theta);
    const long double rounded = std::round(m);
    if (!(std::abs(m - rounded) <= kMultiplicityTolerance) || rounded < 1)
      fail(ErrorCode::MultiplicityNotIntegral,
           "multiplicity of " + std::to_string(theta) + " is " + std::to_string(double(m)) + " in " + arr.str());
    spec.eigenvalues.push_back({theta, static_cast<std::int64_t>(rounded)});
  }
  spec.xi = zero_weight_radius(eig);
  spec.theta_min = eig.back();
  return spec;
}

/// 2(n+1)^2 M delta^{1/n}: some matching of the eigenvalues of A and B
/// differs by at most this much in every pair.
inline double ostrowski_bound(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    fail(ErrorCode::DomainError, "ostrowski_bound needs two square matrices of equal size");
  const auto n = static_cast<double>(a.rows());
  const double big = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  const double diff = (a - b).cwiseAbs().sum();
  if (diff == 0.0) return 0.0;
  const double delta = diff / (n * big);
  return 2.0 * (n + 1) * (n + 1) * big * std::pow(delta, 1.0 / n);
}

/// min over permutations s of max_i |lambda_i(A) - lambda_s(i)(B)|, with
/// complex eigenvalues; exhaustive, so limited to n <= 8.
inline double eigenvalue_matching_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
  if (a.rows() != b.rows() || a.rows() > 8)
    fail(ErrorCode::DomainError, "matching needs equal sizes n <= 8");
  const Eigen::VectorXcd ea = Eigen::EigenSolver<Eigen::MatrixXd>(a, false).eigenvalues();
  const Eigen::VectorXcd eb = Eigen::EigenSolver<Eigen::MatrixXd>(b, false).eigenvalues();
  std::vector<int> perm(static_cast<std::size_t>(a.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct LocalityReport {
  int index = 0;
  double eps = 0;
  double theta = 0;      // theta_i, i-th largest distinct eigenvalue
  double deviation = 0;  // |theta_i - a_i|
  double radius = 0;     // 2(d+2)^2 eps^{1/(d+1)} k
  bool holds = false;
  // Largest alpha with b_{i-1} >= alpha k and c_{i+1} >= alpha k (c_{d+1} = k),
  // and the resulting cap on xi; absent when i = 0.
  std::optional<double> alpha;
  std::optional<double> xi_cap;
  double xi = 0;
  bool xi_holds = true;
};

inline LocalityReport eigenvalue_locality_check(const IntersectionArray& arr, int i, double eps)
{
  const int d = arr.diameter();
  if (i < 0 || i > d) fail(ErrorCode::DomainError, "index " + std::to_string(i) + " out of range");
  const double k = double(arr.k());
  if (!(eps > 0) || double(arr.b(i)) > eps * k || double(arr.c(i)) > eps * k)
    fail(ErrorCode::Inapplicable, "needs b_" + std::to_string(i) + " <= eps k and c_" + std::to_string(i) +
                                      " <= eps k");
  auto eig = tridiagonal_eigenvalues(arr);
  LocalityReport rep;
  rep.index = i;
  rep.eps = eps;
  rep.theta = eig[i];
  rep.deviation = std::abs(eig[i] - double(arr.a(i)));
  rep.radius = 2.0 * (d + 2) * (d + 2) * std::pow(eps, 1.0 / (d + 1)) * k;
  rep.holds = rep.deviation <= rep.radius;
  rep.xi = zero_weight_radius(eig);
  if (i >= 1) {
    const double alpha = double(std::min(arr.b(i - 1), arr.c_ext(i + 1))) / k;
    if (alpha > 0) {
      rep.alpha = alpha;
      rep.xi_cap = k * (1.0 - alpha) + rep.radius;
      rep.xi_holds = rep.xi <= *rep.xi_cap;
    }
  }
  return rep;
}

}  // namespace drg

#endif  // DRG_SPECTRUM_HPP
