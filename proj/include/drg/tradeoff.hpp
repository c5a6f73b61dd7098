#ifndef DRG_TRADEOFF_HPP
#define DRG_TRADEOFF_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"
#include "parameters.hpp"

namespace drg {

/// Counts in the graph Y on V(X) where u ~ v iff 1 <= dist(u, v) <= j+1,
/// together with the estimates used to bound them.
struct TradeoffDiagnostics {
  Rational k_y;               // sum_{i=1}^{j+1} k_i
  Rational lambda_s;          // common Y-neighbours of a pair at X-distance s
  Rational lambda_rest;       // same for X-distance j+2-s
  Rational mu_y;              // same for X-distance j+2
  Rational lambda_s_floor;    // k_{j+1}(1 - sum_{t<=s} b_{j+1}/b_{t-1}) - p^s_{j+1,0}
  Rational lambda_rest_floor;
  Rational mu_y_cap;          // k_{j+1}(2/(C-1) + sum_{t<=j+1} c_{j+2}/b_{t-1})
  bool lambda_bounds_hold = false;
  bool mu_bound_holds = false;
  bool triangle_holds = false;  // lambda_s + lambda_rest <= k_y + mu_y
};

struct TradeoffResult {
  int j = 0;
  int s = 0;
  Rational C;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  TradeoffDiagnostics diag;
};

namespace detail {

inline Rational inverse_b_sum(const IntersectionArray& arr, int upto)
{
  Rational sum = 0;
  for (int t = 1; t <= upto; ++t) sum += Rational(1, arr.b(t - 1));
  return sum;
}

}  // namespace detail

/// Exact evaluation of the growth-induced tradeoff for 0 <= j <= d-2 and
/// 1 <= s <= j+1; needs b_j > c_{j+1}.
inline TradeoffResult tradeoff_check(const IntersectionArray& arr, int j, int s)
{
  const int d = arr.diameter();
  if (j < 0 || j > d - 2) fail(ErrorCode::DomainError, "j must satisfy 0 <= j <= d-2");
  if (s < 1 || s > j + 1) fail(ErrorCode::DomainError, "s must satisfy 1 <= s <= j+1");
  if (arr.b(j) <= arr.c(j + 1))
    fail(ErrorCode::PremiseViolated, "b_" + std::to_string(j) + " <= c_" + std::to_string(j + 1) + " in " + arr.str());

  TradeoffResult r;
  r.j = j;
  r.s = s;
  r.C = Rational(arr.b(j), arr.c(j + 1));
  const Rational bj1 = arr.b(j + 1);
  const Rational cj2 = arr.c(j + 2);
  r.lhs = bj1 * (detail::inverse_b_sum(arr, s) + detail::inverse_b_sum(arr, j + 2 - s)) +
          cj2 * detail::inverse_b_sum(arr, j + 1);
  r.rhs = 1 - Rational(4) / (r.C - 1);
  r.holds = r.lhs >= r.rhs;

  const auto kd = detail::distance_degrees(arr.raw());
  const auto p = detail::raw_tensor(arr.raw());
  auto& g = r.diag;
  for (int i = 1; i <= j + 1; ++i) g.k_y += kd[i];
  auto common_y = [&](int dist) {
    Rational sum = 0;
    for (int a = 1; a <= j + 1; ++a)
      for (int b = 1; b <= j + 1; ++b) sum += p(dist, a, b);
    return sum;
  };
  auto lambda_floor = [&](int i) {
    Rational sum = 0;
    for (int t = 1; t <= i; ++t) sum += bj1 / arr.b(t - 1);
    return kd[j + 1] * (1 - sum) - p(i, j + 1, 0);
  };
  g.lambda_s = common_y(s);
  g.lambda_rest = common_y(j + 2 - s);
  g.mu_y = common_y(j + 2);
  g.lambda_s_floor = lambda_floor(s);
  g.lambda_rest_floor = lambda_floor(j + 2 - s);
  g.mu_y_cap = kd[j + 1] * (Rational(2) / (r.C - 1) + cj2 * detail::inverse_b_sum(arr, j + 1));
  g.lambda_bounds_hold = g.lambda_s >= g.lambda_s_floor && g.lambda_rest >= g.lambda_rest_floor;
  g.mu_bound_holds = g.mu_y <= g.mu_y_cap;
  g.triangle_holds = g.lambda_s + g.lambda_rest <= g.k_y + g.mu_y;
  return r;
}

/// Every admissible (j, s) for the array; pairs with b_j <= c_{j+1} are skipped.
inline std::vector<TradeoffResult> tradeoff_sweep(const IntersectionArray& arr)
{
  std::vector<TradeoffResult> out;
  for (int j = 0; j <= arr.diameter() - 2; ++j) {
    if (arr.b(j) <= arr.c(j + 1)) continue;
    for (int s = 1; s <= j + 1; ++s) out.push_back(tradeoff_check(arr, j, s));
  }
  return out;
}

}  // namespace drg

#endif  // DRG_TRADEOFF_HPP
