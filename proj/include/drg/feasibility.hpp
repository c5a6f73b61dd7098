#ifndef DRG_FEASIBILITY_HPP
#define DRG_FEASIBILITY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "intersection_array.hpp"
#include "parameters.hpp"
#include "spectrum.hpp"

namespace drg {

using Violation = IntersectionArray::Violation;

/// Every failed feasibility check for an unvalidated array, in a fixed order.
///
/// Shape problems (length, diameter, positivity, c_1) end the report since
/// nothing else is well defined. Monotonicity and a_i >= 0 are recorded and the
/// report continues. Non-integral k_i ends the report; otherwise the p-tensor
/// and the multiplicities are checked.
inline std::vector<Violation> feasibility_report(const RawArray& raw)
{
  std::vector<Violation> out;
  auto add = [&](ErrorCode code, std::string msg) { out.push_back({code, std::move(msg)}); };

  if (raw.b.size() != raw.c.size()) {
    add(ErrorCode::InvalidArray, "b and c must have equal length");
    return out;
  }
  const int d = raw.diameter();
  if (d < 2) {
    add(ErrorCode::InvalidArray, "diameter must be at least 2");
    return out;
  }
  for (int i = 0; i < d; ++i)
    if (raw.b[i] <= 0 || raw.c[i] <= 0) {
      add(ErrorCode::InvalidArray, "all b_i (i < d) and c_i (i >= 1) must be positive");
      return out;
    }
  if (raw.c[0] != 1) {
    add(ErrorCode::InvalidArray, "c_1 must equal 1");
    return out;
  }

  for (int i = 0; i + 1 < d; ++i) {
    if (raw.b[i + 1] > raw.b[i])
      add(ErrorCode::InvalidArray, "b_" + std::to_string(i + 1) + " > b_" + std::to_string(i));
    if (raw.c[i + 1] < raw.c[i])
      add(ErrorCode::InvalidArray, "c_" + std::to_string(i + 2) + " < c_" + std::to_string(i + 1));
  }
  for (int i = 0; i <= d; ++i)
    if (detail::raw_a(raw, i) < 0)
      add(ErrorCode::NegativeA, "a_" + std::to_string(i) + " = " + std::to_string(detail::raw_a(raw, i)));

  const auto kd = detail::distance_degrees(raw);
  bool integral = true;
  for (int i = 0; i <= d; ++i)
    if (!is_integral(kd[i])) {
      add(ErrorCode::NonIntegralDistanceDegree, "k_" + std::to_string(i) + " = " + kd[i].str());
      integral = false;
    }
  if (!integral) return out;

  const auto p = detail::raw_tensor(raw);
  bool tensor_ok = true;
  for (int s = 0; s <= d && tensor_ok; ++s)
    for (int i = 0; i <= d && tensor_ok; ++i)
      for (int j = 0; j <= d && tensor_ok; ++j) {
        const Rational& v = p(s, i, j);
        if (!is_integral(v) || v < 0) {
          add(ErrorCode::NonIntegralP, "p^" + std::to_string(s) + "_{" + std::to_string(i) + "," +
                                           std::to_string(j) + "} = " + v.str());
          tensor_ok = false;
        }
      }

  {
    const auto eig = detail::raw_tridiagonal_eigenvalues(raw);
    const double k = double(raw.degree());
    for (std::size_t i = 0; i + 1 < eig.size(); ++i)
      if (eig[i] - eig[i + 1] < kSeparationTolerance * k) {
        add(ErrorCode::DegenerateSpectrum, "eigenvalues " + std::to_string(eig[i]) + " and " +
                                               std::to_string(eig[i + 1]) + " coincide");
        return out;
      }
    for (double theta : eig) {
      const long double m = detail::raw_multiplicity(raw, kd, theta);
      if (!(std::abs(m - std::round(m)) <= kMultiplicityTolerance) || std::round(m) < 1)
        add(ErrorCode::MultiplicityNotIntegral,
            "m(" + std::to_string(theta) + ") = " + std::to_string(double(m)));
    }
  }
  return out;
}

inline std::vector<Violation> feasibility_report(const IntersectionArray& arr)
{
  return feasibility_report(arr.raw());
}

}  // namespace drg

#endif  // DRG_FEASIBILITY_HPP
