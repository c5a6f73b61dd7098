#ifndef DRG_PARAMETERS_HPP
#define DRG_PARAMETERS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "intersection_array.hpp"
#include "numeric.hpp"

namespace drg {

/// Dense (d+1)^3 table of p^s_{i,j}; p(s, i, j) = |N_i(u) ∩ N_j(v)| for dist(u, v) = s.
template <class T>
class BasicTensor {
 public:
  BasicTensor() = default;
  explicit BasicTensor(int diameter) : d_(diameter), data_(cube(diameter + 1)) {}

  int diameter() const { return d_; }
  T& operator()(int s, int i, int j) { return data_[index(s, i, j)]; }
  const T& operator()(int s, int i, int j) const { return data_[index(s, i, j)]; }

  bool operator==(const BasicTensor&) const = default;

 private:
  static std::size_t cube(int m) { return static_cast<std::size_t>(m) * m * m; }
  std::size_t index(int s, int i, int j) const
  {
    const std::size_t m = static_cast<std::size_t>(d_) + 1;
    return (static_cast<std::size_t>(s) * m + i) * m + j;
  }

  int d_ = 0;
  std::vector<T> data_;
};

using IntersectionTensor = BasicTensor<Integer>;

struct ParameterTable {
  IntersectionArray array;
  std::vector<std::int64_t> a;  // a_0..a_d
  std::vector<Integer> kdist;   // k_0..k_d
  Integer n;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  std::int64_t q = 0;  // max common neighbours of two distinct vertices
  IntersectionTensor p;

  int diameter() const { return array.diameter(); }
  std::int64_t k() const { return array.k(); }
  double n_double() const { return to_double(n); }
};

namespace detail {

inline std::int64_t raw_b(const RawArray& r, int i)
{
  return i >= 0 && i < r.diameter() ? r.b[static_cast<std::size_t>(i)] : 0;
}
inline std::int64_t raw_c(const RawArray& r, int i)
{
  return i >= 1 && i <= r.diameter() ? r.c[static_cast<std::size_t>(i - 1)] : 0;
}
inline std::int64_t raw_a(const RawArray& r, int i) { return r.degree() - raw_b(r, i) - raw_c(r, i); }

/// k_{i+1} = k_i b_i / c_{i+1}, exactly, without integrality checks.
inline std::vector<Rational> distance_degrees(const RawArray& r)
{
  std::vector<Rational> k{Rational(1)};
  for (int i = 0; i < r.diameter(); ++i) k.push_back(k.back() * raw_b(r, i) / raw_c(r, i + 1));
  return k;
}

/// Coefficients of A_i A_j in the basis A_0..A_d, from the three-term
/// recurrence A A_s = c_{s+1} A_{s+1} + a_s A_s + b_{s-1} A_{s-1}.
/// Result is indexed [s][i][j]; no integrality checks.
inline BasicTensor<Rational> raw_tensor(const RawArray& r)
{
  const int d = r.diameter();
  BasicTensor<Rational> out(d);
  // Left multiplication by A on a coefficient vector over {A_s}.
  auto times_a = [&](const std::vector<Rational>& v) {
    std::vector<Rational> w(static_cast<std::size_t>(d + 1));
    for (int t = 0; t <= d; ++t) {
      Rational acc = v[t] * raw_a(r, t);
      if (t > 0) acc += v[t - 1] * raw_c(r, t);
      if (t < d) acc += v[t + 1] * raw_b(r, t);
      w[t] = acc;
    }
    return w;
  };
  for (int i = 0; i <= d; ++i) {
    std::vector<Rational> prev(static_cast<std::size_t>(d + 1));
    std::vector<Rational> cur(static_cast<std::size_t>(d + 1));
    cur[i] = 1;
    for (int j = 0; j <= d; ++j) {
      for (int s = 0; s <= d; ++s) out(s, i, j) = cur[s];
      if (j == d) break;
      auto next = times_a(cur);
      for (int s = 0; s <= d; ++s) {
        next[s] -= raw_a(r, j) * cur[s];
        if (j > 0) next[s] -= raw_b(r, j - 1) * prev[s];
        next[s] /= raw_c(r, j + 1);
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return out;
}

}  // namespace detail

/// p^s_{i,j} for a valid array. Throws NonIntegralP if some coefficient is
/// negative or not an integer.
inline IntersectionTensor intersection_tensor(const IntersectionArray& arr)
{
  const int d = arr.diameter();
  auto raw = detail::raw_tensor(arr.raw());
  IntersectionTensor p(d);
  for (int s = 0; s <= d; ++s)
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j) {
        const Rational& v = raw(s, i, j);
        if (!is_integral(v) || v < 0)
          fail(ErrorCode::NonIntegralP, "p^" + std::to_string(s) + "_{" + std::to_string(i) + "," +
                                            std::to_string(j) + "} = " + v.str() + " in " + arr.str());
        p(s, i, j) = numerator(v);
      }
  return p;
}

inline ParameterTable derive_parameters(const IntersectionArray& arr)
{
  const int d = arr.diameter();
  ParameterTable t{arr, {}, {}, 0, 0, 0, 0, {}};
  for (int i = 0; i <= d; ++i) {
    t.a.push_back(arr.a(i));
    if (t.a.back() < 0)
      fail(ErrorCode::NegativeA, "a_" + std::to_string(i) + " = " + std::to_string(t.a.back()) + " in " + arr.str());
  }
  auto kd = detail::distance_degrees(arr.raw());
  for (int i = 0; i <= d; ++i) {
    if (!is_integral(kd[i]))
      fail(ErrorCode::NonIntegralDistanceDegree,
           "k_" + std::to_string(i) + " = " + kd[i].str() + " is not an integer in " + arr.str());
    t.kdist.push_back(numerator(kd[i]));
    t.n += t.kdist.back();
  }
  t.lambda = arr.a(1);
  t.mu = arr.c(2);
  t.q = std::max(t.lambda, t.mu);
  t.p = intersection_tensor(arr);
  return t;
}

}  // namespace drg

#endif  // DRG_PARAMETERS_HPP
