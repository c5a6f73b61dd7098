#ifndef DRG_INTERSECTION_ARRAY_HPP
#define DRG_INTERSECTION_ARRAY_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace drg {

/// Unvalidated {b_0..b_{d-1}; c_1..c_d} pair. Used for arrays read from
/// input before validation, and for derived arrays that may legitimately be
/// degenerate (a halved or folded graph can be complete, i.e. diameter 1).
struct RawArray {
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;

  int diameter() const { return static_cast<int>(b.size()); }
  std::int64_t degree() const { return b.empty() ? 0 : b.front(); }

  bool operator==(const RawArray&) const = default;

  std::string str() const
  {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << ';';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << '}';
    return out.str();
  }
};

/// A validated intersection array of diameter d >= 2.
///
/// Accessors extend the sequences with the usual conventions: b_d = 0,
/// c_0 = 0, and (for `c_ext`) c_{d+1} = k.
class IntersectionArray {
 public:
  struct Violation {
    ErrorCode code;
    std::string message;
  };

  /// First failed type invariant, in a fixed order: shape, diameter,
  /// positivity, c_1 = 1, monotonicity of b and c, nonnegativity of a_i.
  static std::optional<Violation> first_violation(const RawArray& raw)
  {
    auto bad = [](std::string m) { return Violation{ErrorCode::InvalidArray, std::move(m)}; };
    if (raw.b.size() != raw.c.size())
      return bad("b and c must have equal length (got " + std::to_string(raw.b.size()) + " and " +
                 std::to_string(raw.c.size()) + ")");
    if (raw.b.size() < 2) return bad("diameter must be at least 2 (complete graphs are not accepted)");
    for (std::size_t i = 0; i < raw.b.size(); ++i) {
      if (raw.b[i] <= 0) return bad("b_" + std::to_string(i) + " must be positive");
      if (raw.c[i] <= 0) return bad("c_" + std::to_string(i + 1) + " must be positive");
    }
    if (raw.c[0] != 1) return bad("c_1 must equal 1");
    for (std::size_t i = 0; i + 1 < raw.b.size(); ++i) {
      if (raw.b[i + 1] > raw.b[i])
        return bad("b must be non-increasing (b_" + std::to_string(i + 1) + " > b_" + std::to_string(i) + ")");
      if (raw.c[i + 1] < raw.c[i])
        return bad("c must be non-decreasing (c_" + std::to_string(i + 2) + " < c_" + std::to_string(i + 1) + ")");
    }
    const std::int64_t k = raw.b[0];
    const std::size_t d = raw.b.size();
    for (std::size_t i = 0; i <= d; ++i) {
      std::int64_t bi = i < d ? raw.b[i] : 0;
      std::int64_t ci = i > 0 ? raw.c[i - 1] : 0;
      if (k - bi - ci < 0)
        return Violation{ErrorCode::NegativeA,
                         "a_" + std::to_string(i) + " = " + std::to_string(k - bi - ci) + " is negative"};
    }
    return std::nullopt;
  }

  explicit IntersectionArray(RawArray raw) : raw_(std::move(raw))
  {
    if (auto v = first_violation(raw_)) fail(v->code, v->message + " in " + raw_.str());
  }

  IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
      : IntersectionArray(RawArray{std::move(b), std::move(c)})
  {}

  int diameter() const { return raw_.diameter(); }
  std::int64_t k() const { return raw_.b[0]; }

  std::int64_t b(int i) const { return i < diameter() ? raw_.b.at(static_cast<std::size_t>(i)) : 0; }
  std::int64_t c(int i) const { return i == 0 ? 0 : raw_.c.at(static_cast<std::size_t>(i - 1)); }
  std::int64_t c_ext(int i) const { return i == diameter() + 1 ? k() : c(i); }
  std::int64_t a(int i) const { return k() - b(i) - c(i); }

  const RawArray& raw() const { return raw_; }
  std::string str() const { return raw_.str(); }

  bool operator==(const IntersectionArray& other) const { return raw_ == other.raw_; }

 private:
  RawArray raw_;
};

/// J(m, d): b_i = (d-i)(m-d-i), c_{i+1} = (i+1)^2.
inline IntersectionArray johnson_array(std::int64_t m, std::int64_t d)
{
  if (d < 2 || m < 2 * d + 1)
    fail(ErrorCode::DomainError, "johnson_array needs d >= 2 and m >= 2d+1 (got m=" + std::to_string(m) +
                                     ", d=" + std::to_string(d) + ")");
  RawArray raw;
  for (std::int64_t i = 0; i < d; ++i) {
    raw.b.push_back((d - i) * (m - d - i));
    raw.c.push_back((i + 1) * (i + 1));
  }
  return IntersectionArray(std::move(raw));
}

/// H(d, m): b_i = (d-i)(m-1), c_{i+1} = i+1.
inline IntersectionArray hamming_array(std::int64_t d, std::int64_t m)
{
  if (m < 2 || d < 1)
    fail(ErrorCode::DomainError, "hamming_array needs m >= 2 and d >= 1 (got d=" + std::to_string(d) +
                                     ", m=" + std::to_string(m) + ")");
  if (d == 1) fail(ErrorCode::DomainError, "H(1, m) is the complete graph K_m; diameter-1 arrays are not accepted");
  RawArray raw;
  for (std::int64_t i = 0; i < d; ++i) {
    raw.b.push_back((d - i) * (m - 1));
    raw.c.push_back(i + 1);
  }
  return IntersectionArray(std::move(raw));
}

/// Complete multipartite K_{m x 2}: {2m-2, 1; 1, 2m-2}.
inline IntersectionArray cocktail_party_array(std::int64_t m)
{
  if (m < 2) fail(ErrorCode::DomainError, "cocktail_party_array needs m >= 2 (got " + std::to_string(m) + ")");
  return IntersectionArray({2 * m - 2, 1}, {1, 2 * m - 2});
}

}  // namespace drg

#endif  // DRG_INTERSECTION_ARRAY_HPP
