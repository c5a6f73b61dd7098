#ifndef DRG_NUMERIC_HPP
#define DRG_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace drg {

namespace bmp = boost::multiprecision;

// Expression templates are off: deduced-type lambdas and `auto` locals would
// otherwise capture references to temporaries.
using Integer = bmp::number<bmp::cpp_int_backend<>, bmp::et_off>;
using Rational = bmp::number<bmp::cpp_rational_backend, bmp::et_off>;
using Real50 = bmp::number<bmp::cpp_bin_float<50>, bmp::et_off>;
using Real100 = bmp::number<bmp::cpp_bin_float<100>, bmp::et_off>;
using Real300 = bmp::number<bmp::cpp_bin_float<300>, bmp::et_off>;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& r) { return r.convert_to<double>(); }
inline long double to_long_double(const Integer& r) { return r.convert_to<long double>(); }

// Exact rational value of a finite binary float.
inline Rational exact_rational(double x)
{
  if (!std::isfinite(x)) throw std::domain_error("exact_rational: non-finite value");
  return Rational(x);
}

inline Rational exact_rational(const Real50& x) { return x.convert_to<Rational>(); }

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& r) { return r.str(); }

// Decimal only: Boost reads a leading 0 as an octal prefix.
inline Integer parse_integer(std::string text)
{
  std::string sign;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    if (text[0] == '-') sign = "-";
    text.erase(0, 1);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not an integer: '" + sign + text + "'");
  const auto first = text.find_first_not_of('0');
  return first == std::string::npos ? Integer(0) : Integer(sign + text.substr(first));
}

// Parses "p/q", "p", or a decimal such as "0.125" into an exact rational.
inline Rational parse_rational(const std::string& text)
{
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_integer(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Integer scale = pow(Integer(10), static_cast<unsigned>(text.size() - dot - 1));
  return Rational(parse_integer(digits), scale);
}

inline Rational rational_pow(const Rational& base, unsigned e)
{
  return Rational(pow(numerator(base), e), pow(denominator(base), e));
}

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

inline int exact_log2(std::int64_t x)
{
  int r = 0;
  while (x > 1) {
    x >>= 1;
    ++r;
  }
  return r;
}

// floor(f(T)) where f is evaluated at increasing precision until the value
// is at least `guard` away from an integer. Throws if it never separates.
template <class Fn>
Integer stable_floor(Fn&& f, double guard = 1e-6)
{
  auto attempt = [&](auto tag, Integer& out) {
    using T = decltype(tag);
    T v = f(tag);
    T fl = floor(v);
    T frac = v - fl;
    if (frac > T(guard) && frac < T(1) - T(guard)) {
      out = fl.template convert_to<Integer>();
      return true;
    }
    return false;
  };
  Integer out;
  if (attempt(Real50{}, out)) return out;
  if (attempt(Real100{}, out)) return out;
  if (attempt(Real300{}, out)) return out;
  throw std::runtime_error("stable_floor: value indistinguishable from an integer at 300 bits");
}

}  // namespace drg

#endif  // DRG_NUMERIC_HPP
