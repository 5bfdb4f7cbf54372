#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace twh {

// et_off: arithmetic yields plain values, never expression templates, so
// auto-deduced intermediates and test-macro captures cannot dangle.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Thrown when a computation would exceed its declared work budget
// (enumeration product count, solver size caps, ...).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an eigenvalue collision between dominance-comparable
// partitions makes the triangular eigenvector solve impossible.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1); n = 0 gives 1.
inline BigInt double_factorial_odd(int n) {
  if (n < 0) throw std::invalid_argument("double_factorial_odd: negative argument");
  BigInt r = 1;
  for (int i = 3; i <= 2 * n - 1; i += 2) r *= i;
  return r;
}

// x^k for k >= 0, with the convention 0^0 = 1.
inline Rational pow_rational(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("pow_rational: negative exponent");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// "p" or "p/q"; q must be nonzero.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> BigInt {
    try {
      if (s.empty()) throw std::runtime_error("empty");
      return BigInt(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("not a rational: '" + text + "' (zero denominator)");
  return Rational(num, den);
}

// Integers render bare ("4", "-3"); everything else as "num/den".
inline std::string format_rational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace twh
