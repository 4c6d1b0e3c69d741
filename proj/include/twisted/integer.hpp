#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twisted {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an argument violates an operation's precondition.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an enumeration would exceed its configured size budget.
class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded(const std::string& what, std::int64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  /// Last index that completed before the budget check failed.
  std::int64_t reached() const noexcept { return reached_; }

private:
  std::int64_t reached_;
};

inline Integer ipow(Integer base, std::uint64_t exp) {
  Integer result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

inline Rational rpow(Rational base, std::uint64_t exp) {
  Rational result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

/// C(n, k) for integer n and small k >= 0; zero when n < k and n >= 0.
/// For negative n the generalized binomial n(n-1)...(n-k+1)/k! is returned.
inline Integer binomial(const Integer& n, std::uint64_t k) {
  if (n >= 0 && n < k) return 0;
  Integer num = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= (n - i);
    num /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return num;
}

/// a / b as a rational. Negative denominators are flipped first: the
/// two-argument cpp_rational constructor rejects them in Boost 1.74.
inline Rational ratio(Integer a, Integer b) {
  if (b == 0) throw domain_error("rational with zero denominator");
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return Rational(a, b);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_of(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x),
                   boost::multiprecision::denominator(x));
}

inline Integer ceil_of(const Rational& x) { return -floor_of(-x); }

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  if (is_integral(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

inline double to_double(const Rational& x) {
  return static_cast<double>(x);
}

}  // namespace twisted
