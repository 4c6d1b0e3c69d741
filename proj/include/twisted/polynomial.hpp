#pragma once

#include "twisted/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twisted {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
template <class Coeff>
class Polynomial {
public:
  using coefficient_type = Coeff;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff value) { return Polynomial({std::move(value)}); }
  static Polynomial monomial(std::size_t degree, Coeff value = Coeff(1)) {
    std::vector<Coeff> c(degree + 1);
    c[degree] = std::move(value);
    return Polynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const noexcept { return c_; }
  const Coeff& leading() const { return c_.back(); }

  Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

  template <class X>
  X operator()(const X& x) const {
    X acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Coeff> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Coeff(i));
    return Polynomial(std::move(d));
  }

  /// p(-x).
  Polynomial reflected() const {
    std::vector<Coeff> d = c_;
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Coeff> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Coeff& s) {
    std::vector<Coeff> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Coeff& a = c_[k];
      if (a == 0) continue;
      const bool neg = a < 0;
      const Coeff mag = neg ? Coeff(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || k == 0) out += to_string(mag);
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

/// Euclidean division over the rationals.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                                      const RatPolynomial& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {RatPolynomial{}, a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational q = rem[k] / b.leading();
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b[i];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Division by a monic integer polynomial; both results stay integral.
inline std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a,
                                                            const IntPolynomial& b) {
  if (b.is_zero() || b.leading() != 1) throw domain_error("divisor must be monic");
  std::vector<Integer> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {IntPolynomial{}, a};
  std::vector<Integer> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    Integer q = rem[k];
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b[i];
  }
  rem.resize(db);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

inline RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return p;
  auto g = gcd(p, p.derivative());
  return monic(divmod(p, g).first);
}

/// Sturm chain of a squarefree polynomial. Counts distinct real roots on
/// half-open intervals (a, b].
class SturmSequence {
public:
  explicit SturmSequence(const RatPolynomial& p) {
    if (p.is_zero()) throw domain_error("Sturm sequence of the zero polynomial");
    chain_.push_back(p);
    chain_.push_back(p.derivative());
    while (!chain_.back().is_zero()) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      // Scaling by a positive constant does not change sign patterns.
      if (!r.is_zero()) r = r * Rational(1 / abs(r.leading()));
      chain_.push_back(-r);
    }
    chain_.pop_back();
  }

  const RatPolynomial& base() const { return chain_.front(); }

  std::size_t variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(q(x)));
    return count_changes(signs);
  }

  std::size_t variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sign(q.leading()));
    return count_changes(signs);
  }

  std::size_t variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      int s = sign(q.leading());
      signs.push_back(q.degree() % 2 == 0 ? s : -s);
    }
    return count_changes(signs);
  }

  /// Distinct real roots in (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }
  /// Distinct real roots in (a, +inf).
  std::size_t count_roots_above(const Rational& a) const {
    return variations_at(a) - variations_at_pos_inf();
  }
  std::size_t count_real_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
  }

private:
  static int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
  static std::size_t count_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  std::vector<RatPolynomial> chain_;
};

/// Cauchy bound: every root has modulus strictly below the result.
inline Rational cauchy_root_bound(const RatPolynomial& p) {
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i) {
    Rational q = abs(p[i] / p.leading());
    if (q > best) best = q;
  }
  return best + 1;
}

}  // namespace twisted
