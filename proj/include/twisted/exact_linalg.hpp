#pragma once

// Exact integer/rational matrix computations used by the divisor dynamics:
// characteristic polynomials, certified spectral radius enclosures,
// quasi-unipotence and Jordan block sizes for integer eigenvalues.

#include "twisted/integer.hpp"
#include "twisted/polynomial.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace twisted {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw domain_error("matrix must be square");
      std::size_t j = 0;
      for (long long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw domain_error("matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix scalar(std::size_t dim, const Integer& s) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = s;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix z(x.dim_);
    for (std::size_t i = 0; i < x.dim_; ++i)
      for (std::size_t k = 0; k < x.dim_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < x.dim_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
  }
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    check_same(x, y);
    IntMatrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
  }

  std::vector<Integer> apply(std::span<const Integer> v) const {
    if (v.size() != dim_) throw domain_error("dimension mismatch in matrix-vector product");
    std::vector<Integer> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < dim_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

private:
  static void check_same(const IntMatrix& x, const IntMatrix& y) {
    if (x.dim_ != y.dim_) throw domain_error("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Integer> a_;
};

/// Kronecker product; eigenvalues of kron(P, P) are the pairwise products.
inline IntMatrix kronecker(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.dim(), k = y.dim();
  IntMatrix z(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) z(i * k + a, j * k + b) = x(i, j) * y(a, b);
  return z;
}

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// det(xI - P) by the Faddeev-LeVerrier recurrence. Every division in the
/// recurrence is exact over the integers.
inline IntPolynomial char_poly(const IntMatrix& p) {
  const std::size_t n = p.dim();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = p * m + IntMatrix::scalar(n, c[n - k + 1]);
    c[n - k] = -(p * m).trace() / Integer(k);
  }
  return IntPolynomial(std::move(c));
}

inline Integer determinant(const IntMatrix& p) {
  auto cp = char_poly(p);
  Integer c0 = cp[0];
  return (p.dim() % 2 == 0) ? c0 : Integer(-c0);
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
inline std::size_t rank(const IntMatrix& p) {
  const std::size_t n = p.dim();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = p(i, j);

  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

namespace detail {

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

/// Bisection on a squarefree polynomial. Keeps the invariant that the
/// largest real root lies in (lo, hi] and none lies above hi.
inline std::optional<RationalInterval> isolate_largest_root(const RatPolynomial& sqfree,
                                                            const Rational& width) {
  if (sqfree.degree() < 1) return std::nullopt;
  SturmSequence sturm(sqfree);
  if (sturm.count_real_roots() == 0) return std::nullopt;

  const Rational bound = cauchy_root_bound(sqfree);
  Rational lo = -bound, hi = bound;
  while (hi - lo > width) {
    Rational mid = midpoint(lo, hi);
    if (sturm.count_roots(mid, hi) >= 1) {
      lo = mid;
    } else if (sqfree(mid) == 0) {
      return RationalInterval{mid, mid};
    } else {
      hi = mid;
    }
  }
  // Monic integer inputs only have integral rational roots; catch them exactly.
  for (Integer k = ceil_of(lo); k <= floor_of(hi); ++k) {
    Rational rk(k);
    if (sqfree(rk) == 0 && sturm.count_roots_above(rk) == 0) return RationalInterval{rk, rk};
  }
  if (sqfree(hi) == 0) return RationalInterval{hi, hi};
  return RationalInterval{lo, hi};
}

/// Rational s with s*s <= x and x - s*s small; x >= 0.
inline Rational sqrt_lower(const Rational& x, const Rational& tol) {
  Rational lo = 0, hi = x > 1 ? x : Rational(1);
  while (hi - lo > tol) {
    Rational mid = midpoint(lo, hi);
    (mid * mid <= x ? lo : hi) = mid;
  }
  return lo;
}

inline Rational sqrt_upper(const Rational& x, const Rational& tol) {
  Rational lo = 0, hi = x > 1 ? x : Rational(1);
  while (hi - lo > tol) {
    Rational mid = midpoint(lo, hi);
    (mid * mid >= x ? hi : lo) = mid;
  }
  return hi;
}

inline std::optional<Integer> exact_isqrt(const Integer& x) {
  if (x < 0) return std::nullopt;
  Integer s = boost::multiprecision::sqrt(x);
  if (s * s == x) return s;
  return std::nullopt;
}

}  // namespace detail

inline const Rational& default_radius_width() {
  static const Rational w(1, 1000000000);
  return w;
}

/// Certified enclosure of the largest real root of a polynomial, of width at
/// most `width`; a degenerate interval when that root is an integer.
/// Returns nullopt when there is no real root.
inline std::optional<RationalInterval> largest_real_root_interval(const IntPolynomial& p,
                                                                  const Rational& width) {
  if (width <= 0) throw domain_error("interval width must be positive");
  return detail::isolate_largest_root(squarefree_part(to_rational(p)), width);
}

/// Certified enclosure of the spectral radius max |lambda| of P.
///
/// The squared radius is the largest modulus among the real eigenvalues of
/// kron(P, P) (they are the products lambda_i * lambda_j and include
/// lambda * conj(lambda)), so it is isolated with Sturm sequences on that
/// characteristic polynomial and its reflection. When P preserves a cone
/// with nonempty interior this is also the largest real eigenvalue.
inline RationalInterval spectral_radius_interval(const IntMatrix& p,
                                                 const Rational& width = default_radius_width()) {
  if (width <= 0) throw domain_error("interval width must be positive");
  if (p.dim() == 0) throw domain_error("empty matrix");
  if (determinant(p) == 0) throw domain_error("spectral radius requested for a singular matrix");

  auto q = squarefree_part(to_rational(char_poly(kronecker(p, p))));
  auto both_signs = squarefree_part(q * q.reflected());
  // |det| >= 1 forces radius >= 1, so halving the width suffices for the root.
  auto sq = detail::isolate_largest_root(both_signs, width / 2);
  if (!sq) throw domain_error("internal: no real root for squared spectral radius");

  if (sq->is_point()) {
    if (is_integral(sq->lo)) {
      if (auto s = detail::exact_isqrt(boost::multiprecision::numerator(sq->lo)))
        return {Rational(*s), Rational(*s)};
    }
  }
  const Rational tol = width / 4;
  return {detail::sqrt_lower(sq->lo, tol), detail::sqrt_upper(sq->hi, tol)};
}

/// Phi_d for d >= 1, built from x^d - 1 = prod_{e | d} Phi_e.
inline IntPolynomial cyclotomic(std::size_t d) {
  if (d == 0) throw domain_error("cyclotomic index must be positive");
  IntPolynomial q = IntPolynomial::monomial(d) - IntPolynomial::constant(1);
  for (std::size_t e = 1; e < d; ++e)
    if (d % e == 0) q = divmod_monic(q, cyclotomic(e)).first;
  return q;
}

inline std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// True iff every eigenvalue of P is a root of unity, i.e. the
/// characteristic polynomial factors into cyclotomic polynomials (Kronecker).
inline bool is_quasi_unipotent(const IntMatrix& p) {
  IntPolynomial rest = char_poly(p);
  const std::size_t n = p.dim();
  if (n == 0) return true;
  if (abs(rest[0]) != 1) return false;
  // phi(d) >= sqrt(d / 2), so phi(d) <= n implies d <= 2 n^2.
  for (std::size_t d = 1; d <= 2 * n * n && rest.degree() > 0; ++d) {
    if (euler_phi(d) > n) continue;
    const IntPolynomial phi = cyclotomic(d);
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = divmod_monic(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
    }
  }
  return rest.degree() == 0;
}

/// Size of the largest Jordan block for the integer eigenvalue r, minus one.
/// Read off from the stabilisation point of rank((P - rI)^k).
inline std::size_t jordan_growth_exponent(const IntMatrix& p, const Integer& r) {
  if (char_poly(p)(r) != 0) throw domain_error("value " + r.str() + " is not an eigenvalue");
  const IntMatrix shifted = p - IntMatrix::scalar(p.dim(), r);
  IntMatrix power = shifted;
  std::size_t prev_rank = rank(power);
  for (std::size_t k = 1; k <= p.dim(); ++k) {
    power = power * shifted;
    std::size_t next_rank = rank(power);
    if (next_rank == prev_rank) return k - 1;
    prev_rank = next_rank;
  }
  return p.dim() - 1;
}

}  // namespace twisted
