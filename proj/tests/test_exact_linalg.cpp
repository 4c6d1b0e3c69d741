#include "twisted/exact_linalg.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace twisted;

namespace {

// Laplace expansion of det(xI - P) with polynomial entries; independent of
// the Faddeev-LeVerrier route.
IntPolynomial laplace_char_poly(const std::vector<std::vector<IntPolynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  IntPolynomial acc;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    IntPolynomial term = a[0][j] * laplace_char_poly(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

IntPolynomial oracle_char_poly(const IntMatrix& p) {
  std::vector<std::vector<IntPolynomial>> a(p.dim(), std::vector<IntPolynomial>(p.dim()));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      a[i][j] = i == j ? IntPolynomial{-p(i, j), 1} : IntPolynomial{-p(i, j)};
  return laplace_char_poly(a);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

std::vector<std::complex<double>> float_eigenvalues(const IntMatrix& p) {
  Eigen::MatrixXd a(p.dim(), p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) a(i, j) = static_cast<double>(p(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

}  // namespace

TEST(CharPoly, SmallExamples) {
  EXPECT_EQ(char_poly(IntMatrix{{2}}), (IntPolynomial{-2, 1}));
  EXPECT_EQ(char_poly(IntMatrix::identity(2)), (IntPolynomial{1, -2, 1}));
  EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {1, 0}}), (IntPolynomial{1, 0, 1}));
}

TEST(CharPoly, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix p = random_matrix(rng, n, -9, 9);
    ASSERT_EQ(char_poly(p), oracle_char_poly(p)) << p.str();
  }
}

TEST(CharPoly, Determinant) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 1);
}

TEST(Rank, FractionFree) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(rank(IntMatrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 2u);
  EXPECT_EQ(rank(IntMatrix{{2, 3, 5}, {4, 6, 10}, {1, 1, 1}}), 2u);
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), (IntPolynomial{1, 0, -1, 0, 1}));
  for (std::size_t d = 1; d <= 30; ++d) EXPECT_EQ(cyclotomic(d).degree(), static_cast<std::ptrdiff_t>(euler_phi(d)));
}

TEST(SpectralRadius, Examples) {
  const Rational w(1, 1000000000);
  EXPECT_EQ(spectral_radius_interval(IntMatrix{{2}}, w), (RationalInterval{2, 2}));
  EXPECT_EQ(spectral_radius_interval(IntMatrix::identity(3), w), (RationalInterval{1, 1}));

  const auto golden = spectral_radius_interval(IntMatrix{{1, 1}, {1, 0}}, w);
  EXPECT_LE(golden.width(), w);
  // x^2 - x - 1 is negative left of the root and positive right of it.
  EXPECT_LT(golden.lo * golden.lo - golden.lo - 1, 0);
  EXPECT_GE(golden.hi * golden.hi - golden.hi - 1, 0);
  EXPECT_NEAR(to_double(golden.lo), (1 + std::sqrt(5.0)) / 2, 1e-9);
}

TEST(SpectralRadius, ModulusNotJustLargestRealRoot) {
  // The only eigenvalue is -2; the radius is its modulus.
  EXPECT_EQ(spectral_radius_interval(IntMatrix{{-2}}), (RationalInterval{2, 2}));
  // Rotation by 90 degrees scaled by 2: eigenvalues +-2i.
  EXPECT_EQ(spectral_radius_interval(IntMatrix{{0, -2}, {2, 0}}), (RationalInterval{2, 2}));
  // Eigenvalues +-sqrt(2).
  const auto r = spectral_radius_interval(IntMatrix{{0, 2}, {1, 0}});
  EXPECT_LT(r.lo * r.lo, 2);
  EXPECT_GT(r.hi * r.hi, 2);
}

TEST(SpectralRadius, RejectsSingular) {
  EXPECT_THROW(spectral_radius_interval(IntMatrix{{1, 2}, {2, 4}}), domain_error);
  EXPECT_THROW(spectral_radius_interval(IntMatrix{{2}}, Rational(0)), domain_error);
}

TEST(SpectralRadius, PropertiesOnRandomMatrices) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix p = random_matrix(rng, 2 + trial % 2, -3, 3);
    if (determinant(p) == 0) continue;
    const Rational w(1, 1000000);
    const auto r = spectral_radius_interval(p, w);
    ASSERT_LE(r.width(), w);
    // |det| >= 1 forces radius >= 1.
    EXPECT_GE(r.lo, 1 - w) << p.str();

    double radius = 0;
    for (auto lambda : float_eigenvalues(p)) radius = std::max(radius, std::abs(lambda));
    EXPECT_GE(radius, to_double(r.lo) - 1e-6) << p.str();
    EXPECT_LE(radius, to_double(r.hi) + 1e-6) << p.str();

    if (is_quasi_unipotent(p)) {
      EXPECT_TRUE(r.contains(1)) << p.str();
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(LargestRealRoot, SturmCertification) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix p = random_matrix(rng, 2 + trial % 3, -4, 4);
    const IntPolynomial cp = char_poly(p);
    const Rational w(1, 1000000000);
    const auto root = largest_real_root_interval(cp, w);
    const auto roots = float_eigenvalues(p);
    bool has_real = false;
    for (auto l : roots) has_real |= std::abs(l.imag()) < 1e-7;
    if (!root) {
      EXPECT_FALSE(has_real) << p.str();
      continue;
    }
    ASSERT_LE(root->width(), w);
    const RatPolynomial sq = squarefree_part(to_rational(cp));
    if (root->is_point()) {
      EXPECT_EQ(cp(root->lo), 0);
    } else {
      EXPECT_LE(sq(root->lo) * sq(root->hi), 0) << p.str();
    }
    EXPECT_EQ(SturmSequence(sq).count_roots_above(root->hi), 0u) << p.str();
  }
}

TEST(LargestRealRoot, NoRealRoot) {
  EXPECT_FALSE(largest_real_root_interval(IntPolynomial{1, 0, 1}, Rational(1, 1000)).has_value());
  const auto r = largest_real_root_interval(IntPolynomial{-6, 1, 1}, Rational(1, 1000));  // (x+3)(x-2)
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (RationalInterval{2, 2}));
}

TEST(QuasiUnipotent, Examples) {
  EXPECT_TRUE(is_quasi_unipotent(IntMatrix::identity(2)));
  EXPECT_TRUE(is_quasi_unipotent(IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_FALSE(is_quasi_unipotent(IntMatrix{{2}}));
  EXPECT_TRUE(is_quasi_unipotent(IntMatrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_quasi_unipotent(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));  // Phi_1 Phi_3
  EXPECT_FALSE(is_quasi_unipotent(IntMatrix{{2, 1}, {1, 1}}));                   // unit det, not QU
  EXPECT_FALSE(is_quasi_unipotent(IntMatrix{{3, 0}, {0, 1}}));                   // |det| > 1
}

TEST(QuasiUnipotent, AgreesWithFloatOracle) {
  std::mt19937_64 rng(3);
  int qu = 0, total = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const IntMatrix p = random_matrix(rng, 2 + trial % 2, -2, 2);
    if (determinant(p) == 0) continue;
    bool unit_circle = true;
    for (auto lambda : float_eigenvalues(p)) unit_circle &= std::abs(std::abs(lambda) - 1) < 1e-6;
    ASSERT_EQ(is_quasi_unipotent(p), unit_circle) << p.str();
    qu += unit_circle;
    ++total;
  }
  EXPECT_GT(qu, 5);
  EXPECT_GT(total - qu, 5);
}

TEST(JordanGrowth, Examples) {
  EXPECT_EQ(jordan_growth_exponent(IntMatrix{{2}}, 2), 0u);
  EXPECT_EQ(jordan_growth_exponent(IntMatrix{{1, 1}, {0, 1}}, 1), 1u);
  EXPECT_EQ(jordan_growth_exponent(IntMatrix{{2, 1}, {0, 2}}, 2), 1u);
  EXPECT_EQ(jordan_growth_exponent(IntMatrix{{3, 1, 0}, {0, 3, 1}, {0, 0, 3}}, 3), 2u);
  EXPECT_EQ(jordan_growth_exponent(IntMatrix{{3, 1, 0}, {0, 3, 0}, {0, 0, 3}}, 3), 1u);
  EXPECT_THROW(jordan_growth_exponent(IntMatrix{{2}}, 3), domain_error);
}

TEST(JordanGrowth, InvariantUnderUnimodularSimilarity) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coin(0, 2), mult(-2, 2), pick(0, 2);
  for (int trial = 0; trial < 80; ++trial) {
    // Upper triangular with integer diagonal so the eigenvalue is known.
    IntMatrix p(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) p(i, j) = (i == j) ? 1 + coin(rng) : coin(rng) - 1;
    const Integer r = p(0, 0);
    // Q and its inverse as products of elementary row operations.
    IntMatrix q = IntMatrix::identity(3), qinv = IntMatrix::identity(3);
    for (int step = 0; step < 4; ++step) {
      std::size_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const int k = mult(rng);
      IntMatrix e = IntMatrix::identity(3), einv = IntMatrix::identity(3);
      e(a, b) = k;
      einv(a, b) = -k;
      q = e * q;
      qinv = qinv * einv;
    }
    ASSERT_EQ(q * qinv, IntMatrix::identity(3));
    const IntMatrix conj = q * p * qinv;
    EXPECT_EQ(jordan_growth_exponent(conj, r), jordan_growth_exponent(p, r)) << p.str();
  }
}
