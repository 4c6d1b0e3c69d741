#include "twisted/cohomology.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace twisted;

namespace {

// Degree-d monomials in m+1 variables, counted by a stars-and-bars recursion.
Integer count_monomials(std::int64_t vars, std::int64_t d) {
  if (d < 0) return 0;
  if (vars == 1) return 1;
  Integer s = 0;
  for (std::int64_t e = 0; e <= d; ++e) s += count_monomials(vars - 1, d - e);
  return s;
}

// (d+1)(d+2)...(d+m)/m!, valid for every integer d.
Rational euler_polynomial(std::int64_t m, std::int64_t d) {
  Rational v = 1;
  for (std::int64_t i = 1; i <= m; ++i) v *= Rational(d + i) / Rational(i);
  return v;
}

}  // namespace

TEST(LineBundleCohomology, Examples) {
  EXPECT_EQ(h(2, 3, 0), 10);
  EXPECT_EQ(h(2, 3, 0), count_monomials(3, 3));
  for (std::int64_t q = 0; q <= 1; ++q) EXPECT_EQ(h(1, -1, q), 0);
  EXPECT_EQ(h(2, -4, 2), 3);
  EXPECT_EQ(h(1, -2, 1), 1);
  EXPECT_EQ(h(LineBundle{3, 0}, 0), 1);
}

TEST(LineBundleCohomology, GlobalSectionsCountMonomials) {
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t d = -3; d <= 8; ++d) EXPECT_EQ(h(m, d, 0), count_monomials(m + 1, d)) << m << ' ' << d;
}

TEST(LineBundleCohomology, OutOfRange) {
  EXPECT_THROW(h(2, 0, 3), domain_error);
  EXPECT_THROW(h(2, 0, -1), domain_error);
  EXPECT_THROW(h(0, 0, 0), domain_error);
}

TEST(LineBundleCohomology, EulerCharacteristicIsPolynomial) {
  for (std::int64_t m = 1; m <= 5; ++m) {
    for (std::int64_t d = -20; d <= 20; ++d) {
      Integer chi = 0;
      for (std::int64_t q = 0; q <= m; ++q) chi += (q % 2 == 0 ? 1 : -1) * h(m, d, q);
      EXPECT_EQ(Rational(chi), euler_polynomial(m, d)) << m << ' ' << d;
    }
  }
}

TEST(LineBundleCohomology, SerreDuality) {
  // K = O(-m-1).
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t d = -15; d <= 15; ++d)
      for (std::int64_t q = 0; q <= m; ++q) EXPECT_EQ(h(m, d, q), h(m, -d - m - 1, m - q));
}

TEST(RightScan, Examples) {
  EXPECT_EQ(right_vanishing_scan({2, 2}, -3, 10).n0, 1);
  EXPECT_EQ(right_vanishing_scan({2, 2}, 0, 10).n0, 0);
  EXPECT_EQ(right_vanishing_scan({1, 3}, -10, 10).n0, 3);
}

TEST(RightScan, StartMovesLaterAsTwistDrops) {
  std::int64_t prev = 0;
  for (std::int64_t t = 0; t >= -40; --t) {
    const auto res = right_vanishing_scan({1, 2}, t, 12);
    ASSERT_TRUE(res.n0) << t;
    EXPECT_GE(*res.n0, prev);
    // Independent check: every later degree has no h^1.
    for (std::int64_t n = *res.n0; n <= 12; ++n) EXPECT_EQ(h(1, t + twist_degree(2, n), 1), 0);
    if (*res.n0 > 0) {
      EXPECT_NE(h(1, t + twist_degree(2, *res.n0 - 1), 1), 0);
    }
    prev = *res.n0;
  }
}

TEST(RightScan, Errors) {
  EXPECT_THROW(right_vanishing_scan({1, 1}, 0, 5), domain_error);
  EXPECT_THROW(right_vanishing_scan({1, 2}, 0, -1), domain_error);
}

TEST(LeftScan, Examples) {
  const auto neg = left_vanishing_scan({1, 2}, -2, 20);
  EXPECT_EQ(neg.verdict, LeftScanVerdict::NonVanishing);
  EXPECT_EQ(neg.witness_q, 1);
  for (std::int64_t n = 0; n <= 20; ++n) {
    const Integer degree = twist_degree(2, n) + ipow(Integer(2), n) * -2;
    EXPECT_EQ(h(1, degree, 1), ipow(Integer(2), n));
  }

  EXPECT_EQ(left_vanishing_scan({1, 2}, 0, 20).verdict, LeftScanVerdict::Vanishing);

  const auto p2 = left_vanishing_scan({2, 3}, -1, 12);
  EXPECT_EQ(p2.verdict, LeftScanVerdict::NonVanishing);
  EXPECT_EQ(p2.witness_q, 2);
}

TEST(LeftScan, NegativeTwistNeverVanishesBelowMinusOne) {
  // e_n + r^n t <= -m-1 for t <= -1 whenever r^n (-t) - e_n >= m + 1.
  for (std::int64_t r : {2, 3, 5})
    for (std::int64_t t = -5; t <= -2; ++t)
      EXPECT_EQ(left_vanishing_scan({1, r}, t, 10).verdict, LeftScanVerdict::NonVanishing);
}

TEST(CohomologyTable, CsvLayout) {
  const auto res = right_vanishing_scan({1, 2}, -2, 1);
  std::ostringstream os;
  res.table.write_csv(os);
  EXPECT_EQ(os.str(), "n,degree,q,h\n0,-2,0,0\n0,-2,1,1\n1,-1,0,0\n1,-1,1,0\n");
}
