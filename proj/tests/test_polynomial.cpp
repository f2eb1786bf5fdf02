#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "dlakit/errors.hpp"
#include "dlakit/polynomial.hpp"
#include "dlakit/structure.hpp"

using namespace dlakit;

namespace {

// Exact determinant of a small rational matrix by elimination.
Rational det(std::vector<std::vector<Rational>> m) {
  const std::size_t k = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

}  // namespace

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial x = Polynomial::monomial(1);
  const Polynomial p = x * x * x - Polynomial({0, 2});
  EXPECT_EQ(p.str(), "x^3 - 2x");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p(Rational(2)), 4);
  EXPECT_DOUBLE_EQ(p(0.5), 0.125 - 1.0);
}

TEST(Polynomial, RecursionMatchesExplicitSum) {
  const PolySequence seq = poly_recursive(21);
  EXPECT_TRUE(seq.a(-1).is_zero());
  for (int k = 0; k <= 20; ++k) EXPECT_EQ(seq.a(k), poly_explicit(k)) << k;
}

TEST(Polynomial, LowOrderExamples) {
  const PolySequence seq = poly_recursive(5);
  EXPECT_EQ(seq.a(0), Polynomial({1}));
  EXPECT_EQ(seq.a(1), Polynomial({0, 1}));
  EXPECT_EQ(seq.a(2), Polynomial({-1, 0, 1}));
  EXPECT_EQ(seq.a(3), Polynomial({0, -2, 0, 1}));
  EXPECT_EQ(seq.a(4), Polynomial({1, 0, -3, 0, 1}));
}

TEST(Polynomial, ParityAndLeadingCoefficient) {
  const PolySequence seq = poly_recursive(16);
  for (int k = 0; k <= 15; ++k) {
    const Polynomial& p = seq.a(k);
    EXPECT_EQ(p.degree(), k);
    EXPECT_EQ(p.coeff(k), 1);
    for (int i = 0; i <= k; ++i) {
      if ((k - i) % 2 != 0) EXPECT_EQ(p.coeff(i), 0) << k << " " << i;
    }
  }
}

TEST(Polynomial, EqualsCharacteristicPolynomialOfTridiagonal) {
  // det(lambda I - A_k) at k+1 points determines a degree-k polynomial.
  for (int k = 1; k <= 10; ++k) {
    const auto a = tridiagonal(k);
    const Polynomial p = poly_explicit(k);
    for (int t = 0; t <= k; ++t) {
      const Rational lam = Rational(2 * t - k) / 3;
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = (i == j ? lam : Rational(0)) - Rational(a[i][j]);
      }
      EXPECT_EQ(det(m), p(lam)) << k << " at " << lam;
    }
  }
}

TEST(Polynomial, TridiagonalShape) {
  const auto a = tridiagonal(3);
  const std::vector<std::vector<int>> expected = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  EXPECT_EQ(a, expected);
}

TEST(Polynomial, ValuesFollowRecursion) {
  const auto v = poly_values(6, Rational(1, 2));
  const PolySequence seq = poly_recursive(6);
  ASSERT_EQ(v.size(), 7u);
  for (int k = -1; k <= 5; ++k) EXPECT_EQ(v[k + 1], seq.a(k)(Rational(1, 2)));
}

TEST(Roots, MatchDenseEigenSolverAndCosineFormula) {
  for (int n = 3; n <= 24; ++n) {
    const int k = n - 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i + 1 < k; ++i) a(i, i + 1) = a(i + 1, i) = 1;
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    const RootSet rs = roots(n);
    ASSERT_EQ(rs.roots.size(), static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      EXPECT_NEAR(rs.roots[j].value, ev[j], 1e-12) << n;
      const double cosine = 2 * std::cos((k - j) * std::numbers::pi / n);
      EXPECT_NEAR(rs.roots[j].value, cosine, 1e-12) << n;
      EXPECT_LT(std::abs(poly_values(n, rs.roots[j].value).back()), 1e-9);
    }
  }
}

TEST(Roots, IntegerRootsAreExact) {
  const RootSet r3 = roots(3);
  ASSERT_EQ(r3.roots.size(), 2u);
  EXPECT_EQ(r3.roots[0].exact, -1);
  EXPECT_EQ(r3.roots[1].exact, 1);

  const RootSet r4 = roots(4);
  ASSERT_EQ(r4.roots.size(), 3u);
  EXPECT_NEAR(r4.roots[0].value, -std::sqrt(2.0), 1e-15);
  EXPECT_EQ(r4.roots[1].exact, 0);
  EXPECT_FALSE(r4.roots[2].exact);

  const RootSet r6 = roots(6);
  int exact = 0;
  for (const auto& r : r6.roots) exact += r.exact.has_value();
  EXPECT_EQ(exact, 3);  // -1, 0, 1
}

TEST(Roots, SymmetricWithZeroIffEven) {
  for (int n = 3; n <= 30; ++n) {
    const RootSet rs = roots(n);
    const std::size_t m = rs.roots.size();
    bool has_zero = false;
    for (std::size_t j = 0; j < m; ++j) {
      EXPECT_NEAR(rs.roots[j].value, -rs.roots[m - 1 - j].value, 1e-12);
      EXPECT_LT(std::abs(rs.roots[j].value), 2.0);
      has_zero = has_zero || rs.roots[j].value == 0.0;
      if (j > 0) EXPECT_GT(rs.roots[j].value - rs.roots[j - 1].value, rs.tol);
    }
    EXPECT_EQ(has_zero, n % 2 == 0) << n;
  }
}

TEST(Roots, RejectsSmallN) { EXPECT_THROW(roots(2), StructuralError); }

TEST(EigvectorCheck, RootsGiveEigenvectorsOthersDoNot) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& r : roots(n).roots) EXPECT_LT(eigvector_check(r.value, n), 1e-12) << n;
  }
  EXPECT_GT(eigvector_check(0.5, 3), 0.1);
  EXPECT_NEAR(eigvector_check(1.0, 3), 0.0, 1e-15);
}
