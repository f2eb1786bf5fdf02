#include <gtest/gtest.h>

#include <cmath>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"
#include "dlakit/structure.hpp"

using namespace dlakit;

namespace {

PauliString P(const char* w) { return PauliString::parse(w); }

OperatorElement named(const DlaBasis& b, const std::string& name) { return b[*b.index_of(name)].element; }

}  // namespace

TEST(Center, SmallForms) {
  const DlaBasis b3(3);
  const CenterBasis c3 = center(3);
  EXPECT_EQ(c3.c1, named(b3, "Y1") + named(b3, "Z1") - named(b3, "X"));
  EXPECT_EQ(c3.c2, named(b3, "Y0") + named(b3, "Z0") + named(b3, "XX"));

  const DlaBasis b4(4);
  const CenterBasis c4 = center(4);
  EXPECT_EQ(c4.c1, named(b4, "Y1") + named(b4, "Z1") - named(b4, "X") + named(b4, "XX"));
  EXPECT_EQ(c4.c2, named(b4, "Y0") + named(b4, "Z0") + named(b4, "Y2") + named(b4, "Z2"));
}

TEST(Center, CommutesWithGeneratorsAndMatchesSolvedSystem) {
  for (int n = 3; n <= 10; ++n) {
    const CenterBasis c = center(n);
    const GeneratorSet g = generators(n);
    for (const auto* e : {&c.c1, &c.c2}) {
      EXPECT_TRUE(element_bracket(*e, g.x).empty()) << n;
      EXPECT_TRUE(element_bracket(*e, g.z0).empty()) << n;
    }
    const CenterBasis solved = center_by_solving(n);
    EXPECT_TRUE(span_equal({c.c1, c.c2}, {solved.c1, solved.c2})) << n;
    EXPECT_EQ(element_inner(c.c1, c.c2), 0);
  }
}

TEST(Center, SolutionConstraints) {
  for (int n = 3; n <= 10; ++n) {
    const DlaBasis b(n);
    const auto sols = commutant_solutions(n);
    ASSERT_EQ(sols.size(), 2u) << n;
    for (const auto& v : sols) {
      ASSERT_EQ(v.size(), b.size());
      for (int k = 0; k <= n - 2; ++k) {
        EXPECT_EQ(v[b.yz(k)], 0) << n;
        EXPECT_EQ(v[b.y(k)], v[b.z(k)]) << n;
      }
      for (int k = 0; k + 2 <= n - 2; ++k) EXPECT_EQ(v[b.z(k)], v[b.z(k + 2)]) << n;
      EXPECT_EQ(v[b.x()], -v[b.z(1)]) << n;
      EXPECT_EQ(v[b.xx()], v[b.z(n - 3)]) << n;
    }
  }
}

TEST(Ideal, ThreeSitesExact) {
  const DlaBasis b(3);
  const RootSet rs = roots(3);
  const Ideal id = make_ideal(rs.roots[1], 3);
  ASSERT_TRUE(id.exact);
  EXPECT_EQ(id.exact_lambda, 1);
  const auto& p = *id.exact;
  EXPECT_EQ(p.sx_tilde, named(b, "Y1") - named(b, "Z0") + named(b, "X") + named(b, "XX"));
  EXPECT_EQ(p.sy_tilde, named(b, "X") + named(b, "XX") + named(b, "Z0") - named(b, "Y1") +
                            Rational(2) * named(b, "Z1") - Rational(2) * named(b, "Y0"));
  EXPECT_EQ(p.zhat, named(b, "YZ0") + named(b, "YZ1"));
  EXPECT_EQ(element_inner(p.sx_tilde, p.sx_tilde), 4);
  EXPECT_EQ(element_inner(p.sy_tilde, p.sy_tilde), 12);
  EXPECT_EQ(*id.exact_sx_tilde_norm_sq, 4);
  EXPECT_EQ(*id.exact_sy_tilde_norm_sq, 12);

  const IdealVerdict v = verify_ideal(id, generators(3));
  EXPECT_TRUE(v.passed());
  for (const auto& c : v.checks) {
    if (c.name.find("hat,") != std::string::npos) EXPECT_TRUE(c.exact) << c.name;
  }
}

TEST(Ideal, ThreeSitesNegativeRoot) {
  const Ideal id = make_ideal(roots(3).roots[0], 3);
  ASSERT_TRUE(id.exact);
  EXPECT_EQ(id.exact_lambda, -1);
  EXPECT_TRUE(verify_ideal(id, generators(3)).passed());
}

TEST(Ideal, DecomposePassesEverywhere) {
  for (int n = 3; n <= 10; ++n) {
    const StructureReport r = decompose(n);
    EXPECT_TRUE(r.all_passed) << n;
    EXPECT_EQ(r.dimension, static_cast<std::size_t>(3 * n - 1));
    EXPECT_EQ(r.ideals.size(), static_cast<std::size_t>(n - 1));
    for (const auto& v : r.verdicts) EXPECT_LT(v.max_residual(), kResidualTol) << n;
  }
}

TEST(Ideal, NormFormulas) {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& r : roots(n).roots) {
      const Ideal id = make_ideal(r, n);
      const double nx = element_inner(id.parts.sx_tilde, id.parts.sx_tilde);
      const double ny = element_inner(id.parts.sy_tilde, id.parts.sy_tilde);
      EXPECT_NEAR(nx, id.sx_tilde_norm_sq, 1e-10 * std::max(1.0, nx));
      EXPECT_NEAR(ny, id.sy_tilde_norm_sq, 1e-10 * std::max(1.0, ny));
    }
  }
}

TEST(Ideal, PerturbedLambdaFails) {
  const int n = 6;
  const GeneratorSet g = generators(n);
  const CenterBasis c = center(n);
  for (const auto& r : roots(n).roots) {
    const Ideal off = make_ideal(r.value + 1e-3, n);
    const IdealVerdict v = verify_ideal(off, g, c);
    EXPECT_FALSE(v.passed());
    EXPECT_GT(v.max_residual(), 1e-4);
  }
}

TEST(Ideal, FlippedSignBreaksFrame) {
  const Ideal id = make_ideal(roots(5).roots[2], 5);
  const auto good = su2_residuals(id.sx, id.sy, id.sz);
  for (double r : good) EXPECT_LT(r, 1e-10);
  const auto bad = su2_residuals(-id.sx, id.sy, id.sz);
  EXPECT_GT(bad[0], 0.1);
}

TEST(Ideal, LambdaGuard) {
  EXPECT_THROW(make_ideal(2.0, 5), StructuralError);
  EXPECT_THROW(make_ideal(-2.0 + 1e-10, 5), StructuralError);
  EXPECT_NO_THROW(make_ideal(1.9, 5));
}

TEST(Ideal, DistinctIdealsCommute) {
  const RootSet rs = roots(5);
  const Ideal a = make_ideal(rs.roots[0], 5);
  const Ideal b = make_ideal(rs.roots[3], 5);
  const RealElement br = element_bracket(a.parts.zhat, b.parts.zhat);
  double worst = 0;
  for (const auto& [s, c] : br.terms()) worst = std::max(worst, std::abs(c));
  EXPECT_LT(worst, 1e-12);
  EXPECT_NEAR(element_inner(a.parts.zhat, b.parts.zhat), 0.0, 1e-12);
}

TEST(Ideal, ZhatCoefficientsAtZeroRoot) {
  const Ideal id = make_ideal(roots(4).roots[1], 4);
  ASSERT_TRUE(id.exact);
  EXPECT_EQ(id.exact->zhat.coeff(P("ZY11")), 1);
}
