#include <gtest/gtest.h>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"
#include "dlakit/symmetry.hpp"
#include "dlakit/verify.hpp"

using namespace dlakit;

namespace {

PauliString P(const char* w) { return PauliString::parse(w); }

}  // namespace

TEST(Rotate, ShiftsRight) {
  EXPECT_EQ(rotate(P("XZ1"), 1), P("1XZ"));
  EXPECT_EQ(rotate(P("XZ1"), 0), P("XZ1"));
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 10;
    const PauliString s = random_string(n, rng);
    const int r = static_cast<int>(rng() % n);
    EXPECT_EQ(rotate(rotate(s, r), n - r), s);
  }
}

TEST(Orbit, CanonicalRepresentativeAndPeriod) {
  const OrbitKey k = orbit_of(P("ZY1"));
  EXPECT_EQ(k.representative, P("1ZY"));
  EXPECT_EQ(k.period, 3);
  EXPECT_EQ(orbit_of(P("XXX")).period, 1);
  EXPECT_EQ(orbit_of(P("XZXZ")).period, 2);
  EXPECT_EQ(orbit_of(P("ZXZX")).representative, P("XZXZ"));
  EXPECT_EQ(to_string(k), "{rep: 1ZY, period: 3}");
}

TEST(Orbit, RepresentativeIsRotationInvariant) {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + t % 9;
    const PauliString s = random_string(n, rng);
    const OrbitKey k = orbit_of(s);
    EXPECT_EQ(n % k.period, 0);
    for (int r = 0; r < n; ++r) {
      EXPECT_EQ(orbit_of(rotate(s, r)).representative, k.representative);
      EXPECT_LE(k.representative, rotate(s, r));
    }
  }
}

TEST(Symmetrize, Examples) {
  const OperatorElement x = symmetrize(P("X11"));
  EXPECT_EQ(x.term_count(), 3u);
  for (const char* w : {"X11", "1X1", "11X"}) EXPECT_EQ(x.coeff(P(w)), 1);

  const OperatorElement z0 = symmetrize(P("ZZ1"));
  for (const char* w : {"ZZ1", "1ZZ", "Z1Z"}) EXPECT_EQ(z0.coeff(P(w)), 1);

  const OperatorElement xxx = symmetrize(P("XXX"));
  EXPECT_EQ(xxx.term_count(), 1u);
  EXPECT_EQ(xxx.coeff(P("XXX")), 3);

  const OperatorElement half = symmetrize(P("XZXZ"));
  EXPECT_EQ(half.coeff(P("XZXZ")), 2);
  EXPECT_EQ(half.coeff(P("ZXZX")), 2);
}

TEST(Symmetrize, IdempotentUpToScale) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 8;
    const PauliString s = random_string(n, rng);
    EXPECT_EQ(symmetrize(symmetrize(s)), Rational(n) * symmetrize(s));
  }
}

TEST(Symmetrize, OutputIsInvariant) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 8;
    const OperatorElement a = symmetrize(random_element(n, 4, rng));
    EXPECT_TRUE(is_cyclic_invariant(a));
    for (int r = 0; r < n; ++r) EXPECT_EQ(rotate(a, r), a);
  }
}

TEST(SymmetrizedBracket, GeneratorExample) {
  const OperatorElement got = symmetrized_bracket(P("X11"), P("ZZ1"));
  const DlaBasis b(3);
  EXPECT_EQ(got, Rational(-2) * b[b.yz(0)].element);
}

TEST(SymmetrizedBracket, YZ0WithX) {
  // [YZ^0, X] = 4 Y^0 - 4 Z^0; the YZ^0 side is the sum of two orbits.
  for (int n = 3; n <= 8; ++n) {
    const DlaBasis b(n);
    std::string zy(static_cast<std::size_t>(n), '1');
    zy[0] = 'Z';
    zy[1] = 'Y';
    std::string yz = zy;
    std::swap(yz[0], yz[1]);
    std::string x(static_cast<std::size_t>(n), '1');
    x[0] = 'X';
    const OperatorElement got = symmetrized_bracket(P(zy.c_str()), P(x.c_str())) +
                                symmetrized_bracket(P(yz.c_str()), P(x.c_str()));
    EXPECT_EQ(got, Rational(4) * b[b.y(0)].element - Rational(4) * b[b.z(0)].element) << n;
  }
}

TEST(SymmetrizedBracket, EqualsBracketOfSymmetrizations) {
  Rng rng(6);
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + t % 6;
    const PauliString a = random_string(n, rng);
    const PauliString b = random_string(n, rng);
    EXPECT_EQ(symmetrized_bracket(a, b), element_bracket(symmetrize(a), symmetrize(b)));
  }
}

TEST(Coordinates, Examples) {
  const DlaBasis b(3);
  const auto x = to_coordinates(b[b.x()].element);
  ASSERT_EQ(x.size(), 1u);
  EXPECT_EQ(x.begin()->first.representative, P("11X"));
  EXPECT_EQ(x.begin()->second, 1);

  const auto yz = to_coordinates(b[b.yz(0)].element);
  ASSERT_EQ(yz.size(), 2u);
  EXPECT_EQ(yz.at(orbit_of(P("ZY1"))), 1);
  EXPECT_EQ(yz.at(orbit_of(P("YZ1"))), 1);

  OperatorElement bad = OperatorElement::of(P("X11"));
  bad.add(P("1X1"), Rational(2));
  bad.add(P("11X"), Rational(1));
  EXPECT_THROW(to_coordinates(bad), InvarianceError);
  try {
    to_coordinates(bad);
  } catch (const InvarianceError& e) {
    EXPECT_NE(std::string(e.what()).find("11X"), std::string::npos);
  }
}

TEST(Coordinates, RoundTrip) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 8;
    const OperatorElement a = symmetrize(random_element(n, 5, rng));
    EXPECT_EQ(from_coordinates(n, to_coordinates(a)), a);
  }
}
