// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dlakit/closure.hpp"
#include "dlakit/oracle.hpp"
#include "dlakit/parallel.hpp"
#include "dlakit/polynomial.hpp"
#include "dlakit/reach3.hpp"
#include "dlakit/structure.hpp"
#include "dlakit/verify.hpp"

using namespace dlakit;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Outcome closure_dimension() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 3; n <= 12; ++n) {
    const auto r = compute_closure(generators(n));
    o.require(r.dimension() == static_cast<std::size_t>(3 * n - 1), "n=" + std::to_string(n));
  }
  const double t = seconds_since(t0);
  o.require(t < 10.0, "runtime " + num(t) + " s");
  return o;
}

Outcome basis_equality() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    o.require(span_equal(compute_closure(generators(n)).elements, DlaBasis(n).as_list()), "n=" + std::to_string(n));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst_gap = std::numeric_limits<double>::infinity();
  try {
    for (int n = 3; n <= 6; ++n) {
      const auto gens = dense_generators(n);
      const DenseClosure cl = dense_closure(gens);
      const std::size_t symbolic = compute_closure(generators(n)).dimension();
      o.require(cl.dimension == symbolic, "closure n=" + std::to_string(n));
      o.require(dense_commutant(gens, cl).dimension == 2, "commutant n=" + std::to_string(n));
      worst_gap = std::min(worst_gap, cl.gap);
    }
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  const double t = seconds_since(t0);
  o.require(t < 60.0, "runtime " + num(t) + " s");
  if (o.passed) o.detail = "smallest gap " + num(worst_gap);
  return o;
}

Outcome table_regression() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const auto computed = commutator_table(n);
    const auto closed = commutator_table_closed_form(n);
    o.require(computed.size() == static_cast<std::size_t>(3 * n - 1) && closed.size() == computed.size(),
              "row count n=" + std::to_string(n));
    for (std::size_t i = 0; i < std::min(computed.size(), closed.size()); ++i) {
      o.require(computed[i].with_x == closed[i].with_x && computed[i].with_z0 == closed[i].with_z0,
                "n=" + std::to_string(n) + " row " + computed[i].name);
    }
  }
  return o;
}

Outcome center_criterion() {
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    const CenterBasis c = center(n);
    const GeneratorSet g = generators(n);
    for (const auto* e : {&c.c1, &c.c2}) {
      o.require(element_bracket(*e, g.x).empty() && element_bracket(*e, g.z0).empty(),
                "commutes n=" + std::to_string(n));
    }
    const CenterBasis s = center_by_solving(n);
    o.require(span_equal({c.c1, c.c2}, {s.c1, s.c2}), "solved span n=" + std::to_string(n));
  }
  return o;
}

Outcome polynomial_suite() {
  Outcome o;
  const PolySequence seq = poly_recursive(21);
  for (int k = 0; k <= 20; ++k) o.require(seq.a(k) == poly_explicit(k), "explicit k=" + std::to_string(k));

  // det(lambda I + A_k) at k+1 distinct points pins a degree-k polynomial
  for (int k = 1; k <= 10; ++k) {
    const auto a = tridiagonal(k);
    for (int t = 0; t <= k; ++t) {
      const Rational lam = Rational(2 * t - k) / 3;
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = (i == j ? lam : Rational(0)) + Rational(a[i][j]);
      }
      Rational d = 1;
      for (int c = 0; c < k && d != 0; ++c) {
        int p = c;
        while (p < k && m[p][c] == 0) ++p;
        if (p == k) {
          d = 0;
          break;
        }
        if (p != c) {
          std::swap(m[p], m[c]);
          d = -d;
        }
        d *= m[c][c];
        for (int r = c + 1; r < k; ++r) {
          const Rational f = m[r][c] / m[c][c];
          for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
        }
      }
      o.require(d == seq.a(k)(lam), "det k=" + std::to_string(k));
    }
  }

  for (int n = 3; n <= 30; ++n) {
    const std::string tag = "roots n=" + std::to_string(n);
    try {
      const RootSet rs = roots(n);
      const auto& r = rs.roots;
      o.require(r.size() == static_cast<std::size_t>(n - 1), tag + " count");
      bool zero = false;
      for (std::size_t j = 0; j < r.size(); ++j) {
        o.require(std::abs(r[j].value) < 2.0, tag + " bound");
        o.require(std::abs(r[j].value + r[r.size() - 1 - j].value) < 1e-12, tag + " symmetry");
        if (j > 0) o.require(r[j].value > r[j - 1].value, tag + " distinct");
        o.require(eigvector_check(r[j].value, n) < 1e-9, tag + " eigenvector");
        zero = zero || r[j].value == 0.0;
      }
      o.require(zero == (n % 2 == 0), tag + " zero root");
    } catch (const std::exception& e) {
      o.require(false, tag + ": " + e.what());
    }
  }
  return o;
}

bool has_prefix(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

Outcome ideal_suite() {
  Outcome o;
  double worst = 0;
  for (int n = 3; n <= 10; ++n) {
    const StructureReport r = decompose(n);
    const std::string tag = "n=" + std::to_string(n);
    o.require(r.all_passed, tag + " structure checks");
    o.require(r.ideals.size() == static_cast<std::size_t>(n - 1), tag + " ideal count");
    for (std::size_t i = 0; i < r.ideals.size(); ++i) {
      for (const auto& c : r.verdicts[i].checks) {
        o.require(c.passed, tag + " " + c.name);
        worst = std::max(worst, c.residual);
        if (n == 3) o.require(c.exact || has_prefix(c.name, "[S") || c.name.find("orthogonal") != std::string::npos,
                              tag + " inexact " + c.name);
      }
      o.require(r.verdicts[i].max_residual() < 1e-10, tag + " residual");
    }
    for (const auto& c : r.global_checks) o.require(c.passed, tag + " " + c.name);
  }

  // both n = 3 ideals have rational parts matching the closed-form bases
  const DlaBasis b(3);
  auto e = [&](const char* name) { return b[*b.index_of(name)].element; };
  const RootSet rs = roots(3);
  for (const auto& root : rs.roots) {
    const Ideal id = make_ideal(root, 3);
    o.require(id.exact.has_value(), "n=3 exact parts");
    if (!id.exact) continue;
    const OperatorElement xhat = e("X") + e("Z1") + Rational(*root.exact) * (e("XX") - e("Y0"));
    const OperatorElement yhat = e("Y0") - e("Z0") + Rational(*root.exact) * (e("Y1") - e("Z1"));
    const OperatorElement zhat = e("YZ0") + Rational(*root.exact) * e("YZ1");
    o.require(id.exact->xhat == xhat && id.exact->yhat == yhat && id.exact->zhat == zhat, "n=3 hats");
    o.require(id.exact->sx_tilde == xhat + yhat && id.exact->sy_tilde == xhat - yhat, "n=3 S~ bases");
  }
  if (o.passed) o.detail = "max residual " + num(worst);
  return o;
}

Outcome three_qubit_example() {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    const Reach3Report r = run_reach3(10000, 181, 10000);
    o.require(r.a2 == "x^2 - 1", "a_2 = " + r.a2);
    o.require(r.roots.roots.size() == 2 && r.roots.roots[0].exact == -1 && r.roots.roots[1].exact == 1, "roots");
    for (const auto& c : r.checks) o.require(c.passed, c.name);
    o.require(r.oracle_grid == 10000 && r.oracle_max_diff < 1e-10,
              "hyperdeterminant diff " + num(r.oracle_max_diff));
    const double t = r.maximum.theta_star;
    o.require(std::abs(r.maximum.tau_star - 1.0) < 1e-9, "tau* = " + num(r.maximum.tau_star));
    o.require(std::abs(std::abs(std::sin(t)) - std::sqrt(3.0) / 2) < 1e-6 && std::abs(std::abs(std::cos(t)) - 0.5) < 1e-6,
              "theta* = " + num(t));
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  const double t = seconds_since(t0);
  o.require(t < 5.0, "runtime " + num(t) + " s");
  return o;
}

Outcome property_suites() {
  Outcome o;
  Rng rng(20240601);
  int triples = 0;
  for (int t = 0; t < 1200; ++t) {
    const int n = 3 + t % 6;
    const auto a = random_element(n, 4, rng);
    const auto b = random_element(n, 4, rng);
    const auto c = random_element(n, 4, rng);
    o.require(element_bracket(a, b) == -element_bracket(b, a), "antisymmetry");
    const auto jac = element_bracket(a, element_bracket(b, c)) + element_bracket(b, element_bracket(c, a)) +
                     element_bracket(c, element_bracket(a, b));
    o.require(jac.empty(), "Jacobi");
    ++triples;
  }
  for (int t = 0; t < 600; ++t) {
    const int n = 3 + t % 6;
    const auto s = random_string(n, rng);
    const auto u = random_string(n, rng);
    o.require(symmetrized_bracket(s, u) == element_bracket(symmetrize(s), symmetrize(u)), "symmetrized identity");
  }
  o.require(exhaustive_string_mismatches(3) == 0, "exhaustive n=3");
  std::size_t pairs = 0;
  for (int n = 3; n <= 6; ++n) {
    o.require(random_string_mismatches(n, 2500, rng) == 0, "random pairs n=" + std::to_string(n));
    pairs += 2500;
  }
  if (o.passed) o.detail = std::to_string(triples) + " triples, " + std::to_string(pairs) + " random pairs";
  return o;
}

}  // namespace

int main() {
  configure_threads();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closure dimension 3n-1, n=3..12", closure_dimension},
      {"closure span equals named basis, n=3..10", basis_equality},
      {"dense oracle closure and commutant, n=3..6", oracle_equivalence},
      {"commutator table closed form, n=3..10", table_regression},
      {"center closed form, n=3..10", center_criterion},
      {"polynomial suite", polynomial_suite},
      {"ideal suite, n=3..10", ideal_suite},
      {"three-qubit example", three_qubit_example},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    std::printf("%s  %d. %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", index++, name.c_str(), seconds_since(t0),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
