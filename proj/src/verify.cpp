#include "dlakit/verify.hpp"

#include <algorithm>
#include <string>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"
#include "dlakit/oracle.hpp"
#include "dlakit/symmetry.hpp"

namespace dlakit {

namespace {

Check exact_check(std::string name, bool ok, std::size_t failures = 0) {
  return {std::move(name), ok ? 0.0 : static_cast<double>(failures == 0 ? 1 : failures), true, ok};
}

bool string_matches_dense(const PauliString& a, const PauliString& b, const DenseMatrix& da,
                          const DenseMatrix& db) {
  const DenseMatrix expected = da * db - db * da;
  const auto br = string_bracket(a, b);
  if (!br) return expected.norm() < 1e-12;
  return (expected - static_cast<double>(br->coeff) * to_dense(br->string).m).norm() < 1e-12;
}

}  // namespace

PauliString random_string(int n, Rng& rng, bool allow_identity) {
  const std::uint64_t mask = site_mask(n);
  for (;;) {
    const PauliString s(n, rng() & mask, rng() & mask);
    if (allow_identity || !s.is_identity()) return s;
  }
}

OperatorElement random_element(int n, int terms, Rng& rng, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  OperatorElement out(n);
  while (static_cast<int>(out.term_count()) < terms) {
    const PauliString s = random_string(n, rng);
    if (sgn(out.coeff(s)) != 0) continue;
    int c = 0;
    while (c == 0) c = coeff(rng);
    out.add(s, Rational(c));
  }
  return out;
}

std::size_t exhaustive_string_mismatches(int n) {
  if (n > 4) throw CapacityError("exhaustive string check is limited to n <= 4");
  std::vector<PauliString> all;
  std::vector<DenseMatrix> dense;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < top; ++x) {
    for (std::uint64_t z = 0; z < top; ++z) {
      all.emplace_back(n, x, z);
      dense.push_back(to_dense(all.back()).m);
    }
  }
  std::size_t bad = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!string_matches_dense(all[i], all[j], dense[i], dense[j])) ++bad;
    }
  }
  return bad;
}

std::size_t random_string_mismatches(int n, int count, Rng& rng) {
  std::size_t bad = 0;
  for (int k = 0; k < count; ++k) {
    const PauliString a = random_string(n, rng, true);
    const PauliString b = random_string(n, rng, true);
    if (!string_matches_dense(a, b, to_dense(a).m, to_dense(b).m)) ++bad;
  }
  return bad;
}

VerifyReport run_verify(int n, bool oracle, std::uint64_t seed, const PropertyCounts& counts) {
  if (n < kMinSites || n > kMaxSites) throw StructuralError("n must be >= 3");
  if (oracle && n > kDenseClosureCap) throw CapacityError("--oracle is limited to n <= 6");
  VerifyReport report{n, oracle, seed, {}, false};
  auto& checks = report.checks;
  Rng rng(seed);

  const GeneratorSet g = generators(n);
  const ClosureResult closure = compute_closure(g);
  const std::size_t want = static_cast<std::size_t>(3 * n - 1);
  checks.push_back(exact_check("closure dimension " + std::to_string(closure.dimension()) +
                                   " == 3n-1 = " + std::to_string(want),
                               closure.dimension() == want));
  const DlaBasis basis(n);
  checks.push_back(exact_check("closure spans the named basis", span_equal(closure.elements, basis.as_list())));

  const auto computed = commutator_table(n);
  const auto closed = commutator_table_closed_form(n);
  std::size_t table_bad = 0;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (computed[i].with_x != closed[i].with_x) ++table_bad;
    if (computed[i].with_z0 != closed[i].with_z0) ++table_bad;
  }
  checks.push_back(exact_check("commutator table matches closed form (" +
                                   std::to_string(2 * computed.size()) + " entries)",
                               table_bad == 0, table_bad));

  const CenterBasis c = center(n);
  bool commutes = true;
  for (const auto* ce : {&c.c1, &c.c2}) {
    for (const auto* ge : {&g.x, &g.z0}) commutes = commutes && element_bracket(*ce, *ge).empty();
  }
  checks.push_back(exact_check("center commutes with X and Z0", commutes));
  const CenterBasis solved = center_by_solving(n);
  checks.push_back(exact_check("center spans the commutant solution space",
                               span_equal({c.c1, c.c2}, {solved.c1, solved.c2})));

  std::size_t anti_bad = 0;
  std::size_t jacobi_bad = 0;
  std::size_t serial_bad = 0;
  for (int t = 0; t < counts.triples; ++t) {
    const OperatorElement a = random_element(n, 6, rng);
    const OperatorElement b = random_element(n, 6, rng);
    const OperatorElement d = random_element(n, 6, rng);
    const OperatorElement ab = element_bracket(a, b);
    if (!(ab + element_bracket(b, a)).empty()) ++anti_bad;
    if (ab != element_bracket_serial(a, b)) ++serial_bad;
    const OperatorElement jac = element_bracket(a, element_bracket(b, d)) +
                                element_bracket(b, element_bracket(d, a)) + element_bracket(d, ab);
    if (!jac.empty()) ++jacobi_bad;
  }
  const std::string tr = " (" + std::to_string(counts.triples) + " random triples)";
  checks.push_back(exact_check("antisymmetry" + tr, anti_bad == 0, anti_bad));
  checks.push_back(exact_check("Jacobi identity" + tr, jacobi_bad == 0, jacobi_bad));
  checks.push_back(exact_check("parallel bracket equals serial bracket" + tr, serial_bad == 0, serial_bad));

  std::size_t sym_bad = 0;
  for (int t = 0; t < counts.symmetrized_pairs; ++t) {
    const PauliString a = random_string(n, rng);
    const PauliString b = random_string(n, rng);
    if (symmetrized_bracket(a, b) != element_bracket(symmetrize(a), symmetrize(b))) ++sym_bad;
  }
  checks.push_back(exact_check("symmetrized bracket identity (" + std::to_string(counts.symmetrized_pairs) +
                                   " random pairs)",
                               sym_bad == 0, sym_bad));

  if (oracle) {
    for (auto& ch : dense_cross_check(n)) checks.push_back(std::move(ch));
    const std::size_t bad = random_string_mismatches(n, counts.dense_pairs, rng);
    checks.push_back(exact_check("string brackets vs dense commutators (" + std::to_string(counts.dense_pairs) +
                                     " random pairs)",
                                 bad == 0, bad));
    if (n <= 3) {
      const std::size_t all_bad = exhaustive_string_mismatches(n);
      checks.push_back(exact_check("string brackets vs dense commutators (all pairs)", all_bad == 0, all_bad));
    }
  }

  report.passed = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.passed; });
  return report;
}

}  // namespace dlakit
