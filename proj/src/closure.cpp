#include "dlakit/closure.hpp"

#include <cmath>

#include "dlakit/echelon.hpp"
#include "dlakit/errors.hpp"

namespace dlakit {

namespace {

void require_sites(int n) {
  if (n < kMinSites || n > kMaxSites) {
    throw StructuralError("n must be >= 3 and <= 64 (got " + std::to_string(n) + ")");
  }
}

// first X^j last 1^(n-j-2)
PauliString chain_word(int n, char first, int j, char last) {
  std::string w(static_cast<std::size_t>(n), '1');
  w[0] = first;
  for (int i = 1; i <= j; ++i) w[static_cast<std::size_t>(i)] = 'X';
  w[static_cast<std::size_t>(j + 1)] = last;
  return PauliString::parse(w);
}

PauliString single_x(int n) {
  std::string w(static_cast<std::size_t>(n), '1');
  w[0] = 'X';
  return PauliString::parse(w);
}

PauliString x_block(int n) {
  std::string w(static_cast<std::size_t>(n), 'X');
  w.back() = '1';
  return PauliString::parse(w);
}

}  // namespace

GeneratorSet generators(int n) {
  require_sites(n);
  return {n, symmetrize(single_x(n)), symmetrize(chain_word(n, 'Z', 0, 'Z'))};
}

OperatorElement hamiltonian(int n, const Rational& u) {
  const GeneratorSet g = generators(n);
  return scale_add(Rational(1 - u), g.z0, u, g.x);
}

DlaBasis::DlaBasis(int n) : n_(n) {
  require_sites(n);
  for (int j = 0; j <= n - 2; ++j) {
    elements_.push_back({"Y" + std::to_string(j), symmetrize(chain_word(n, 'Y', j, 'Y'))});
  }
  for (int j = 0; j <= n - 2; ++j) {
    elements_.push_back({"Z" + std::to_string(j), symmetrize(chain_word(n, 'Z', j, 'Z'))});
  }
  for (int j = 0; j <= n - 2; ++j) {
    elements_.push_back({"YZ" + std::to_string(j), symmetrize(chain_word(n, 'Z', j, 'Y')) +
                                                       symmetrize(chain_word(n, 'Y', j, 'Z'))});
  }
  elements_.push_back({"X", symmetrize(single_x(n))});
  elements_.push_back({"XX", symmetrize(x_block(n))});

  for (const auto& e : elements_) {
    coords_.push_back(to_coordinates(e.element));
    real_.push_back(to_real(e.element));
    norm_sq_.push_back(element_inner(e.element, e.element));
  }
}

std::optional<std::size_t> DlaBasis::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<OperatorElement> DlaBasis::as_list() const {
  std::vector<OperatorElement> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.element);
  return out;
}

DlaBasis named_basis(int n) { return DlaBasis(n); }

OperatorElement combine(const DlaBasis& basis, const BasisCombination<Rational>& coeffs) {
  OperatorElement out(basis.n());
  for (const auto& [i, c] : coeffs) out += c * basis[i].element;
  return out;
}

RealElement combine(const DlaBasis& basis, const BasisCombination<double>& coeffs) {
  RealElement out(basis.n());
  for (const auto& [i, c] : coeffs) out += c * basis.real(i);
  return out;
}

BasisCombination<Rational> expand_in_basis(const DlaBasis& basis, const OperatorElement& a) {
  require_same_size(basis.n(), a.size(), "expand_in_basis");
  BasisCombination<Rational> coeffs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Rational c = element_inner(a, basis[i].element) / basis.norm_sq(i);
    if (sgn(c) != 0) coeffs.emplace(i, c);
  }
  if (combine(basis, coeffs) != a) {
    throw InconsistencyError("element does not lie in the span of the named basis: " + a.str());
  }
  return coeffs;
}

std::pair<BasisCombination<double>, double> project_on_basis(const DlaBasis& basis,
                                                             const RealElement& a) {
  require_same_size(basis.n(), a.size(), "project_on_basis");
  BasisCombination<double> coeffs;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double c = element_inner(a, basis.real(i)) / basis.norm_sq(i).get_d();
    if (c != 0.0) coeffs.emplace(i, c);
  }
  return {coeffs, norm(a - combine(basis, coeffs))};
}

ClosureResult compute_closure(const GeneratorSet& g, Execution exec) {
  require_sites(g.n);
  ClosureResult result{g.n, {}, {}, 0};
  SparseEchelon<OrbitKey> echelon;

  // Generators are admitted as given (no normalization) so depth 0 is them.
  for (const auto& [label, gen] : {std::pair{"X", &g.x}, std::pair{"Z0", &g.z0}}) {
    if (echelon.insert(to_coordinates(*gen))) {
      result.elements.push_back(*gen);
      result.trace.push_back({0, label, std::nullopt, to_coordinates(*gen)});
    }
  }

  const OperatorElement* gens[2] = {&g.x, &g.z0};
  const char* gen_labels[2] = {"X", "Z0"};
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = result.elements.size();

  for (int depth = 1; frontier_begin < frontier_end; ++depth) {
    const std::size_t tasks = 2 * (frontier_end - frontier_begin);
    std::vector<std::optional<OperatorElement>> brackets(tasks);
    const auto count = static_cast<long>(tasks);
    auto run = [&](long t) {
      const std::size_t f = frontier_begin + static_cast<std::size_t>(t) / 2;
      brackets[static_cast<std::size_t>(t)] =
          element_bracket_serial(result.elements[f], *gens[t % 2]);
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long t = 0; t < count; ++t) run(t);
    } else {
      for (long t = 0; t < count; ++t) run(t);
    }

    for (std::size_t t = 0; t < tasks; ++t) {
      const OperatorElement& br = *brackets[t];
      if (br.empty()) continue;
      auto admitted = echelon.insert(to_coordinates(br));
      if (!admitted) continue;
      SymmetricCoordinates coords(admitted->begin(), admitted->end());
      const std::size_t f = frontier_begin + t / 2;
      result.elements.push_back(from_coordinates(g.n, coords));
      result.trace.push_back({depth, "e" + std::to_string(result.elements.size() - 1),
                              std::pair{result.trace[f].label, std::string(gen_labels[t % 2])},
                              std::move(coords)});
      result.max_depth = depth;
    }
    frontier_begin = frontier_end;
    frontier_end = result.elements.size();
  }
  return result;
}

std::size_t rank_of(const std::vector<OperatorElement>& family) {
  SparseEchelon<PauliString> echelon;
  for (const auto& e : family) echelon.insert(e.terms());
  return echelon.rank();
}

bool in_span(const std::vector<OperatorElement>& span, const OperatorElement& v) {
  SparseEchelon<PauliString> echelon;
  for (const auto& e : span) echelon.insert(e.terms());
  return echelon.contains(v.terms());
}

bool span_equal(const std::vector<OperatorElement>& a, const std::vector<OperatorElement>& b) {
  SparseEchelon<PauliString> ea;
  for (const auto& e : a) ea.insert(e.terms());
  SparseEchelon<PauliString> eb;
  for (const auto& e : b) eb.insert(e.terms());
  if (ea.rank() != eb.rank()) return false;
  for (const auto& e : b) {
    if (!ea.contains(e.terms())) return false;
  }
  return true;
}

CommutatorTable commutator_table(int n) {
  const DlaBasis basis(n);
  const GeneratorSet g = generators(n);
  CommutatorTable table;
  for (const auto& e : basis.elements()) {
    table.push_back({e.name, expand_in_basis(basis, element_bracket(e.element, g.x)),
                     expand_in_basis(basis, element_bracket(e.element, g.z0))});
  }
  return table;
}

CommutatorTable commutator_table_closed_form(int n) {
  const DlaBasis b(n);
  CommutatorTable table;
  const int top = n - 2;
  for (int k = 0; k <= top; ++k) {
    TableRow row{b[b.y(k)].name, {{b.yz(k), -2}}, {}};
    if (k != top) row.with_z0.emplace(b.yz(k + 1), 2);
    table.push_back(std::move(row));
  }
  for (int k = 0; k <= top; ++k) {
    TableRow row{b[b.z(k)].name, {{b.yz(k), 2}}, {}};
    if (k != 0) row.with_z0.emplace(b.yz(k - 1), -2);
    table.push_back(std::move(row));
  }
  for (int k = 0; k <= top; ++k) {
    TableRow row{b[b.yz(k)].name, {{b.z(k), -4}, {b.y(k), 4}}, {}};
    if (k == 0) {
      row.with_z0.emplace(b.x(), 4);
    } else {
      row.with_z0.emplace(b.y(k - 1), -4);
    }
    if (k == top) {
      row.with_z0.emplace(b.xx(), 4);
    } else {
      row.with_z0.emplace(b.z(k + 1), 4);
    }
    table.push_back(std::move(row));
  }
  table.push_back({"X", {}, {{b.yz(0), -2}}});
  table.push_back({"XX", {}, {{b.yz(top), -2}}});
  return table;
}

std::string format_combination(const DlaBasis& basis, const BasisCombination<Rational>& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [i, v] : c) {
    if (!out.empty()) out += sgn(v) < 0 ? " - " : " + ";
    else if (sgn(v) < 0) out += "-";
    const Rational mag = abs(v);
    if (mag != 1) out += to_string(mag) + "*";
    out += basis[i].name;
  }
  return out;
}

}  // namespace dlakit
