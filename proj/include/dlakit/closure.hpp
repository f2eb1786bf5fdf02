#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlakit/element.hpp"
#include "dlakit/symmetry.hpp"

namespace dlakit {

/// The two generators: X = C(X1...1) (the transverse field) and
/// Z^0 = C(ZZ1...1) (the ring coupling).
struct GeneratorSet {
  int n;
  OperatorElement x;
  OperatorElement z0;
};

GeneratorSet generators(int n);

/// (1 - u) Z^0 + u X.
OperatorElement hamiltonian(int n, const Rational& u);

struct NamedElement {
  std::string name;
  OperatorElement element;
};

/// The 3n-1 elements Y^j, Z^j, YZ^j (j = 0..n-2), X and XX, stored in that
/// order. They are pairwise orthogonal under element_inner.
class DlaBasis {
 public:
  explicit DlaBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }

  std::size_t y(int j) const { return static_cast<std::size_t>(j); }
  std::size_t z(int j) const { return static_cast<std::size_t>(n_ - 1 + j); }
  std::size_t yz(int j) const { return static_cast<std::size_t>(2 * (n_ - 1) + j); }
  std::size_t x() const { return static_cast<std::size_t>(3 * (n_ - 1)); }
  std::size_t xx() const { return static_cast<std::size_t>(3 * (n_ - 1) + 1); }

  const NamedElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<NamedElement>& elements() const { return elements_; }
  const SymmetricCoordinates& coords(std::size_t i) const { return coords_[i]; }
  const RealElement& real(std::size_t i) const { return real_[i]; }
  const Rational& norm_sq(std::size_t i) const { return norm_sq_[i]; }

  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<OperatorElement> as_list() const;

 private:
  int n_;
  std::vector<NamedElement> elements_;
  std::vector<SymmetricCoordinates> coords_;
  std::vector<RealElement> real_;
  std::vector<Rational> norm_sq_;
};

DlaBasis named_basis(int n);

/// Linear combination over the named basis: basis index -> coefficient.
template <class Scalar>
using BasisCombination = std::map<std::size_t, Scalar>;

OperatorElement combine(const DlaBasis& basis, const BasisCombination<Rational>& coeffs);
RealElement combine(const DlaBasis& basis, const BasisCombination<double>& coeffs);

/// Exact coordinates of a in the named basis. Throws InconsistencyError if a
/// does not lie in the span.
BasisCombination<Rational> expand_in_basis(const DlaBasis& basis, const OperatorElement& a);

/// Orthogonal-projection coordinates for floating elements, plus the norm of
/// whatever is left over.
std::pair<BasisCombination<double>, double> project_on_basis(const DlaBasis& basis,
                                                             const RealElement& a);

enum class Execution { Parallel, Serial };

struct TraceEntry {
  int depth;
  std::string label;
  std::optional<std::pair<std::string, std::string>> produced_by;  // (frontier, generator)
  SymmetricCoordinates element;
};

struct ClosureResult {
  int n;
  std::vector<OperatorElement> elements;  // admitted, primitive-normalized
  std::vector<TraceEntry> trace;          // parallel to elements
  int max_depth;

  std::size_t dimension() const { return elements.size(); }
};

/// Depth-by-depth closure: depth 0 holds the generators; depth k brackets
/// every element admitted at depth k-1 with both generators and admits the
/// residuals that are independent of everything so far (exact rank in orbit
/// coordinates). Stops at the first depth that admits nothing. Admission
/// order is fixed (frontier order, then X before Z^0) whatever the execution
/// policy.
ClosureResult compute_closure(const GeneratorSet& g, Execution exec = Execution::Parallel);

/// Exact test that span(a) == span(b).
bool span_equal(const std::vector<OperatorElement>& a, const std::vector<OperatorElement>& b);

bool in_span(const std::vector<OperatorElement>& span, const OperatorElement& v);

/// Exact rank of a family of elements.
std::size_t rank_of(const std::vector<OperatorElement>& family);

/// [e, X] and [e, Z^0] for every named basis element e, in basis coordinates.
struct TableRow {
  std::string name;
  BasisCombination<Rational> with_x;
  BasisCombination<Rational> with_z0;
};

using CommutatorTable = std::vector<TableRow>;

/// Computed by bracketing and expanding in the named basis.
CommutatorTable commutator_table(int n);

/// The closed-form rows with their Kronecker-delta edge cases at k = 0 and
/// k = n-2.
CommutatorTable commutator_table_closed_form(int n);

std::string format_combination(const DlaBasis& basis, const BasisCombination<Rational>& c);

}  // namespace dlakit
