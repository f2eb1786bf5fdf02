#pragma once

// Center, simple ideals and su(2) frames of the algebra generated by X and Z^0.

#include <optional>
#include <string>
#include <vector>

#include "dlakit/closure.hpp"
#include "dlakit/polynomial.hpp"

namespace dlakit {

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr double kResidualTol = 1e-10;

struct Root {
  double value;
  std::optional<int> exact;  // set when the root is an integer (then in {-1, 0, 1})
};

/// The n-1 roots of a_{n-1}, ascending.
struct RootSet {
  int n;
  std::vector<Root> roots;
  double tol;
};

/// Eigenvalues of A_{n-1} by Sturm-sequence bisection, refined to machine
/// precision. Throws NumericalError if any root invariant fails: count n-1,
/// pairwise gap > tol, |root| < 2, symmetry under negation, zero present iff n
/// is even, |a_{n-1}(root)| <= 1e-9.
RootSet roots(int n, double tol = kDefaultRootTol);

/// max |A_{n-1} a - lambda a| for a = (a_0, a_1(lambda), ..., a_{n-2}(lambda)).
double eigvector_check(double lambda, int n);

struct CenterBasis {
  int n;
  OperatorElement c1;
  OperatorElement c2;
};

/// Closed forms, split by the parity of n.
CenterBasis center(int n);

/// Null space of the commutant system [v, X] = [v, Z^0] = 0 over the named
/// basis coordinates, solved by exact elimination. Each vector is ordered
/// like DlaBasis (y_0.., z_0.., w_0.., x, v).
std::vector<std::vector<Rational>> commutant_solutions(int n);

/// Center from commutant_solutions. Throws InconsistencyError unless the
/// solution space is two-dimensional.
CenterBasis center_by_solving(int n);

template <class Scalar>
struct IdealParts {
  BasicElement<Scalar> xhat, yhat, zhat;
  BasicElement<Scalar> ahat, bhat, chat, dhat;  // xhat = A + B, yhat = C + D
  BasicElement<Scalar> sx_tilde, sy_tilde;      // xhat + yhat, xhat - yhat
};

struct Ideal {
  int n;
  double lambda;
  std::optional<int> exact_lambda;
  std::vector<double> a;  // a_0 .. a_{n-2} at lambda
  IdealParts<double> parts;
  RealElement sx, sy, sz;
  // 2 sum (a_k -/+ a_{k-1})^2 with a_{-1} = a_{n-1} = 0
  double sx_tilde_norm_sq;
  double sy_tilde_norm_sq;
  // Present when lambda is an integer root: everything above, exactly.
  std::optional<IdealParts<Rational>> exact;
  std::optional<Rational> exact_sx_tilde_norm_sq;
  std::optional<Rational> exact_sy_tilde_norm_sq;
};

/// Builds X^, Y^, Z^, the A^..D^ split, S~x, S~y and the normalized frame
///   Sx = -S~x / (2 sqrt(2 - lambda) |S~x| |S~y|)
///   Sy =  S~y / (2 sqrt(2 - lambda) |S~y|^2)
///   Sz =  Z^  / (2 |S~x| |S~y|).
/// Throws StructuralError unless |lambda| < 2 - 1e-9. lambda need not be a
/// root; the bracket identities only hold when it is.
Ideal make_ideal(double lambda, int n);
Ideal make_ideal(const Root& root, int n);

struct Check {
  std::string name;
  double residual;  // |lhs - rhs| / max(1, |rhs|) in the element_inner norm, or |value| for scalars
  bool exact;       // decided in exact arithmetic
  bool passed;
};

struct IdealVerdict {
  std::vector<Check> checks;
  bool passed() const;
  double max_residual() const;
};

/// Six generator brackets, the split identities, both norm formulas, the
/// three scaled S~ brackets, the su(2) relations of the normalized frame and
/// orthogonality to the center. Exact when the ideal carries exact parts.
IdealVerdict verify_ideal(const Ideal& ideal, const GeneratorSet& g, const CenterBasis& c,
                          double tol = kResidualTol);
IdealVerdict verify_ideal(const Ideal& ideal, const GeneratorSet& g);

/// Residuals of [Sx,Sy]-Sz, [Sy,Sz]-Sx, [Sz,Sx]-Sy.
std::vector<double> su2_residuals(const RealElement& sx, const RealElement& sy,
                                  const RealElement& sz);

struct StructureReport {
  int n;
  RootSet roots;
  CenterBasis center;
  std::vector<Ideal> ideals;
  std::vector<IdealVerdict> verdicts;  // parallel to ideals
  std::vector<Check> global_checks;
  std::size_t dimension;  // 2 + 3 * ideals
  bool all_passed;
};

/// Center plus one ideal per root, with every verification.
StructureReport decompose(int n, double tol = kDefaultRootTol);

}  // namespace dlakit
