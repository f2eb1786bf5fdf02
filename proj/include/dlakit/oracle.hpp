#pragma once

// Dense 2^n x 2^n brute force used to cross-check the symbolic engine. Every
// commutator here is a matrix product; nothing is taken from element_bracket.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dlakit/element.hpp"
#include "dlakit/structure.hpp"

namespace dlakit {

inline constexpr int kDenseCap = 8;
inline constexpr int kDenseClosureCap = 6;
inline constexpr double kOracleRankTol = 1e-9;

using DenseMatrix = Eigen::MatrixXcd;

struct DenseOperator {
  int n;
  DenseMatrix m;
};

/// 2x2 site matrices with sigma_y = [[0, i], [-i, 0]].
DenseMatrix site_matrix(SiteSymbol s);

/// i * (site 1 factor) (x) ... (x) (site n factor).
DenseOperator to_dense(const PauliString& s, int cap = kDenseCap);

/// sum_s c_s * to_dense(s). Throws CapacityError when n > cap.
DenseOperator to_dense(const OperatorElement& a, int cap = kDenseCap);
DenseOperator to_dense(const RealElement& a, int cap = kDenseCap);

/// X and Z^0 assembled directly from site operators, without the symbolic
/// symmetrizer.
std::vector<DenseOperator> dense_generators(int n);

DenseOperator dense_commutator(const DenseOperator& a, const DenseOperator& b);

/// Re tr(A^dagger B).
double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b);

/// max(|A + A^dagger|, |tr A|).
double skew_hermitian_defect(const DenseMatrix& a);

struct DenseClosure {
  std::size_t dimension;
  std::vector<DenseMatrix> basis;     // orthonormal under frobenius_inner
  std::vector<double> singular_values;  // of the final spanning set, descending, over the largest
  double gap;  // smallest retained over largest discarded normalized value (inf if none discarded)
};

/// Closure of the real span under brackets with the generators. A candidate
/// is admitted when its residual after projection, relative to the bound
/// 2 |f| |g|, exceeds tol; values within a factor 10 of tol either way throw
/// NumericalError. The final spanning set is re-ranked by singular values
/// with the same rule. Throws CapacityError when n > 6.
DenseClosure dense_closure(const std::vector<DenseOperator>& gens, double tol = kOracleRankTol);

struct DenseCommutant {
  std::size_t dimension;
  std::vector<DenseMatrix> basis;  // orthonormal, inside the closure
  std::vector<double> singular_values;
};

/// {M in span(closure) : [M, g] = 0 for every generator}. Same rank rule.
DenseCommutant dense_commutant(const std::vector<DenseOperator>& gens, const DenseClosure& closure,
                               double tol = kOracleRankTol);
std::size_t dense_commutant_dim(const std::vector<DenseOperator>& gens, double tol = kOracleRankTol);

/// |M - P M| / |M| with P the orthogonal projector onto span(basis).
double projection_residual(const std::vector<DenseMatrix>& orthonormal_basis, const DenseMatrix& m);

/// Symbolic results re-derived densely: closure and commutant dimensions,
/// generator match, commutator-table rows, the center, and per-ideal bracket and
/// su(2) relations. Frobenius residuals, pass below 1e-10 (dimensions exact).
std::vector<Check> dense_cross_check(int n, double tol = kOracleRankTol);

}  // namespace dlakit
