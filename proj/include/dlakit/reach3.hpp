#pragma once

// The three-qubit example: projection onto the symmetric (Dicke) sector, the
// sigma (x) A / sigma (x) B block forms of the two ideals, the reachable set
// from |000>, and the three-tangle along the family cos t |000> + sin t |phi_3>.
//
// Block coordinates: the Dicke sector is written as C^2 (x) C^2 with the
// vectors ordered (phi_0, phi_1, phi_3, phi_2), i.e. Kronecker index 2a + b
// maps to phi_0, phi_1, phi_3, phi_2 for (a, b) = 00, 01, 10, 11. That is the
// pairing under which the lambda = 1 ideal acts as sigma (x) [[1,1],[1,1]]
// and the family (cos t, 0, sin t, 0) reproduces the closed-form tangle.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "dlakit/element.hpp"
#include "dlakit/structure.hpp"

namespace dlakit {

using Complex = std::complex<double>;
using Vector8 = Eigen::Matrix<Complex, 8, 1>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;

inline constexpr double kLeakageTol = 1e-12;

/// phi_0 = |000>, phi_1 = |111>, phi_2 = W, phi_3 = the one-hole W state.
/// Computational index 4 q1 + 2 q2 + q3.
struct DickeBasis {
  std::array<Vector8, 4> phi;
};

DickeBasis dicke_basis();

/// Columns are the Dicke vectors in block order (phi_0, phi_1, phi_3, phi_2).
Eigen::Matrix<Complex, 8, 4> block_frame();

/// Unit vector in block coordinates.
struct SymmetricState {
  std::array<Complex, 4> amplitude;
};

Vector8 to_computational(const SymmetricState& s);

/// Restriction of to_dense(a) to the Dicke sector in block coordinates.
/// Throws InvarianceError if the sector leaks by more than 1e-12.
Matrix4 project_to_dicke(const OperatorElement& a);

/// Frobenius norm of (1 - P) to_dense(a) P, P the Dicke projector.
double dicke_leakage(const OperatorElement& a);

/// Best sigma with m ~ sigma (x) f (least squares), and the residual
/// |m - sigma (x) f|.
std::pair<Matrix2, double> factor_left(const Matrix4& m, const Matrix2& f);

struct ReachableParams {
  double theta = 0, phi = 0, zeta = 0, alpha = 0, beta = 0, gamma = 0, mu = 0;
};

/// e^{i mu}/2 (e^{i phi} cos t, e^{i phi} cos t, e^{i zeta} sin t, e^{i zeta} sin t)
///  + e^{-i mu}/2 (e^{i alpha} cos g, -e^{i alpha} cos g, e^{i beta} sin g, -e^{i beta} sin g)
SymmetricState reachable_state(const ReachableParams& p);

/// (cos t, 0, sin t, 0).
SymmetricState family_state(double theta);

/// Norms of the components in V1 = span{v (x) (1,1)} and V2 = span{v (x) (1,-1)}.
std::pair<double, double> split_norms(const SymmetricState& s);

/// 16/(3 sqrt 3) |cos t sin^3 t|.
double tangle_family(double theta);

/// 4 |d1 - 2 d2 + 4 d3| (Cayley hyperdeterminant of the amplitude tensor).
/// Throws StructuralError unless |state| = 1 within 1e-9.
double tangle_general(const Vector8& state);

struct TangleMax {
  double theta_star;
  double tau_star;
  int grid;
};

/// Grid search on [0, pi] (ties go to the smaller angle) refined by Brent's
/// method on the bracketing cell. Throws StructuralError if grid < 1000.
TangleMax max_tangle(int grid);

/// points samples of (t, tangle_family(t)) for t in [0, pi].
std::vector<std::pair<double, double>> family_curve(int points);

struct Reach3Report {
  std::string a2;  // a_2 as a polynomial in lambda
  RootSet roots;
  std::vector<Check> checks;
  TangleMax maximum;
  double oracle_max_diff;  // tangle_family vs tangle_general on the oracle grid
  int oracle_grid;
  std::vector<std::pair<double, double>> curve;
  bool passed;
};

/// The whole example: block forms of both ideals and the center (with
/// leakage), V1/V2 invariance of the generators, the tangle maximum and the
/// family formula against the hyperdeterminant on oracle_grid angles.
Reach3Report run_reach3(int grid, int curve_points, int oracle_grid = 10000);

}  // namespace dlakit
