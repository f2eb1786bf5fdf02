#include "dlakit/reach3.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"
#include "dlakit/oracle.hpp"
#include "dlakit/polynomial.hpp"

namespace dlakit {

namespace {

constexpr int kSites = 3;

Vector8 ket(std::initializer_list<int> indices) {
  Vector8 v = Vector8::Zero();
  for (int i : indices) v(i) = 1.0;
  return v / std::sqrt(static_cast<double>(indices.size()));
}

Matrix2 ones_form(int sign) {
  Matrix2 f;
  f << 1.0, static_cast<double>(sign), static_cast<double>(sign), 1.0;
  return f;
}

Matrix4 kron2(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  }
  return out;
}

Check pass_below(std::string name, double r, double tol) { return {std::move(name), r, false, r < tol}; }

}  // namespace

DickeBasis dicke_basis() {
  return {{ket({0}), ket({7}), ket({4, 2, 1}), ket({3, 5, 6})}};
}

Eigen::Matrix<Complex, 8, 4> block_frame() {
  const DickeBasis d = dicke_basis();
  Eigen::Matrix<Complex, 8, 4> q;
  q.col(0) = d.phi[0];
  q.col(1) = d.phi[1];
  q.col(2) = d.phi[3];
  q.col(3) = d.phi[2];
  return q;
}

Vector8 to_computational(const SymmetricState& s) {
  const auto q = block_frame();
  Vector8 v = Vector8::Zero();
  for (int i = 0; i < 4; ++i) v += s.amplitude[static_cast<std::size_t>(i)] * q.col(i);
  return v;
}

namespace {

void require_three_sites(const OperatorElement& a) {
  if (a.size() != kSites) throw StructuralError("Dicke projection requires n = 3");
}

}  // namespace

double dicke_leakage(const OperatorElement& a) {
  require_three_sites(a);
  const auto q = block_frame();
  const DenseMatrix m = to_dense(a).m;
  const Eigen::Matrix<Complex, 8, 4> image = m * q;
  return (image - q * (q.adjoint() * image)).norm();
}

Matrix4 project_to_dicke(const OperatorElement& a) {
  const double leak = dicke_leakage(a);
  if (leak > kLeakageTol) {
    throw InvarianceError("Dicke sector is not invariant (leakage " + std::to_string(leak) + ")");
  }
  const auto q = block_frame();
  return q.adjoint() * to_dense(a).m * q;
}

std::pair<Matrix2, double> factor_left(const Matrix4& m, const Matrix2& f) {
  const double ff = f.squaredNorm();
  Matrix2 sigma;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix2 blk = m.block<2, 2>(2 * i, 2 * j);
      sigma(i, j) = (f.conjugate().cwiseProduct(blk)).sum() / ff;
    }
  }
  return {sigma, (m - kron2(sigma, f)).norm()};
}

SymmetricState reachable_state(const ReachableParams& p) {
  const Complex i(0, 1);
  const Complex u = std::exp(i * p.mu) / 2.0;
  const Complex w = std::exp(-i * p.mu) / 2.0;
  const Complex ep = std::exp(i * p.phi);
  const Complex ez = std::exp(i * p.zeta);
  const Complex ea = std::exp(i * p.alpha);
  const Complex eb = std::exp(i * p.beta);
  const double ct = std::cos(p.theta), st = std::sin(p.theta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  return {{u * ep * ct + w * ea * cg, u * ep * ct - w * ea * cg, u * ez * st + w * eb * sg,
           u * ez * st - w * eb * sg}};
}

SymmetricState family_state(double theta) {
  ReachableParams p;
  p.theta = theta;
  p.gamma = theta;
  return reachable_state(p);
}

std::pair<double, double> split_norms(const SymmetricState& s) {
  const auto& a = s.amplitude;
  // Components along (1,1)/sqrt2 and (1,-1)/sqrt2 in the second factor.
  const double v1 = std::sqrt(std::norm(a[0] + a[1]) / 2 + std::norm(a[2] + a[3]) / 2);
  const double v2 = std::sqrt(std::norm(a[0] - a[1]) / 2 + std::norm(a[2] - a[3]) / 2);
  return {v1, v2};
}

double tangle_family(double theta) {
  const double s = std::sin(theta);
  return 16.0 / (3.0 * std::sqrt(3.0)) * std::abs(std::cos(theta) * s * s * s);
}

double tangle_general(const Vector8& v) {
  const double nrm = v.norm();
  if (std::abs(nrm - 1.0) > 1e-9) {
    throw StructuralError("tangle_general: state is not normalized (norm " + std::to_string(nrm) + ")");
  }
  auto a = [&](int q1, int q2, int q3) { return v(4 * q1 + 2 * q2 + q3); };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

TangleMax max_tangle(int grid) {
  if (grid < 1000) throw StructuralError("max_tangle: grid must be >= 1000");
  const double step = std::numbers::pi / (grid - 1);
  // Values this close count as ties; the smaller angle wins.
  constexpr double kTie = 4 * std::numeric_limits<double>::epsilon();
  auto better = [&](double v, int i, double best_v, int best_i) {
    if (v > best_v + kTie) return true;
    return v >= best_v - kTie && i < best_i;
  };

  double best_v = -1.0;
  int best_i = grid;
#pragma omp parallel
  {
    double local_v = -1.0;
    int local_i = grid;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < grid; ++i) {
      const double v = tangle_family(step * i);
      if (better(v, i, local_v, local_i)) {
        local_v = v;
        local_i = i;
      }
    }
#pragma omp critical
    {
      if (better(local_v, local_i, best_v, best_i)) {
        best_v = local_v;
        best_i = local_i;
      }
    }
  }

  const double lo = step * std::max(0, best_i - 1);
  const double hi = step * std::min(grid - 1, best_i + 1);
  const auto [theta, neg] = boost::math::tools::brent_find_minima(
      [](double t) { return -tangle_family(t); }, lo, hi, std::numeric_limits<double>::digits);
  if (-neg < best_v) return {step * best_i, best_v, grid};
  return {theta, -neg, grid};
}

std::vector<std::pair<double, double>> family_curve(int points) {
  if (points < 2) throw StructuralError("family_curve: need at least 2 points");
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = std::numbers::pi * i / (points - 1);
    out.emplace_back(t, tangle_family(t));
  }
  return out;
}

Reach3Report run_reach3(int grid, int curve_points, int oracle_grid) {
  const int n = kSites;
  const DlaBasis b(n);
  Reach3Report report{poly_recursive(n).a(n - 1).str(), roots(n), {}, {}, 0.0, oracle_grid, {}, false};
  auto& checks = report.checks;

  const auto& rs = report.roots.roots;
  const bool roots_ok = rs.size() == 2 && rs[0].exact == -1 && rs[1].exact == 1;
  checks.push_back({"roots of a_2 are exactly -1 and 1", roots_ok ? 0.0 : 1.0, true, roots_ok});

  double leakage = 0.0;
  auto block_form = [&](const OperatorElement& e, int sign) {
    leakage = std::max(leakage, dicke_leakage(e));
    return factor_left(project_to_dicke(e), ones_form(sign));
  };
  for (int sign : {+1, -1}) {
    const Ideal ideal = make_ideal(Root{static_cast<double>(sign), sign}, n);
    double worst = 0.0;
    bool nontrivial = true;
    for (const auto* e : {&ideal.exact->xhat, &ideal.exact->yhat, &ideal.exact->zhat}) {
      const auto [sigma, r] = block_form(*e, sign);
      worst = std::max(worst, r);
      nontrivial = nontrivial && sigma.norm() > 1e-6;
    }
    const std::string form = sign > 0 ? "[[1,1],[1,1]]" : "[[1,-1],[-1,1]]";
    checks.push_back(pass_below("ideal lambda=" + std::to_string(sign) + " acts as sigma (x) " + form,
                                nontrivial ? worst : 1.0, 1e-12));
  }

  const CenterBasis c = center(n);
  Matrix2 id = Matrix2::Identity();
  Matrix2 sx;
  sx << 0.0, 1.0, 1.0, 0.0;
  const Complex i3(0, 3);
  const double c_one = (project_to_dicke(c.c2) - kron2(id, i3 * id)).norm();
  const double c_sx = (project_to_dicke(c.c1) - kron2(id, -i3 * sx)).norm();
  leakage = std::max({leakage, dicke_leakage(c.c1), dicke_leakage(c.c2)});
  checks.push_back(pass_below("Y0 + Z0 + XX acts as 3i 1 (x) 1", c_one, 1e-12));
  checks.push_back(pass_below("Y1 + Z1 - X acts as -3i 1 (x) sigma_x", c_sx, 1e-12));

  const GeneratorSet g = generators(n);
  double invariance = 0.0;
  for (const auto* gen : {&g.x, &g.z0}) {
    leakage = std::max(leakage, dicke_leakage(*gen));
    const Matrix4 m = project_to_dicke(*gen);
    for (int sign : {+1, -1}) {
      const Matrix4 p = kron2(id, ones_form(sign) / 2.0);
      invariance = std::max(invariance, ((Matrix4::Identity() - p) * m * p).norm());
    }
  }
  checks.push_back(pass_below("Dicke sector leakage", leakage, kLeakageTol));
  checks.push_back(pass_below("V1 and V2 invariant under X and Z0", invariance, 1e-12));

  report.maximum = max_tangle(grid);
  const double ts = report.maximum.theta_star;
  checks.push_back(pass_below("maximum tangle equals 1", std::abs(report.maximum.tau_star - 1.0), 1e-9));
  checks.push_back(pass_below("|cos theta*| = 1/2", std::abs(std::abs(std::cos(ts)) - 0.5), 1e-6));
  checks.push_back(pass_below("|sin theta*| = sqrt(3)/2",
                              std::abs(std::abs(std::sin(ts)) - std::sqrt(3.0) / 2), 1e-6));

  double diff = 0.0;
  for (int k = 0; k < oracle_grid; ++k) {
    const double t = 2 * std::numbers::pi * k / oracle_grid;
    diff = std::max(diff, std::abs(tangle_family(t) - tangle_general(to_computational(family_state(t)))));
  }
  report.oracle_max_diff = diff;
  checks.push_back(pass_below("family formula matches the hyperdeterminant", diff, 1e-10));

  report.curve = family_curve(curve_points);
  report.passed = std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.passed; });
  return report;
}

}  // namespace dlakit
