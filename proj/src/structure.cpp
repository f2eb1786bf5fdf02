#include "dlakit/structure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "dlakit/echelon.hpp"
#include "dlakit/errors.hpp"

namespace dlakit {

namespace {

// Number of eigenvalues of A_m strictly below x (Sturm count on the LDL^T
// pivots of A_m - x I).
int sturm_count(int m, double x) {
  int count = 0;
  double q = -x;
  if (q < 0) ++count;
  for (int i = 1; i < m; ++i) {
    if (q == 0.0) q = 1e-300;
    q = -x - 1.0 / q;
    if (q < 0) ++count;
  }
  return count;
}

double bisect_eigenvalue(int m, int index) {
  double lo = -2.5;
  double hi = 2.5;
  for (;;) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(m, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<int> integer_root(int n, double value) {
  for (int m : {-1, 0, 1}) {
    if (std::abs(value - m) < 1e-6 && sgn(poly_values(n, Rational(m)).back()) == 0) return m;
  }
  return std::nullopt;
}

template <class Scalar>
void accumulate(BasisCombination<Scalar>& c, std::size_t i, const Scalar& v) {
  auto [it, inserted] = c.try_emplace(i, v);
  if (!inserted) it->second += v;
}

// a[k + 1] holds a_k for k = -1 .. n-1.
template <class Scalar>
IdealParts<Scalar> build_parts(const DlaBasis& b, const std::vector<Scalar>& values) {
  const int n = b.n();
  auto a = [&](int k) -> const Scalar& { return values[static_cast<std::size_t>(k + 1)]; };
  using Comb = BasisCombination<Scalar>;

  Comb xhat, yhat, zhat, ahat, bhat, chat, dhat;
  accumulate(xhat, b.x(), a(0));
  accumulate(xhat, b.z(1), a(0));
  accumulate(xhat, b.xx(), a(n - 2));
  accumulate(xhat, b.y(n - 3), Scalar(-a(n - 2)));
  for (int k = 1; k <= n - 3; ++k) {
    accumulate(xhat, b.z(k + 1), a(k));
    accumulate(xhat, b.y(k - 1), Scalar(-a(k)));
  }
  for (int k = 0; k <= n - 2; ++k) {
    accumulate(yhat, b.y(k), a(k));
    accumulate(yhat, b.z(k), Scalar(-a(k)));
    accumulate(zhat, b.yz(k), a(k));
  }

  accumulate(ahat, b.x(), a(0));
  accumulate(ahat, b.xx(), a(n - 2));
  accumulate(chat, b.y(n - 2), a(n - 2));
  accumulate(chat, b.z(0), Scalar(-a(0)));
  for (int k = 1; k <= n - 2; ++k) {
    accumulate(bhat, b.z(k), a(k - 1));
    accumulate(dhat, b.z(k), Scalar(-a(k)));
  }
  for (int k = 0; k <= n - 3; ++k) {
    accumulate(bhat, b.y(k), Scalar(-a(k + 1)));
    accumulate(dhat, b.y(k), a(k));
  }

  IdealParts<Scalar> p{combine(b, xhat), combine(b, yhat), combine(b, zhat), combine(b, ahat),
                       combine(b, bhat), combine(b, chat), combine(b, dhat),
                       BasicElement<Scalar>(n), BasicElement<Scalar>(n)};
  p.sx_tilde = p.xhat + p.yhat;
  p.sy_tilde = p.xhat - p.yhat;
  return p;
}

// 2 sum_{k=0}^{n-1} (a_k + sign * a_{k-1})^2 with a_{-1} = a_{n-1} = 0.
template <class Scalar>
Scalar frame_norm_sq(const std::vector<Scalar>& values, int sign) {
  const int n = static_cast<int>(values.size()) - 1;
  auto a = [&](int k) -> Scalar {
    if (k < 0 || k >= n - 1) return Scalar(0);
    return values[static_cast<std::size_t>(k + 1)];
  };
  Scalar sum(0);
  for (int k = 0; k <= n - 1; ++k) {
    Scalar t = a(k) + Scalar(sign) * a(k - 1);
    sum += t * t;
  }
  return Scalar(2) * sum;
}

template <class Scalar>
Check element_check(std::string name, const BasicElement<Scalar>& lhs,
                    const BasicElement<Scalar>& rhs, double tol) {
  const BasicElement<Scalar> diff = lhs - rhs;
  const double r = norm(diff) / std::max(1.0, norm(rhs));
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return {std::move(name), r, true, diff.empty()};
  } else {
    return {std::move(name), r, false, r < tol};
  }
}

template <class Scalar>
Check scalar_check(std::string name, const Scalar& value, const Scalar& scale, double tol) {
  const double r = std::abs(to_double(value)) / std::max(1.0, std::abs(to_double(scale)));
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return {std::move(name), r, true, sgn(value) == 0};
  } else {
    return {std::move(name), r, false, r < tol};
  }
}

template <class Scalar>
std::vector<Check> algebraic_checks(const IdealParts<Scalar>& p, const Scalar& lambda,
                                    const Scalar& nx, const Scalar& ny,
                                    const BasicElement<Scalar>& gx, const BasicElement<Scalar>& gz0,
                                    const BasicElement<Scalar>& c1, const BasicElement<Scalar>& c2,
                                    double tol) {
  const Scalar two_lambda = Scalar(2) * lambda;
  std::vector<Check> out;
  out.push_back(element_check("[Xhat,X] = 2 lambda Zhat", element_bracket(p.xhat, gx), two_lambda * p.zhat, tol));
  out.push_back(element_check("[Yhat,X] = -4 Zhat", element_bracket(p.yhat, gx), Scalar(-4) * p.zhat, tol));
  out.push_back(element_check("[Zhat,X] = 4 Yhat", element_bracket(p.zhat, gx), Scalar(4) * p.yhat, tol));
  out.push_back(element_check("[Xhat,Z0] = -4 Zhat", element_bracket(p.xhat, gz0), Scalar(-4) * p.zhat, tol));
  out.push_back(element_check("[Yhat,Z0] = 2 lambda Zhat", element_bracket(p.yhat, gz0), two_lambda * p.zhat, tol));
  out.push_back(element_check("[Zhat,Z0] = 4 Xhat", element_bracket(p.zhat, gz0), Scalar(4) * p.xhat, tol));
  out.push_back(element_check("Xhat = Ahat + Bhat", p.xhat, p.ahat + p.bhat, tol));
  out.push_back(element_check("Yhat = Chat + Dhat", p.yhat, p.chat + p.dhat, tol));
  out.push_back(scalar_check("|Sx~|^2 = 2 sum (a_k - a_{k-1})^2",
                             Scalar(element_inner(p.sx_tilde, p.sx_tilde) - nx), nx, tol));
  out.push_back(scalar_check("|Sy~|^2 = 2 sum (a_k + a_{k-1})^2",
                             Scalar(element_inner(p.sy_tilde, p.sy_tilde) - ny), ny, tol));
  out.push_back(element_check("[Sx~,Sy~] = -(4 - 2 lambda) |Sy~|^2 Zhat",
                              element_bracket(p.sx_tilde, p.sy_tilde),
                              Scalar(-(Scalar(4) - two_lambda) * ny) * p.zhat, tol));
  out.push_back(element_check("[Sy~,Zhat] = -2 |Sy~|^2 Sx~", element_bracket(p.sy_tilde, p.zhat),
                              Scalar(Scalar(-2) * ny) * p.sx_tilde, tol));
  out.push_back(element_check("[Zhat,Sx~] = -2 |Sx~|^2 Sy~", element_bracket(p.zhat, p.sx_tilde),
                              Scalar(Scalar(-2) * nx) * p.sy_tilde, tol));

  double worst = 0.0;
  bool exact_zero = true;
  for (const auto* u : {&p.xhat, &p.yhat, &p.zhat}) {
    for (const auto* c : {&c1, &c2}) {
      const Scalar v = element_inner(*u, *c);
      worst = std::max(worst, std::abs(to_double(v)));
      exact_zero = exact_zero && is_zero(v);
    }
  }
  if constexpr (std::is_same_v<Scalar, Rational>) {
    out.push_back({"ideal orthogonal to center", worst, true, exact_zero});
  } else {
    out.push_back({"ideal orthogonal to center", worst, false, worst < tol});
  }
  return out;
}

// s * base with s known through sign(s) and s^2; all-rational so that frame
// relations involving square roots can be decided exactly.
struct ScaledElement {
  int sign;
  Rational scale_sq;
  OperatorElement base;
};

bool scaled_equal(int sign_a, const Rational& sq_a, const OperatorElement& a, int sign_b,
                  const Rational& sq_b, const OperatorElement& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const auto& [s0, c0] = *b.terms().begin();
  const Rational kappa = a.coeff(s0) / c0;
  if (sgn(kappa) == 0 || a != kappa * b) return false;
  return sign_a * sgn(kappa) == sign_b && sq_a * kappa * kappa == sq_b;
}

Check exact_frame_check(std::string name, const ScaledElement& p, const ScaledElement& q,
                        const ScaledElement& r, double floating_residual) {
  const OperatorElement br = element_bracket(p.base, q.base);
  const bool ok = scaled_equal(p.sign * q.sign, p.scale_sq * q.scale_sq, br, r.sign, r.scale_sq, r.base);
  return {std::move(name), ok ? 0.0 : floating_residual, true, ok};
}

void require_lambda_in_range(double lambda) {
  if (!(std::abs(lambda) < 2.0 - 1e-9)) {
    throw StructuralError("ideal: lambda must satisfy |lambda| < 2 (got " + std::to_string(lambda) + ")");
  }
}

}  // namespace

RootSet roots(int n, double tol) {
  if (n < kMinSites || n > kMaxSites) throw StructuralError("roots: n must be >= 3");
  const int m = n - 1;
  RootSet rs{n, {}, tol};
  for (int j = 0; j < m; ++j) {
    const double v = bisect_eigenvalue(m, j);
    const auto exact = integer_root(n, v);
    rs.roots.push_back({exact ? static_cast<double>(*exact) : v, exact});
  }

  const double sym_tol = std::max(tol, 1e-14);
  if (static_cast<int>(rs.roots.size()) != m) throw NumericalError("roots: wrong count");
  bool has_zero = false;
  for (int j = 0; j < m; ++j) {
    const double v = rs.roots[static_cast<std::size_t>(j)].value;
    if (!(std::abs(v) < 2.0)) throw NumericalError("roots: |root| >= 2");
    if (j > 0 && !(v - rs.roots[static_cast<std::size_t>(j - 1)].value > tol)) {
      throw NumericalError("roots: roots not distinct at tolerance");
    }
    if (std::abs(v + rs.roots[static_cast<std::size_t>(m - 1 - j)].value) > sym_tol) {
      throw NumericalError("roots: spectrum not symmetric under negation");
    }
    if (std::abs(v) <= sym_tol) has_zero = true;
    if (std::abs(poly_values(n, v).back()) > 1e-9) throw NumericalError("roots: a_{n-1}(root) not ~ 0");
  }
  if (has_zero != (n % 2 == 0)) throw NumericalError("roots: zero root must appear iff n is even");
  return rs;
}

double eigvector_check(double lambda, int n) {
  const auto v = poly_values(n, lambda);  // v[k+1] = a_k
  const int m = n - 1;
  auto a = [&](int k) { return (k < 0 || k >= m) ? 0.0 : v[static_cast<std::size_t>(k + 1)]; };
  double worst = 0.0;
  for (int i = 0; i < m; ++i) worst = std::max(worst, std::abs(a(i - 1) + a(i + 1) - lambda * a(i)));
  return worst;
}

CenterBasis center(int n) {
  const DlaBasis b(n);
  OperatorElement c1 = -b[b.x()].element;
  OperatorElement c2(n);
  auto pair = [&](int k) { return b[b.y(k)].element + b[b.z(k)].element; };
  if (n % 2 == 1) {
    for (int k = 1; k <= n - 2; k += 2) c1 += pair(k);
    c2 += b[b.xx()].element;
    for (int k = 0; k <= n - 3; k += 2) c2 += pair(k);
  } else {
    c1 += b[b.xx()].element;
    for (int k = 1; k <= n - 3; k += 2) c1 += pair(k);
    for (int k = 0; k <= n - 2; k += 2) c2 += pair(k);
  }
  return {n, std::move(c1), std::move(c2)};
}

std::vector<std::vector<Rational>> commutant_solutions(int n) {
  const DlaBasis b(n);
  const GeneratorSet g = generators(n);
  const std::size_t cols = b.size();
  std::map<std::pair<int, OrbitKey>, std::vector<Rational>> rows;
  for (std::size_t i = 0; i < cols; ++i) {
    int which = 0;
    for (const auto* gen : {&g.x, &g.z0}) {
      for (const auto& [key, c] : to_coordinates(element_bracket(b[i].element, *gen))) {
        auto [it, inserted] = rows.try_emplace({which, key}, std::vector<Rational>(cols, Rational(0)));
        it->second[i] = c;
      }
      ++which;
    }
  }
  RationalMatrix m;
  m.reserve(rows.size());
  for (auto& [key, row] : rows) m.push_back(std::move(row));
  return nullspace(std::move(m), cols);
}

CenterBasis center_by_solving(int n) {
  const auto sols = commutant_solutions(n);
  if (sols.size() != 2) {
    throw InconsistencyError("commutant system has a " + std::to_string(sols.size()) +
                             "-dimensional solution space, expected 2");
  }
  const DlaBasis b(n);
  auto build = [&](const std::vector<Rational>& v) {
    BasisCombination<Rational> c;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) c.emplace(i, v[i]);
    }
    return combine(b, c);
  };
  return {n, build(sols[0]), build(sols[1])};
}

Ideal make_ideal(double lambda, int n) {
  require_lambda_in_range(lambda);
  std::optional<int> exact;
  if (lambda == std::round(lambda) && sgn(poly_values(n, Rational(static_cast<long>(lambda))).back()) == 0) {
    exact = static_cast<int>(lambda);
  }
  return make_ideal(Root{lambda, exact}, n);
}

Ideal make_ideal(const Root& root, int n) {
  require_lambda_in_range(root.value);
  const DlaBasis b(n);
  std::vector<double> values = poly_values(n, root.value);
  values.back() = 0.0;  // a_{n-1}(root) = 0; not read by the element formulas

  Ideal ideal{n, root.value, root.exact, std::vector<double>(values.begin() + 1, values.end() - 1),
              build_parts(b, values), RealElement(n), RealElement(n), RealElement(n),
              frame_norm_sq(values, -1), frame_norm_sq(values, +1), std::nullopt, std::nullopt,
              std::nullopt};

  const double nx = ideal.sx_tilde_norm_sq;
  const double ny = ideal.sy_tilde_norm_sq;
  const double root2 = std::sqrt(2.0 - root.value);
  ideal.sx = (-1.0 / (2.0 * root2 * std::sqrt(nx) * std::sqrt(ny))) * ideal.parts.sx_tilde;
  ideal.sy = (1.0 / (2.0 * root2 * ny)) * ideal.parts.sy_tilde;
  ideal.sz = (1.0 / (2.0 * std::sqrt(nx) * std::sqrt(ny))) * ideal.parts.zhat;

  if (root.exact) {
    const auto exact_values = poly_values(n, Rational(*root.exact));
    ideal.exact = build_parts(b, exact_values);
    ideal.exact_sx_tilde_norm_sq = frame_norm_sq(exact_values, -1);
    ideal.exact_sy_tilde_norm_sq = frame_norm_sq(exact_values, +1);
  }
  return ideal;
}

bool IdealVerdict::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

double IdealVerdict::max_residual() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.residual);
  return worst;
}

std::vector<double> su2_residuals(const RealElement& sx, const RealElement& sy, const RealElement& sz) {
  return {norm(element_bracket(sx, sy) - sz), norm(element_bracket(sy, sz) - sx),
          norm(element_bracket(sz, sx) - sy)};
}

IdealVerdict verify_ideal(const Ideal& ideal, const GeneratorSet& g, const CenterBasis& c, double tol) {
  IdealVerdict verdict;
  const auto su2 = su2_residuals(ideal.sx, ideal.sy, ideal.sz);
  static const char* kFrameNames[3] = {"[Sx,Sy] = Sz", "[Sy,Sz] = Sx", "[Sz,Sx] = Sy"};

  if (ideal.exact) {
    const Rational lambda(*ideal.exact_lambda);
    const Rational& nx = *ideal.exact_sx_tilde_norm_sq;
    const Rational& ny = *ideal.exact_sy_tilde_norm_sq;
    verdict.checks = algebraic_checks(*ideal.exact, lambda, nx, ny, g.x, g.z0, c.c1, c.c2, tol);

    // Sx = -S~x / (2 sqrt(2 - l) |S~x| |S~y|), Sy = S~y / (2 sqrt(2 - l) |S~y|^2),
    // Sz = Z^ / (2 |S~x| |S~y|), carried as sign and squared scale.
    const Rational two_minus = 2 - lambda;
    const ScaledElement sx{-1, Rational(1) / (4 * two_minus * nx * ny), ideal.exact->sx_tilde};
    const ScaledElement sy{+1, Rational(1) / (4 * two_minus * ny * ny), ideal.exact->sy_tilde};
    const ScaledElement sz{+1, Rational(1) / (4 * nx * ny), ideal.exact->zhat};
    verdict.checks.push_back(exact_frame_check(kFrameNames[0], sx, sy, sz, su2[0]));
    verdict.checks.push_back(exact_frame_check(kFrameNames[1], sy, sz, sx, su2[1]));
    verdict.checks.push_back(exact_frame_check(kFrameNames[2], sz, sx, sy, su2[2]));
  } else {
    verdict.checks = algebraic_checks(ideal.parts, ideal.lambda, ideal.sx_tilde_norm_sq,
                                      ideal.sy_tilde_norm_sq, to_real(g.x), to_real(g.z0),
                                      to_real(c.c1), to_real(c.c2), tol);
    for (int i = 0; i < 3; ++i) {
      verdict.checks.push_back({kFrameNames[i], su2[static_cast<std::size_t>(i)], false,
                                su2[static_cast<std::size_t>(i)] < tol});
    }
  }
  return verdict;
}

IdealVerdict verify_ideal(const Ideal& ideal, const GeneratorSet& g) {
  return verify_ideal(ideal, g, center(ideal.n));
}

StructureReport decompose(int n, double tol) {
  const DlaBasis basis(n);
  const GeneratorSet g = generators(n);
  StructureReport report{n, roots(n, tol), center(n), {}, {}, {}, 0, false};
  const auto& rs = report.roots.roots;

  const auto count = static_cast<long>(rs.size());
  std::vector<std::optional<Ideal>> ideals(rs.size());
  std::vector<IdealVerdict> verdicts(rs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    ideals[k] = make_ideal(rs[k], n);
    verdicts[k] = verify_ideal(*ideals[k], g, report.center);
  }
  for (auto& ideal : ideals) report.ideals.push_back(std::move(*ideal));
  report.verdicts = std::move(verdicts);

  auto& checks = report.global_checks;
  const auto& c = report.center;

  bool commutes = true;
  for (const auto* ce : {&c.c1, &c.c2}) {
    for (const auto* ge : {&g.x, &g.z0}) commutes = commutes && element_bracket(*ce, *ge).empty();
  }
  checks.push_back({"center commutes with X and Z0", commutes ? 0.0 : 1.0, true, commutes});

  const auto solved = center_by_solving(n);
  const bool same_span = span_equal({c.c1, c.c2}, {solved.c1, solved.c2});
  checks.push_back({"center spans the commutant solution space", same_span ? 0.0 : 1.0, true, same_span});

  const Rational cc = element_inner(c.c1, c.c2);
  checks.push_back({"center basis orthogonal", std::abs(cc.get_d()), true, sgn(cc) == 0});

  // Distinct ideals commute.
  double commute_worst = 0.0;
  bool commute_exact = true;
  bool commute_ok = true;
  for (std::size_t i = 0; i < report.ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < report.ideals.size(); ++j) {
      const auto& a = report.ideals[i];
      const auto& b = report.ideals[j];
      if (a.exact && b.exact) {
        for (const auto* u : {&a.exact->xhat, &a.exact->yhat, &a.exact->zhat}) {
          for (const auto* v : {&b.exact->xhat, &b.exact->yhat, &b.exact->zhat}) {
            const auto br = element_bracket(*u, *v);
            commute_worst = std::max(commute_worst, norm(br));
            commute_ok = commute_ok && br.empty();
          }
        }
      } else {
        commute_exact = false;
        for (const auto* u : {&a.parts.xhat, &a.parts.yhat, &a.parts.zhat}) {
          for (const auto* v : {&b.parts.xhat, &b.parts.yhat, &b.parts.zhat}) {
            const double r = norm(element_bracket(*u, *v)) / std::max(1.0, norm(*u) * norm(*v));
            commute_worst = std::max(commute_worst, r);
            commute_ok = commute_ok && r < kResidualTol;
          }
        }
      }
    }
  }
  checks.push_back({"distinct ideals commute", commute_worst, commute_exact, commute_ok});

  // Mutual orthogonality of the blocks: {c1, c2} and each {Xhat, Yhat, Zhat}.
  std::vector<std::vector<RealElement>> blocks;
  blocks.push_back({to_real(c.c1), to_real(c.c2)});
  for (const auto& ideal : report.ideals) blocks.push_back({ideal.parts.xhat, ideal.parts.yhat, ideal.parts.zhat});
  double ortho_worst = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (const auto& u : blocks[i]) {
        for (const auto& v : blocks[j]) ortho_worst = std::max(ortho_worst, std::abs(element_inner(u, v)));
      }
    }
  }
  checks.push_back({"blocks mutually orthogonal", ortho_worst, false, ortho_worst < kResidualTol});

  // Zero pairwise intersection: all block elements together have full rank.
  const std::size_t dim = basis.size();
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(2 + 3 * report.ideals.size()));
  Eigen::Index col = 0;
  double leftover = 0.0;
  for (const auto& block : blocks) {
    for (const auto& e : block) {
      const auto [comb, rest] = project_on_basis(basis, e);
      leftover = std::max(leftover, rest);
      for (const auto& [i, v] : comb) coords(static_cast<Eigen::Index>(i), col) = v;
      ++col;
    }
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(coords);
  const auto& sv = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-8 * sv(0)) ++rank;
  }
  const bool full = rank == dim && leftover < kResidualTol;
  checks.push_back({"center and ideals span 3n-1 dimensions",
                    static_cast<double>(dim > rank ? dim - rank : 0) + leftover, false, full});

  report.dimension = 2 + 3 * report.ideals.size();
  checks.push_back({"dimension 2 + 3(n-1) = 3n-1", report.dimension == dim ? 0.0 : 1.0, true,
                    report.dimension == dim});

  report.all_passed =
      std::all_of(checks.begin(), checks.end(), [](const Check& ch) { return ch.passed; }) &&
      std::all_of(report.verdicts.begin(), report.verdicts.end(),
                  [](const IdealVerdict& v) { return v.passed(); });
  return report;
}

}  // namespace dlakit
