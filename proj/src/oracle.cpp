#include "dlakit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dlakit/closure.hpp"
#include "dlakit/errors.hpp"

namespace dlakit {

namespace {

using cd = std::complex<double>;

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the dense cap " +
                        std::to_string(cap));
  }
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Product of single-site operators, identity elsewhere; sites are 0-based
// with site 0 as the leftmost Kronecker factor.
DenseMatrix embed(int n, const std::vector<std::pair<int, SiteSymbol>>& ops) {
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int site = 0; site < n; ++site) {
    SiteSymbol s = SiteSymbol::I;
    for (const auto& [where, what] : ops) {
      if (where == site) s = what;
    }
    out = kron(out, site_matrix(s));
  }
  return out;
}

Eigen::VectorXd real_vec(const DenseMatrix& m) {
  const Eigen::Index sz = m.size();
  Eigen::VectorXd v(2 * sz);
  for (Eigen::Index i = 0; i < sz; ++i) {
    v(i) = m.data()[i].real();
    v(sz + i) = m.data()[i].imag();
  }
  return v;
}

int require_common_size(const std::vector<DenseOperator>& gens) {
  if (gens.empty()) throw StructuralError("dense closure: no generators");
  const int n = gens.front().n;
  for (const auto& g : gens) require_same_size(n, g.n, "dense closure");
  return n;
}

// Normalized singular values must stay out of (tol/10, 10 tol).
void require_gap(const Eigen::VectorXd& normalized, double tol, const char* what) {
  for (Eigen::Index i = 0; i < normalized.size(); ++i) {
    const double s = normalized(i);
    if (s >= tol / 10 && s <= tol * 10) {
      throw NumericalError(std::string(what) + ": singular value " + std::to_string(s) +
                           " inside the ambiguous band around the rank tolerance");
    }
  }
}

std::vector<DenseMatrix> orthonormal(const std::vector<DenseMatrix>& ms) {
  std::vector<DenseMatrix> out;
  for (const auto& m : ms) {
    DenseMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : out) r -= frobenius_inner(q, r) * q;
    }
    const double nr = r.norm();
    if (nr > 1e-12 * std::max(1.0, m.norm())) out.push_back(r / nr);
  }
  return out;
}

double frob(const DenseMatrix& a) { return a.norm(); }

Check residual_check(std::string name, double r, double tol = kResidualTol) {
  return {std::move(name), r, false, r < tol};
}

Check count_check(std::string name, std::size_t got, std::size_t want) {
  const double diff = got > want ? static_cast<double>(got - want) : static_cast<double>(want - got);
  return {std::move(name) + " (" + std::to_string(got) + " == " + std::to_string(want) + ")", diff, true,
          got == want};
}

}  // namespace

DenseMatrix site_matrix(SiteSymbol s) {
  DenseMatrix m(2, 2);
  switch (s) {
    case SiteSymbol::I: m << 1, 0, 0, 1; break;
    case SiteSymbol::X: m << 0, 1, 1, 0; break;
    case SiteSymbol::Y: m << 0, cd(0, 1), cd(0, -1), 0; break;
    case SiteSymbol::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

DenseOperator to_dense(const PauliString& s, int cap) {
  require_cap(s.size(), cap, "to_dense");
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int site = 0; site < s.size(); ++site) out = kron(out, site_matrix(s.at(site)));
  return {s.size(), cd(0, 1) * out};
}

namespace {

template <class Scalar>
DenseOperator to_dense_impl(const BasicElement<Scalar>& a, int cap) {
  require_cap(a.size(), cap, "to_dense");
  const Eigen::Index dim = Eigen::Index{1} << a.size();
  DenseOperator out{a.size(), DenseMatrix::Zero(dim, dim)};
  for (const auto& [s, c] : a.terms()) out.m += to_double(c) * to_dense(s, cap).m;
  return out;
}

}  // namespace

DenseOperator to_dense(const OperatorElement& a, int cap) { return to_dense_impl(a, cap); }
DenseOperator to_dense(const RealElement& a, int cap) { return to_dense_impl(a, cap); }

std::vector<DenseOperator> dense_generators(int n) {
  if (n < kMinSites) throw StructuralError("dense_generators: n must be >= 3");
  require_cap(n, kDenseCap, "dense_generators");
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseMatrix x = DenseMatrix::Zero(dim, dim);
  DenseMatrix zz = DenseMatrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    x += embed(n, {{j, SiteSymbol::X}});
    zz += embed(n, {{j, SiteSymbol::Z}, {(j + 1) % n, SiteSymbol::Z}});
  }
  return {{n, cd(0, 1) * x}, {n, cd(0, 1) * zz}};
}

DenseOperator dense_commutator(const DenseOperator& a, const DenseOperator& b) {
  require_same_size(a.n, b.n, "dense_commutator");
  return {a.n, a.m * b.m - b.m * a.m};
}

double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b) {
  return (a.adjoint() * b).trace().real();
}

double skew_hermitian_defect(const DenseMatrix& a) {
  return std::max((a + a.adjoint()).norm(), std::abs(a.trace()));
}

DenseClosure dense_closure(const std::vector<DenseOperator>& gens, double tol) {
  const int n = require_common_size(gens);
  require_cap(n, kDenseClosureCap, "dense_closure");

  std::vector<DenseMatrix> basis;
  std::vector<DenseMatrix> spanning;  // every candidate, scaled by its bound

  auto admit = [&](const DenseMatrix& candidate, double bound) {
    spanning.push_back(candidate / bound);
    DenseMatrix r = candidate;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) r -= frobenius_inner(q, r) * q;
    }
    const double ratio = r.norm() / bound;
    if (ratio > 10 * tol) {
      basis.push_back(r / r.norm());
    } else if (ratio >= tol / 10) {
      throw NumericalError("dense closure: residual ratio " + std::to_string(ratio) +
                           " too close to the rank tolerance");
    }
  };

  for (const auto& g : gens) admit(g.m, frob(g.m));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : gens) {
      const DenseMatrix q = basis[i];
      admit(q * g.m - g.m * q, 2 * frob(g.m));
    }
  }

  Eigen::MatrixXd cols(2 * spanning.front().size(), static_cast<Eigen::Index>(spanning.size()));
  for (std::size_t j = 0; j < spanning.size(); ++j) cols.col(static_cast<Eigen::Index>(j)) = real_vec(spanning[j]);
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(cols);
  const Eigen::VectorXd normalized = svd.singularValues() / svd.singularValues()(0);
  require_gap(normalized, tol, "dense closure");

  DenseClosure out{basis.size(), std::move(basis), {}, std::numeric_limits<double>::infinity()};
  std::size_t rank = 0;
  double smallest_kept = 1.0;
  double largest_dropped = 0.0;
  for (Eigen::Index i = 0; i < normalized.size(); ++i) {
    out.singular_values.push_back(normalized(i));
    if (normalized(i) > tol) {
      ++rank;
      smallest_kept = std::min(smallest_kept, normalized(i));
    } else {
      largest_dropped = std::max(largest_dropped, normalized(i));
    }
  }
  if (largest_dropped > 0) out.gap = smallest_kept / largest_dropped;
  if (rank != out.dimension) {
    throw NumericalError("dense closure: incremental rank " + std::to_string(out.dimension) +
                         " disagrees with singular-value rank " + std::to_string(rank));
  }
  return out;
}

DenseCommutant dense_commutant(const std::vector<DenseOperator>& gens, const DenseClosure& closure,
                               double tol) {
  require_common_size(gens);
  const std::size_t d = closure.basis.size();
  const Eigen::Index block = 2 * closure.basis.front().size();
  Eigen::MatrixXd system(block * static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    const DenseMatrix& q = closure.basis[k];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const DenseMatrix& g = gens[gi].m;
      system.block(block * static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(k), block, 1) =
          real_vec(q * g - g * q);
    }
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double top = sv(0);
  const Eigen::VectorXd normalized = sv / top;
  require_gap(normalized, tol, "dense commutant");

  DenseCommutant out{0, {}, {}};
  const Eigen::MatrixXd& v = svd.matrixV();
  for (Eigen::Index j = 0; j < normalized.size(); ++j) {
    out.singular_values.push_back(normalized(j));
    if (normalized(j) > tol) continue;
    DenseMatrix m = DenseMatrix::Zero(closure.basis.front().rows(), closure.basis.front().cols());
    for (std::size_t k = 0; k < d; ++k) m += v(static_cast<Eigen::Index>(k), j) * closure.basis[k];
    out.basis.push_back(std::move(m));
  }
  out.basis = orthonormal(out.basis);
  out.dimension = out.basis.size();
  return out;
}

std::size_t dense_commutant_dim(const std::vector<DenseOperator>& gens, double tol) {
  return dense_commutant(gens, dense_closure(gens, tol), tol).dimension;
}

double projection_residual(const std::vector<DenseMatrix>& orthonormal_basis, const DenseMatrix& m) {
  DenseMatrix r = m;
  for (const auto& q : orthonormal_basis) r -= frobenius_inner(q, r) * q;
  const double nm = m.norm();
  return nm == 0.0 ? r.norm() : r.norm() / nm;
}

std::vector<Check> dense_cross_check(int n, double tol) {
  require_cap(n, kDenseClosureCap, "dense_cross_check");
  std::vector<Check> checks;
  const auto gens = dense_generators(n);
  const GeneratorSet g = generators(n);
  const DenseMatrix& dx = gens[0].m;
  const DenseMatrix& dz = gens[1].m;

  checks.push_back(residual_check("generators: to_dense(X) and to_dense(Z0) match direct assembly",
                                  std::max(frob(to_dense(g.x).m - dx), frob(to_dense(g.z0).m - dz))));

  const DenseClosure closure = dense_closure(gens, tol);
  const std::size_t symbolic = compute_closure(g).dimension();
  checks.push_back(count_check("closure dimension dense vs symbolic", closure.dimension, symbolic));
  checks.push_back({"singular-value gap above 100", 1.0 / closure.gap, false, closure.gap > 100.0});

  const DlaBasis basis(n);
  double outside = 0.0;
  double skew = 0.0;
  std::vector<DenseMatrix> named;
  for (const auto& e : basis.elements()) {
    named.push_back(to_dense(e.element).m);
    outside = std::max(outside, projection_residual(closure.basis, named.back()));
    skew = std::max(skew, skew_hermitian_defect(named.back()));
  }
  checks.push_back(residual_check("named basis inside dense closure", outside, 1e-9));
  checks.push_back(residual_check("named basis skew-Hermitian and traceless", skew));

  double table = 0.0;
  for (const auto& row : commutator_table_closed_form(n)) {
    const DenseMatrix& e = named[*basis.index_of(row.name)];
    table = std::max(table, frob(e * dx - dx * e - to_dense(combine(basis, row.with_x)).m));
    table = std::max(table, frob(e * dz - dz * e - to_dense(combine(basis, row.with_z0)).m));
  }
  checks.push_back(residual_check("commutator table rows as matrices", table));

  const DenseCommutant commutant = dense_commutant(gens, closure, tol);
  checks.push_back(count_check("commutant dimension", commutant.dimension, 2));
  const CenterBasis c = center(n);
  const DenseMatrix c1 = to_dense(c.c1).m;
  const DenseMatrix c2 = to_dense(c.c2).m;
  checks.push_back(residual_check("closed-form center inside dense commutant",
                                  std::max(projection_residual(commutant.basis, c1),
                                           projection_residual(commutant.basis, c2)),
                                  1e-9));
  double center_comm = 0.0;
  for (const auto* cm : {&c1, &c2}) {
    center_comm = std::max(center_comm, frob(*cm * dx - dx * *cm));
    center_comm = std::max(center_comm, frob(*cm * dz - dz * *cm));
  }
  checks.push_back(residual_check("center commutes with generators (dense)", center_comm));

  const RootSet rs = roots(n);
  for (const auto& root : rs.roots) {
    const Ideal ideal = make_ideal(root, n);
    const DenseMatrix xh = to_dense(ideal.parts.xhat).m;
    const DenseMatrix yh = to_dense(ideal.parts.yhat).m;
    const DenseMatrix zh = to_dense(ideal.parts.zhat).m;
    const double l = ideal.lambda;
    auto br = [](const DenseMatrix& a, const DenseMatrix& b) -> DenseMatrix { return a * b - b * a; };
    double gen_res = 0.0;
    gen_res = std::max(gen_res, frob(br(xh, dx) - 2 * l * zh));
    gen_res = std::max(gen_res, frob(br(yh, dx) + 4 * zh));
    gen_res = std::max(gen_res, frob(br(zh, dx) - 4 * yh));
    gen_res = std::max(gen_res, frob(br(xh, dz) + 4 * zh));
    gen_res = std::max(gen_res, frob(br(yh, dz) - 2 * l * zh));
    gen_res = std::max(gen_res, frob(br(zh, dz) - 4 * xh));
    const std::string label = "ideal lambda=" + std::to_string(l);
    checks.push_back(residual_check(label + ": brackets with X and Z0", gen_res));

    const DenseMatrix sx = to_dense(ideal.sx).m;
    const DenseMatrix sy = to_dense(ideal.sy).m;
    const DenseMatrix sz = to_dense(ideal.sz).m;
    const double su2 = std::max({frob(br(sx, sy) - sz), frob(br(sy, sz) - sx), frob(br(sz, sx) - sy)});
    checks.push_back(residual_check(label + ": su(2) relations", su2));
  }
  return checks;
}

}  // namespace dlakit
