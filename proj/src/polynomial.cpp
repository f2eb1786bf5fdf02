#include "dlakit/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "dlakit/errors.hpp"

namespace dlakit {

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree + 1), 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
  return acc;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(static_cast<long>(*it));
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p = degree(); p >= 0; --p) {
    const std::int64_t c = coeff(p);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = std::llabs(c);
    if (mag != 1 || p == 0) os << mag;
    if (p >= 1) os << 'x';
    if (p >= 2) os << '^' << p;
    first = false;
  }
  return os.str();
}

PolySequence::PolySequence(int n) : n_(n) {
  if (n < 1 || n > 64) throw StructuralError("poly_recursive: n out of range");
  const Polynomial lambda = Polynomial::monomial(1);
  polys_.push_back(Polynomial{});          // a_{-1}
  polys_.push_back(Polynomial::monomial(0));  // a_0
  for (int k = 1; k <= n - 1; ++k) {
    const auto& prev = polys_[static_cast<std::size_t>(k)];
    const auto& prev2 = polys_[static_cast<std::size_t>(k - 1)];
    polys_.push_back(lambda * prev - prev2);
  }
}

PolySequence poly_recursive(int n) { return PolySequence(n); }

Polynomial poly_explicit(int k) {
  if (k < 0 || k > 64) throw StructuralError("poly_explicit: k out of range");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k + 1), 0);
  for (int j = 0; j <= k / 2; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(j));
    const std::int64_t b = binom.get_si();
    c[static_cast<std::size_t>(k - 2 * j)] = (j % 2 == 0) ? b : -b;
  }
  return Polynomial(std::move(c));
}

std::vector<std::vector<int>> tridiagonal(int k) {
  if (k < 1) throw StructuralError("tridiagonal: k must be >= 1");
  std::vector<std::vector<int>> m(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i + 1 < k; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
    m[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 1;
  }
  return m;
}

namespace {

template <class T>
std::vector<T> run_recursion(int n, const T& x) {
  std::vector<T> v;
  v.reserve(static_cast<std::size_t>(n + 1));
  v.push_back(T(0));
  v.push_back(T(1));
  for (int k = 1; k <= n - 1; ++k) {
    const std::size_t i = static_cast<std::size_t>(k + 1);
    v.push_back(T(x * v[i - 1] - v[i - 2]));
  }
  return v;
}

}  // namespace

std::vector<double> poly_values(int n, double x) { return run_recursion(n, x); }
std::vector<Rational> poly_values(int n, const Rational& x) { return run_recursion(n, x); }

}  // namespace dlakit
