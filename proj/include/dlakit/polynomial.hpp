#pragma once

// The polynomial family a_k(lambda): a_{-1} = 0, a_0 = 1,
// a_k = lambda a_{k-1} - a_{k-2}. The roots of a_{n-1} are the eigenvalues of
// the 0/1 tridiagonal matrix A_{n-1} and parametrize the simple ideals.

#include <cstdint>
#include <string>
#include <vector>

#include "dlakit/rational.hpp"

namespace dlakit {

/// Integer-coefficient polynomial; coeffs[i] multiplies lambda^i. Trailing
/// zeros are trimmed so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);
  static Polynomial monomial(int degree, std::int64_t c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int power) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  double operator()(double x) const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  std::string str() const;  // e.g. "x^3 - 2x"

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// a_{-1} .. a_{n-1} built by the three-term recursion.
class PolySequence {
 public:
  explicit PolySequence(int n);

  int n() const { return n_; }
  /// k in [-1, n-1].
  const Polynomial& a(int k) const { return polys_.at(static_cast<std::size_t>(k + 1)); }

 private:
  int n_;
  std::vector<Polynomial> polys_;
};

PolySequence poly_recursive(int n);

/// sum_{j=0}^{floor(k/2)} (-1)^j C(k-j, j) lambda^(k-2j).
Polynomial poly_explicit(int k);

/// A_k: k x k with ones on the first off-diagonals, zeros elsewhere.
std::vector<std::vector<int>> tridiagonal(int k);

/// Values a_{-1}(x) .. a_{n-1}(x) by running the recursion numerically.
std::vector<double> poly_values(int n, double x);
std::vector<Rational> poly_values(int n, const Rational& x);

}  // namespace dlakit
