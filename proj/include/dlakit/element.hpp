#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlakit/pauli.hpp"
#include "dlakit/rational.hpp"

namespace dlakit {

/// Finite linear combination sum_s c_s * s of Pauli strings on a fixed number
/// of sites. With real coefficients the represented matrix is skew-Hermitian.
/// Zero coefficients are never stored, and the all-identity string is
/// rejected: every element lives in su(2^n).
template <class Scalar>
class BasicElement {
 public:
  using Terms = std::map<PauliString, Scalar>;

  explicit BasicElement(int n);

  /// Single string with coefficient 1.
  static BasicElement of(const PauliString& s);

  int size() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of s (zero if absent).
  Scalar coeff(const PauliString& s) const;

  /// Adds c to the coefficient of s, erasing the entry if it cancels.
  BasicElement& add(const PauliString& s, const Scalar& c);
  BasicElement& operator+=(const BasicElement& o);
  BasicElement& operator-=(const BasicElement& o);
  BasicElement& operator*=(const Scalar& c);

  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }
  friend BasicElement operator*(const Scalar& c, BasicElement a) { return a *= c; }
  BasicElement operator-() const { return Scalar(-1) * *this; }

  bool operator==(const BasicElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  /// "c1*s1 + c2*s2 ..." for diagnostics.
  std::string str() const;

 private:
  int n_;
  Terms terms_;
};

using OperatorElement = BasicElement<Rational>;
using RealElement = BasicElement<double>;

RealElement to_real(const OperatorElement& a);

/// [A, B] by bilinear extension of string_bracket. Term pairs are processed
/// in parallel chunks; the result is independent of the thread count.
template <class Scalar>
BasicElement<Scalar> element_bracket(const BasicElement<Scalar>& a, const BasicElement<Scalar>& b);

/// Single-threaded reference for element_bracket.
template <class Scalar>
BasicElement<Scalar> element_bracket_serial(const BasicElement<Scalar>& a,
                                            const BasicElement<Scalar>& b);

/// (1/n) * sum_s c_s(A) c_s(B). This equals Re Tr(A B^dagger) / (n 2^n), so
/// X, XX, Y^j and Z^j have unit norm and YZ^j has squared norm 2.
template <class Scalar>
Scalar element_inner(const BasicElement<Scalar>& a, const BasicElement<Scalar>& b);

/// alpha*A + beta*B.
template <class Scalar>
BasicElement<Scalar> scale_add(const Scalar& alpha, const BasicElement<Scalar>& a,
                               const Scalar& beta, const BasicElement<Scalar>& b);

/// sqrt(element_inner(a, a)).
double norm(const RealElement& a);
double norm(const OperatorElement& a);

void require_same_size(int n1, int n2, const char* what);

}  // namespace dlakit
