#include "dlakit/element.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "dlakit/errors.hpp"

namespace dlakit {

void require_same_size(int n1, int n2, const char* what) {
  if (n1 != n2) {
    throw StructuralError(std::string(what) + ": length mismatch (" + std::to_string(n1) + " vs " +
                          std::to_string(n2) + ")");
  }
}

template <class Scalar>
BasicElement<Scalar>::BasicElement(int n) : n_(n) {
  if (n < kMinSites || n > kMaxSites) {
    throw StructuralError("n must be >= " + std::to_string(kMinSites) + " and <= " +
                          std::to_string(kMaxSites) + " (got " + std::to_string(n) + ")");
  }
}

template <class Scalar>
BasicElement<Scalar> BasicElement<Scalar>::of(const PauliString& s) {
  BasicElement e(s.size());
  e.add(s, Scalar(1));
  return e;
}

template <class Scalar>
Scalar BasicElement<Scalar>::coeff(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar(0) : it->second;
}

template <class Scalar>
BasicElement<Scalar>& BasicElement<Scalar>::add(const PauliString& s, const Scalar& c) {
  require_same_size(n_, s.size(), "element add");
  if (s.is_identity()) {
    throw StructuralError("the all-identity string is not an element of su(2^n)");
  }
  if (is_zero(c)) return *this;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

template <class Scalar>
BasicElement<Scalar>& BasicElement<Scalar>::operator+=(const BasicElement& o) {
  require_same_size(n_, o.n_, "element sum");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

template <class Scalar>
BasicElement<Scalar>& BasicElement<Scalar>::operator-=(const BasicElement& o) {
  require_same_size(n_, o.n_, "element difference");
  for (const auto& [s, c] : o.terms_) add(s, Scalar(-c));
  return *this;
}

template <class Scalar>
BasicElement<Scalar>& BasicElement<Scalar>::operator*=(const Scalar& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

template <class Scalar>
std::string BasicElement<Scalar>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      os << to_string(c);
    } else {
      os << c;
    }
    os << '*' << s.str();
  }
  return os.str();
}

RealElement to_real(const OperatorElement& a) {
  RealElement r(a.size());
  for (const auto& [s, c] : a.terms()) r.add(s, c.get_d());
  return r;
}

namespace {

template <class Scalar>
using Accumulator = std::unordered_map<PauliString, Scalar, PauliStringHash>;

template <class Scalar>
using TermList = std::vector<std::pair<PauliString, Scalar>>;

template <class Scalar>
void accumulate_rows(const TermList<Scalar>& ta, const TermList<Scalar>& tb, std::size_t begin,
                     std::size_t end, Accumulator<Scalar>& acc) {
  Scalar product;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& [sa, ca] = ta[i];
    for (const auto& [sb, cb] : tb) {
      auto br = string_bracket(sa, sb);
      if (!br) continue;
      product = ca * cb;
      product *= br->coeff;
      auto [it, inserted] = acc.try_emplace(br->string, product);
      if (!inserted) it->second += product;
    }
  }
}

template <class Scalar>
BasicElement<Scalar> collect(int n, const Accumulator<Scalar>& acc) {
  BasicElement<Scalar> out(n);
  for (const auto& [s, c] : acc) out.add(s, c);
  return out;
}

// Below this many string pairs the thread start-up dominates.
constexpr std::size_t kParallelThreshold = 4096;
constexpr std::size_t kMaxChunks = 64;

}  // namespace

template <class Scalar>
BasicElement<Scalar> element_bracket_serial(const BasicElement<Scalar>& a,
                                            const BasicElement<Scalar>& b) {
  require_same_size(a.size(), b.size(), "element_bracket");
  const TermList<Scalar> ta(a.terms().begin(), a.terms().end());
  const TermList<Scalar> tb(b.terms().begin(), b.terms().end());
  Accumulator<Scalar> acc;
  accumulate_rows(ta, tb, 0, ta.size(), acc);
  return collect(a.size(), acc);
}

template <class Scalar>
BasicElement<Scalar> element_bracket(const BasicElement<Scalar>& a, const BasicElement<Scalar>& b) {
  require_same_size(a.size(), b.size(), "element_bracket");
  if (a.term_count() * b.term_count() < kParallelThreshold || a.term_count() < 2) {
    return element_bracket_serial(a, b);
  }
  const TermList<Scalar> ta(a.terms().begin(), a.terms().end());
  const TermList<Scalar> tb(b.terms().begin(), b.terms().end());

  // Fixed chunking (independent of the thread count) and an ordered merge keep
  // floating results reproducible bit for bit.
  const std::size_t chunks = std::min(kMaxChunks, ta.size());
  std::vector<Accumulator<Scalar>> partial(chunks);
  const auto count = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < count; ++c) {
    const std::size_t begin = ta.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t end = ta.size() * static_cast<std::size_t>(c + 1) / chunks;
    accumulate_rows(ta, tb, begin, end, partial[static_cast<std::size_t>(c)]);
  }

  std::map<PauliString, Scalar> merged;
  for (const auto& acc : partial) {
    for (const auto& [s, v] : acc) {
      auto [it, inserted] = merged.try_emplace(s, v);
      if (!inserted) it->second += v;
    }
  }
  BasicElement<Scalar> out(a.size());
  for (const auto& [s, v] : merged) out.add(s, v);
  return out;
}

template <class Scalar>
Scalar element_inner(const BasicElement<Scalar>& a, const BasicElement<Scalar>& b) {
  require_same_size(a.size(), b.size(), "element_inner");
  const auto& small = a.term_count() <= b.term_count() ? a : b;
  const auto& large = a.term_count() <= b.term_count() ? b : a;
  Scalar sum(0);
  for (const auto& [s, c] : small.terms()) {
    auto it = large.terms().find(s);
    if (it != large.terms().end()) sum += c * it->second;
  }
  sum /= Scalar(a.size());
  return sum;
}

template <class Scalar>
BasicElement<Scalar> scale_add(const Scalar& alpha, const BasicElement<Scalar>& a,
                               const Scalar& beta, const BasicElement<Scalar>& b) {
  require_same_size(a.size(), b.size(), "scale_add");
  BasicElement<Scalar> out = alpha * a;
  out += beta * b;
  return out;
}

double norm(const RealElement& a) { return std::sqrt(element_inner(a, a)); }
double norm(const OperatorElement& a) { return std::sqrt(element_inner(a, a).get_d()); }

template class BasicElement<Rational>;
template class BasicElement<double>;

template OperatorElement element_bracket(const OperatorElement&, const OperatorElement&);
template RealElement element_bracket(const RealElement&, const RealElement&);
template OperatorElement element_bracket_serial(const OperatorElement&, const OperatorElement&);
template RealElement element_bracket_serial(const RealElement&, const RealElement&);
template Rational element_inner(const OperatorElement&, const OperatorElement&);
template double element_inner(const RealElement&, const RealElement&);
template OperatorElement scale_add(const Rational&, const OperatorElement&, const Rational&,
                                   const OperatorElement&);
template RealElement scale_add(const double&, const RealElement&, const double&,
                               const RealElement&);

}  // namespace dlakit
