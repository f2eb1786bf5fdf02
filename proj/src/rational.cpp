#include "dlakit/rational.hpp"

#include "dlakit/errors.hpp"

namespace dlakit {

std::string to_string(const Rational& v) { return v.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw StructuralError("empty rational literal");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw StructuralError("malformed rational literal '" + std::string(text) + "'");
  }
  if (sgn(r.get_den()) == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace dlakit
