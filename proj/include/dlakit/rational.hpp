#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dlakit {

/// Exact coefficient field. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Scalar traits shared by the exact and floating element types.
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(double v) { return v == 0.0; }

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Accepts "p", "-p", "p/q". Throws StructuralError on malformed input.
Rational parse_rational(std::string_view text);

}  // namespace dlakit
