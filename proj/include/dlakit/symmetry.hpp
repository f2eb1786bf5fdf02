#pragma once

// Cyclic translations C_n acting on Pauli strings and the symmetrizer
// C(A) = sum_{P in C_n} P A P^{-1}.

#include <compare>
#include <map>
#include <string>

#include "dlakit/element.hpp"

namespace dlakit {

/// Cyclic shift by r sites: the symbol at site i moves to site (i + r) mod n.
PauliString rotate(const PauliString& s, int r);

/// An orbit of C_n on strings, identified by its lexicographically minimal
/// rotation (I < X < Y < Z on the printed word). period is the number of
/// distinct rotations and divides n.
struct OrbitKey {
  PauliString representative;
  int period;

  auto operator<=>(const OrbitKey& o) const { return representative <=> o.representative; }
  bool operator==(const OrbitKey& o) const { return representative == o.representative; }
};

OrbitKey orbit_of(const PauliString& s);

/// Coordinates of a C_n-invariant element: the common coefficient carried by
/// every string of each orbit.
using SymmetricCoordinates = std::map<OrbitKey, Rational>;

/// Sum over all n group elements; a string with period d contributes n/d
/// times on each of its d distinct rotations.
OperatorElement symmetrize(const PauliString& s);

/// Applies symmetrize term-by-term.
OperatorElement symmetrize(const OperatorElement& a);

/// C( sum_S [a, S b S^{-1}] ), which equals [C(a), C(b)].
OperatorElement symmetrized_bracket(const PauliString& a, const PauliString& b);

/// Rotates every string of a by r.
OperatorElement rotate(const OperatorElement& a, int r);

bool is_cyclic_invariant(const OperatorElement& a);

/// Throws InvarianceError (naming the orbit) if orbit-mates carry different
/// coefficients.
SymmetricCoordinates to_coordinates(const OperatorElement& a);
OperatorElement from_coordinates(int n, const SymmetricCoordinates& coords);

std::string to_string(const OrbitKey& k);

}  // namespace dlakit
