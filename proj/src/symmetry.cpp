#include "dlakit/symmetry.hpp"

#include "dlakit/errors.hpp"

namespace dlakit {

namespace {

std::uint64_t rotate_bits(std::uint64_t b, int r, int n) {
  if (r == 0) return b;
  return ((b << r) | (b >> (n - r))) & site_mask(n);
}

}  // namespace

PauliString rotate(const PauliString& s, int r) {
  const int n = s.size();
  r %= n;
  if (r < 0) r += n;
  return PauliString(n, rotate_bits(s.xbits(), r, n), rotate_bits(s.zbits(), r, n));
}

OrbitKey orbit_of(const PauliString& s) {
  const int n = s.size();
  PauliString best = s;
  int period = n;
  for (int r = 1; r < n; ++r) {
    PauliString t = rotate(s, r);
    if (t == s && period == n) period = r;
    if (t < best) best = t;
  }
  return {best, period};
}

OperatorElement symmetrize(const PauliString& s) {
  OperatorElement out(s.size());
  for (int r = 0; r < s.size(); ++r) out.add(rotate(s, r), Rational(1));
  return out;
}

OperatorElement symmetrize(const OperatorElement& a) {
  OperatorElement out(a.size());
  for (const auto& [s, c] : a.terms()) {
    for (int r = 0; r < a.size(); ++r) out.add(rotate(s, r), c);
  }
  return out;
}

OperatorElement symmetrized_bracket(const PauliString& a, const PauliString& b) {
  require_same_size(a.size(), b.size(), "symmetrized_bracket");
  OperatorElement fixed_first(a.size());
  for (int r = 0; r < a.size(); ++r) {
    if (auto br = string_bracket(a, rotate(b, r))) fixed_first.add(br->string, Rational(br->coeff));
  }
  return symmetrize(fixed_first);
}

OperatorElement rotate(const OperatorElement& a, int r) {
  OperatorElement out(a.size());
  for (const auto& [s, c] : a.terms()) out.add(rotate(s, r), c);
  return out;
}

bool is_cyclic_invariant(const OperatorElement& a) { return rotate(a, 1) == a; }

SymmetricCoordinates to_coordinates(const OperatorElement& a) {
  SymmetricCoordinates coords;
  std::map<OrbitKey, int> seen;
  for (const auto& [s, c] : a.terms()) {
    const OrbitKey key = orbit_of(s);
    auto [it, inserted] = coords.try_emplace(key, c);
    if (!inserted && it->second != c) {
      throw InvarianceError("element is not C_n-invariant: orbit " + to_string(key) +
                            " carries coefficients " + to_string(it->second) + " and " +
                            to_string(c));
    }
    ++seen[key];
  }
  for (const auto& [key, count] : seen) {
    if (count != key.period) {
      throw InvarianceError("element is not C_n-invariant: orbit " + to_string(key) + " has " +
                            std::to_string(count) + " of " + std::to_string(key.period) +
                            " rotations");
    }
  }
  return coords;
}

OperatorElement from_coordinates(int n, const SymmetricCoordinates& coords) {
  OperatorElement out(n);
  for (const auto& [key, c] : coords) {
    require_same_size(n, key.representative.size(), "from_coordinates");
    PauliString s = key.representative;
    for (int r = 0; r < key.period; ++r) {
      out.add(s, c);
      s = rotate(s, 1);
    }
  }
  return out;
}

std::string to_string(const OrbitKey& k) {
  return "{rep: " + k.representative.str() + ", period: " + std::to_string(k.period) + "}";
}

}  // namespace dlakit
