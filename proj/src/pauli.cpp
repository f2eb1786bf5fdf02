#include "dlakit/pauli.hpp"

#include <string>

#include "dlakit/errors.hpp"

namespace dlakit {

char to_char(SiteSymbol s) {
  switch (s) {
    case SiteSymbol::I: return '1';
    case SiteSymbol::X: return 'X';
    case SiteSymbol::Y: return 'Y';
    case SiteSymbol::Z: return 'Z';
  }
  return '?';
}

SiteSymbol symbol_from_char(char c) {
  switch (c) {
    case '1':
    case 'I': return SiteSymbol::I;
    case 'X': return SiteSymbol::X;
    case 'Y': return SiteSymbol::Y;
    case 'Z': return SiteSymbol::Z;
    default: throw StructuralError(std::string("invalid Pauli symbol '") + c + "'");
  }
}

namespace {

// (x, z) encoding: X = (1,0), Z = (0,1), Y = (1,1).
constexpr bool xbit(SiteSymbol s) { return s == SiteSymbol::X || s == SiteSymbol::Y; }
constexpr bool zbit(SiteSymbol s) { return s == SiteSymbol::Z || s == SiteSymbol::Y; }

constexpr SiteSymbol from_bits(bool x, bool z) {
  if (x) return z ? SiteSymbol::Y : SiteSymbol::X;
  return z ? SiteSymbol::Z : SiteSymbol::I;
}

void check_sites(int n) {
  if (n < kMinSites || n > kMaxSites) {
    throw StructuralError("n must be >= " + std::to_string(kMinSites) + " and <= " +
                          std::to_string(kMaxSites) + " (got " + std::to_string(n) + ")");
  }
}

}  // namespace

SiteProduct site_product(SiteSymbol a, SiteSymbol b) {
  if (a == SiteSymbol::I) return {b, +1, ProductKind::Identity};
  if (b == SiteSymbol::I) return {a, +1, ProductKind::Identity};
  if (a == b) return {SiteSymbol::I, +1, ProductKind::Same};
  const SiteSymbol c = from_bits(xbit(a) != xbit(b), zbit(a) != zbit(b));
  const bool cyclic = (a == SiteSymbol::X && b == SiteSymbol::Y) ||
                      (a == SiteSymbol::Y && b == SiteSymbol::Z) ||
                      (a == SiteSymbol::Z && b == SiteSymbol::X);
  return {c, cyclic ? +1 : -1, ProductKind::Product};
}

PauliString::PauliString(int n) : PauliString(n, 0, 0) {}

PauliString::PauliString(int n, std::uint64_t xbits, std::uint64_t zbits)
    : n_(n), x_(xbits), z_(zbits) {
  check_sites(n);
  const std::uint64_t mask = site_mask(n);
  if ((x_ & ~mask) != 0 || (z_ & ~mask) != 0) {
    throw StructuralError("Pauli bits set beyond site count");
  }
}

PauliString PauliString::parse(std::string_view word) {
  const int n = static_cast<int>(word.size());
  check_sites(n);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int i = 0; i < n; ++i) {
    const SiteSymbol s = symbol_from_char(word[static_cast<std::size_t>(i)]);
    if (xbit(s)) x |= std::uint64_t{1} << i;
    if (zbit(s)) z |= std::uint64_t{1} << i;
  }
  return PauliString(n, x, z);
}

SiteSymbol PauliString::at(int site) const {
  return from_bits(((x_ >> site) & 1u) != 0, ((z_ >> site) & 1u) != 0);
}

PauliString PauliString::with(int site, SiteSymbol s) const {
  const std::uint64_t bit = std::uint64_t{1} << site;
  std::uint64_t x = x_ & ~bit;
  std::uint64_t z = z_ & ~bit;
  if (xbit(s)) x |= bit;
  if (zbit(s)) z |= bit;
  return PauliString(n_, x, z);
}

std::string PauliString::str() const {
  std::string out(static_cast<std::size_t>(n_), '1');
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = to_char(at(i));
  return out;
}

std::strong_ordering PauliString::operator<=>(const PauliString& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  // Symbol codes I=0, X=1, Y=2, Z=3 split as hi = z, lo = x ^ z.
  const std::uint64_t hi_a = z_, lo_a = x_ ^ z_;
  const std::uint64_t hi_b = o.z_, lo_b = o.x_ ^ o.z_;
  const std::uint64_t diff = (hi_a ^ hi_b) | (lo_a ^ lo_b);
  if (diff == 0) return std::strong_ordering::equal;
  const int i = std::countr_zero(diff);
  const unsigned ca = static_cast<unsigned>(((hi_a >> i) & 1u) << 1 | ((lo_a >> i) & 1u));
  const unsigned cb = static_cast<unsigned>(((hi_b >> i) & 1u) << 1 | ((lo_b >> i) & 1u));
  return ca <=> cb;
}

std::optional<StringBracket> string_bracket(const PauliString& s1, const PauliString& s2) {
  if (s1.size() != s2.size()) {
    throw StructuralError("string_bracket: length mismatch (" + std::to_string(s1.size()) +
                          " vs " + std::to_string(s2.size()) + ")");
  }
  const std::uint64_t x1 = s1.xbits(), z1 = s1.zbits();
  const std::uint64_t x2 = s2.xbits(), z2 = s2.zbits();
  const std::uint64_t differing = (x1 | z1) & (x2 | z2) & ((x1 ^ x2) | (z1 ^ z2));
  const int d = std::popcount(differing);
  if ((d & 1) == 0) return std::nullopt;

  // Cyclic ordered pairs (X,Y), (Y,Z), (Z,X); every other differing pair is anticyclic.
  const std::uint64_t cyclic = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
  const int anticyclic = std::popcount(differing & ~cyclic);
  const int k = (d - 1) / 2;
  const int sign = (((k + anticyclic) & 1) == 0) ? 1 : -1;
  return StringBracket{2 * sign, PauliString(s1.size(), x1 ^ x2, z1 ^ z2)};
}

}  // namespace dlakit
