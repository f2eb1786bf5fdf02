#pragma once

// Pauli strings over {I, X, Y, Z}.
//
// A PauliString labels i * (s_1 (x) s_2 (x) ... (x) s_n), the skew-Hermitian
// matrix obtained from Pauli factors. Throughout this library the y-factor is
// sigma_y = [[0, i], [-i, 0]], the opposite sign to the usual physics
// convention. With that choice [i sx, i sy] = 2 i sz, and the cyclic product
// rule X*Y -> +Z, Y*Z -> +X, Z*X -> +Y holds with a plus sign.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dlakit {

inline constexpr int kMinSites = 3;
inline constexpr int kMaxSites = 64;

enum class SiteSymbol : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(SiteSymbol s);  // I prints as '1'
SiteSymbol symbol_from_char(char c);

enum class ProductKind : std::uint8_t { Product, Same, Identity };

struct SiteProduct {
  SiteSymbol result;
  int sign;  // +1 or -1 for Product; +1 otherwise
  ProductKind kind;
  bool operator==(const SiteProduct&) const = default;
};

/// Single-site product table used by string brackets.
SiteProduct site_product(SiteSymbol a, SiteSymbol b);

class PauliString {
 public:
  /// All-identity string on n sites.
  explicit PauliString(int n);
  PauliString(int n, std::uint64_t xbits, std::uint64_t zbits);

  /// Parses a word over {1, I, X, Y, Z}; site 1 is the leftmost character.
  static PauliString parse(std::string_view word);

  int size() const { return n_; }
  std::uint64_t xbits() const { return x_; }
  std::uint64_t zbits() const { return z_; }
  std::uint64_t support() const { return x_ | z_; }
  bool is_identity() const { return (x_ | z_) == 0; }

  /// Site index is 0-based (site 1 of the printed word is index 0).
  SiteSymbol at(int site) const;
  PauliString with(int site, SiteSymbol s) const;

  std::string str() const;

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }

  /// Lexicographic on the printed word with I < X < Y < Z.
  std::strong_ordering operator<=>(const PauliString& o) const;

 private:
  int n_;
  std::uint64_t x_;
  std::uint64_t z_;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& s) const noexcept {
    std::uint64_t h = s.xbits() * 0x9E3779B97F4A7C15ull;
    h ^= std::rotl(s.zbits() * 0xC2B2AE3D27D4EB4Full, 31);
    h ^= static_cast<std::uint64_t>(s.size()) << 57;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// One scaled string: the output shape of a single string bracket. The
/// coefficient is always +/-2 for a nonzero bracket.
struct StringBracket {
  int coeff;
  PauliString string;
};

/// [s1, s2] for the skew-Hermitian matrices labelled by s1 and s2.
///
/// Let D be the positions where both symbols are non-identity and differ.
/// An even |D| (including zero) gives zero. For |D| = 2k+1 the result is
/// 2(-1)^k times the product of the per-site cyclic signs over D, on the
/// string formed by the site-wise products. Throws StructuralError if the
/// lengths differ.
std::optional<StringBracket> string_bracket(const PauliString& s1, const PauliString& s2);

/// Low n bits set.
inline std::uint64_t site_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace dlakit
