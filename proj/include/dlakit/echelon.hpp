#pragma once

// Exact rational elimination: a sparse semi-echelon basis for incremental
// rank decisions, and a dense RREF / nullspace for small linear systems.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dlakit/rational.hpp"

namespace dlakit {

template <class Key>
using SparseRow = std::map<Key, Rational>;

/// Scales a nonzero row to a primitive integer vector with a positive
/// leading coefficient.
template <class Key>
void make_primitive(SparseRow<Key>& row) {
  if (row.empty()) return;
  mpz_class den_lcm = 1;
  for (const auto& [k, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& [k, v] : row) {
    mpz_class scaled = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(row.begin()->second) < 0) factor = -factor;
  for (auto& [k, v] : row) v *= factor;
}

/// Rows are stored keyed by their leading (smallest) key; no two rows share
/// a leading key. Reduction visits pivots in increasing key order, so a row
/// only ever modifies keys at or after its own pivot.
template <class Key>
class SparseEchelon {
 public:
  using Row = SparseRow<Key>;

  std::size_t rank() const { return rows_.size(); }

  Row reduce(Row v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Rational factor = it->second / pivot->second.begin()->second;
      for (const auto& [k, c] : pivot->second) {
        auto [slot, inserted] = v.try_emplace(k, -factor * c);
        if (!inserted) {
          slot->second -= factor * c;
          if (sgn(slot->second) == 0) v.erase(slot);
        }
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Row& v) const { return reduce(v).empty(); }

  /// Reduces v; if a nonzero residual remains it is made primitive, stored
  /// and returned.
  std::optional<Row> insert(const Row& v) {
    Row residual = reduce(v);
    if (residual.empty()) return std::nullopt;
    make_primitive(residual);
    rows_.emplace(residual.begin()->first, residual);
    return residual;
  }

 private:
  std::map<Key, Row> rows_;
};

/// Dense row-major rational matrix.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

/// Basis of {v : M v = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m, std::size_t cols);

}  // namespace dlakit
