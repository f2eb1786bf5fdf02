#pragma once

// Randomized property checks and the symbolic-vs-dense driver behind
// `dlakit verify`.

#include <cstdint>
#include <random>
#include <vector>

#include "dlakit/element.hpp"
#include "dlakit/structure.hpp"

namespace dlakit {

using Rng = std::mt19937_64;

PauliString random_string(int n, Rng& rng, bool allow_identity = false);

/// terms distinct non-identity strings with integer coefficients in
/// [-range, range] \ {0}.
OperatorElement random_element(int n, int terms, Rng& rng, int range = 5);

struct PropertyCounts {
  int triples = 200;         // antisymmetry + Jacobi
  int symmetrized_pairs = 200;
  int dense_pairs = 2000;    // string brackets against dense matrices (oracle only)
};

struct VerifyReport {
  int n;
  bool oracle;
  std::uint64_t seed;
  std::vector<Check> checks;
  bool passed;
};

/// Symbolic checks: closure dimension and span, commutator table, center,
/// antisymmetry, Jacobi, symmetrized bracket identity. With oracle (n <= 6)
/// adds dense_cross_check and string brackets against matrix commutators.
VerifyReport run_verify(int n, bool oracle, std::uint64_t seed, const PropertyCounts& counts = {});

/// Every ordered pair of strings on n sites (n <= 4) checked against the
/// dense commutator; returns the number of mismatches.
std::size_t exhaustive_string_mismatches(int n);

/// count random string pairs checked against the dense commutator.
std::size_t random_string_mismatches(int n, int count, Rng& rng);

}  // namespace dlakit
