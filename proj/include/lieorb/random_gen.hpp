#pragma once

#include <cstdint>
#include <string>

#include "lieorb/lie_algebra.hpp"

namespace lieorb {

// Composition-only random generation: raw structure constants almost never
// satisfy Jacobi, so instances are assembled from validated constructors
// (direct sums, semidirect products with validated representations, central
// extensions with elements of the cocycle space, quotients by series
// members). Every instance is fully validated on construction.

struct GeneratedPair {
  std::string description;
  LieAlgebra algebra;
  Subspace ideal;  // validated, nonzero
};

/// Deterministic k-th generated (algebra, ideal) pair for the seed.
GeneratedPair random_algebra_ideal(std::uint64_t seed, std::size_t k);

struct GeneratedSemidirect {
  std::string description;
  LieAlgebra base;
  Representation rep;
};

/// Deterministic k-th generated semidirect instance (base algebra with a
/// validated representation, module abelian by construction).
GeneratedSemidirect random_semidirect(std::uint64_t seed, std::size_t k);

}  // namespace lieorb
