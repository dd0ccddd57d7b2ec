#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lieorb/lie_algebra.hpp"

namespace lieorb {

/// A named, validated algebra with its designated ideals and, where useful,
/// a sample covector and a split form (k, rep) for the semidirect entries.
struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  std::vector<std::pair<std::string, Subspace>> ideals;
  std::optional<Covector> sigma;
  std::optional<std::pair<LieAlgebra, Representation>> split_form;
};

/// Looks up a catalog algebra; "abelian:n" is parsed with 0 <= n <= 32.
/// Throws UnknownName.
CatalogEntry catalog(const std::string& name);

/// All fixed catalog names (a concrete abelian size stands in for the family).
std::vector<std::string> catalog_names();

/// Every designated (algebra, ideal) pair, for verification sweeps.
struct CatalogPair {
  std::string algebra_name;
  std::string ideal_name;
  LieAlgebra algebra;
  Subspace ideal;
};
std::vector<CatalogPair> catalog_pairs();

}  // namespace lieorb
