#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieorb/matrix.hpp"

namespace lieorb {

/// A subspace of Q^n held by its unique canonical basis: the reduced
/// row-echelon form of any spanning set. Two Subspace values are equal as
/// sets iff their stored bases are identical entry-wise, so set equality is
/// plain value equality.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }
  /// Span of the given vectors, canonicalized.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis, one vector per row, reduced echelon, pivots ascending.
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis; throws NotContained.
  Vec coords_of(const Vec& v) const;
  std::optional<Vec> try_coords_of(const Vec& v) const;
  /// Linear combination of basis vectors with the given coordinates.
  Vec from_coords(const Vec& coords) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Subspace(std::size_t ambient, Matrix basis);
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
  friend Subspace kernel(const Matrix& m);
};

/// {x : m x = 0} in Q^cols.
Subspace kernel(const Matrix& m);

/// Covectors vanishing on s (or, applied to a dual subspace, the vectors it
/// annihilates); an involution that reverses inclusion.
Subspace annihilator(const Subspace& s);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// A complement c of inner within outer: inner o+ c = outer.
/// Preconditions: equal ambient dims, inner contained in outer.
Subspace complement(const Subspace& inner, const Subspace& outer);

}  // namespace lieorb
