#include "lieorb/subspace.hpp"

#include "lieorb/errors.hpp"

namespace lieorb {

Subspace::Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {
  // callers hand over an already-reduced basis; recover pivots
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (j < ambient_ && basis_.at(i, j).is_zero()) ++j;
    pivots_.push_back(j);
  }
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw AmbientMismatch("spanning vector has wrong length");
  if (vectors.empty()) return zero(ambient);
  auto r = rref(Matrix::from_rows(vectors));
  Matrix b(r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = r.reduced.at(i, j);
  return Subspace(ambient, std::move(b));
}

bool Subspace::contains(const Vec& v) const { return try_coords_of(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw AmbientMismatch("containment across ambient spaces");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::try_coords_of(const Vec& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector has wrong ambient dimension");
  // reduce v against the echelon basis; coordinates read off at pivot columns
  Vec coords(dim());
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rat c = rest[pivots_[i]];
    coords[i] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c * basis_.at(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Vec Subspace::coords_of(const Vec& v) const {
  auto c = try_coords_of(v);
  if (!c) throw NotContained("vector not in subspace");
  return *c;
}

Vec Subspace::from_coords(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate length mismatch");
  Vec v(ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!coords[i].is_zero())
      for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_.at(i, j);
  return v;
}

Subspace kernel(const Matrix& m) {
  Matrix b = kernel_basis(m);
  return Subspace(m.cols(), std::move(b));
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  // f annihilates s iff (basis) f = 0
  return kernel(s.basis());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum across ambient spaces");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("intersect across ambient spaces");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace complement(const Subspace& inner, const Subspace& outer) {
  if (inner.ambient_dim() != outer.ambient_dim())
    throw AmbientMismatch("complement across ambient spaces");
  if (!outer.contains(inner)) throw NotContained("inner subspace not inside outer");
  // extend inner's basis by outer basis vectors that enlarge the span
  std::vector<Vec> span_rows;
  for (std::size_t i = 0; i < inner.dim(); ++i) span_rows.push_back(inner.basis_vector(i));
  std::vector<Vec> added;
  Subspace running = inner;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    Vec v = outer.basis_vector(i);
    if (running.contains(v)) continue;
    span_rows.push_back(v);
    added.push_back(v);
    running = Subspace::span(outer.ambient_dim(), span_rows);
  }
  return Subspace::span(outer.ambient_dim(), added);
}

}  // namespace lieorb
