#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieorb/covector.hpp"
#include "lieorb/matrix.hpp"
#include "lieorb/subspace.hpp"

namespace lieorb {

/// One structure-constant entry: [e_left, e_right] has coefficient `value`
/// on e_out. Stored with left < right; the mirrored entry is implied.
struct BracketTriple {
  std::size_t left = 0, right = 0, out = 0;
  Rat value;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
/// Construction verifies antisymmetry consistency and the Jacobi identity
/// exactly; any instance reachable through the public constructors is valid.
class LieAlgebra {
 public:
  /// The zero algebra.
  LieAlgebra() : dim_(0) {}

  /// Builds from a sparse bracket table. Entries may use either index order;
  /// [j,i] entries are folded in via antisymmetry. Throws AntisymmetryConflict
  /// on inconsistent duplicates and JacobiViolation with the offending triple.
  static LieAlgebra create(std::size_t dim, const std::vector<BracketTriple>& entries,
                           std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<BracketTriple>& triples() const { return triples_; }

  /// c[i][j][k], any index order.
  Rat structure(std::size_t i, std::size_t j, std::size_t k) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const { return triples_.empty(); }
  /// Entry-wise equality of dimensions and structure constants.
  bool same_structure(const LieAlgebra& o) const;

 private:
  LieAlgebra(std::size_t dim, std::vector<BracketTriple> triples, std::vector<std::string> labels)
      : dim_(dim), triples_(std::move(triples)), labels_(std::move(labels)) {}
  void verify_jacobi() const;

  std::size_t dim_;
  std::vector<BracketTriple> triples_;  // sorted by (left, right, out), left < right
  std::vector<std::string> labels_;
};

/// A subspace verified to satisfy [L, space] within space.
struct IdealRef {
  Subspace space;
};

bool is_ideal(const LieAlgebra& L, const Subspace& s);
/// Validates and wraps; throws NotAnIdeal.
IdealRef make_ideal(const LieAlgebra& L, const Subspace& s);

/// Quotient data: projection is a Lie algebra homomorphism onto the quotient
/// and section is a chosen right inverse (projection * section = identity).
struct QuotientMap {
  LieAlgebra parent;
  Subspace ideal;
  LieAlgebra quotient;
  Matrix projection;  // quotient.dim x parent.dim
  Matrix section;     // parent.dim x quotient.dim
};

QuotientMap quotient(const LieAlgebra& L, const IdealRef& n);

/// beta_bar o projection: embeds quotient covectors into the parent dual;
/// the image annihilates the ideal.
Covector pullback_covector(const QuotientMap& q, const Covector& beta_bar);

/// alpha o section for alpha vanishing on the ideal: the inverse of the
/// pullback embedding on its image. Throws NotAnExtension otherwise.
Covector push_covector(const QuotientMap& q, const Covector& alpha);

/// Finite-dimensional representation, action[i] = matrix of e_i on the module.
struct Representation {
  LieAlgebra domain;
  std::size_t space_dim = 0;
  std::vector<Matrix> action;

  Matrix act(const Vec& x) const;
};

/// Verifies rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs.
Representation make_representation(const LieAlgebra& L, std::vector<Matrix> action);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct SemidirectProduct {
  LieAlgebra algebra;  // basis: domain basis then module basis
  IdealRef module_ideal;
};

/// k x| V with bracket ([z1,z2], z1.y2 - z2.y1); V sits as an abelian ideal.
SemidirectProduct semidirect(const LieAlgebra& k, const Representation& rep);

/// Skew bilinear form on a Lie algebra satisfying the 2-cocycle identity
/// gamma([x,y],z) + gamma([y,z],x) + gamma([z,x],y) = 0.
struct Cocycle2 {
  LieAlgebra algebra;
  Matrix form;  // dim x dim, skew

  Rat operator()(std::size_t i, std::size_t j) const { return form.at(i, j); }
};

/// Validates skewness and the cocycle identity; throws NotACocycle.
Cocycle2 make_cocycle(const LieAlgebra& q, Matrix form);

/// One-dimensional central extension: new generator z is central and
/// [x,y]_new = [x,y] + c(x,y) z.
LieAlgebra central_extension(const LieAlgebra& q, const Cocycle2& c);

/// Basis of the space of all 2-cocycles on q (coboundaries included), each
/// returned as its skew matrix.
std::vector<Matrix> cocycle_space(const LieAlgebra& q);

/// A subalgebra materialized in the coordinates of its canonical basis.
struct SubalgebraMap {
  LieAlgebra algebra;
  Subspace space;  // basis rows = inclusion into the parent
};

/// Restricts the bracket to a subspace closed under it; throws NotASubalgebra.
SubalgebraMap subalgebra(const LieAlgebra& L, const Subspace& s);

/// Structure constants in the basis given by the rows of new_basis
/// (which must be invertible).
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& new_basis);

Subspace center(const LieAlgebra& L);
/// span{ [a, b] : a in A, b in B }.
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);
std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
bool is_abelian_subspace(const LieAlgebra& L, const Subspace& s);

}  // namespace lieorb
