#include "lieorb/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {
std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}
}  // namespace

LieAlgebra LieAlgebra::create(std::size_t dim, const std::vector<BracketTriple>& entries,
                              std::vector<std::string> labels) {
  // Fold entries to left < right, tracking which orientation supplied each
  // value so inconsistent [i,j] / [j,i] pairs are reported.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> folded;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> seen_forward, seen_backward;
  for (const auto& t : entries) {
    if (t.left >= dim || t.right >= dim || t.out >= dim)
      throw DimensionMismatch("bracket index out of range");
    if (t.value.is_zero()) continue;
    if (t.left == t.right)
      throw AntisymmetryConflict("nonzero bracket [e_i, e_i] at index " + std::to_string(t.left));
    const bool forward = t.left < t.right;
    const auto key = forward ? std::make_tuple(t.left, t.right, t.out)
                             : std::make_tuple(t.right, t.left, t.out);
    const Rat val = forward ? t.value : -t.value;
    auto it = folded.find(key);
    if (it == folded.end()) {
      folded[key] = val;
    } else if (it->second != val) {
      throw AntisymmetryConflict("conflicting values for bracket entry " +
                                 triple_str(std::get<0>(key), std::get<1>(key), std::get<2>(key)));
    }
    (forward ? seen_forward : seen_backward)[key] = true;
  }

  std::vector<BracketTriple> triples;
  triples.reserve(folded.size());
  for (const auto& [key, val] : folded)
    triples.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), val});

  if (labels.empty()) {
    labels.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  } else if (labels.size() != dim) {
    throw DimensionMismatch("label count mismatch");
  }

  LieAlgebra L(dim, std::move(triples), std::move(labels));
  L.verify_jacobi();
  return L;
}

Rat LieAlgebra::structure(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rat(0);
  const bool flip = i > j;
  const auto key = flip ? std::make_tuple(j, i, k) : std::make_tuple(i, j, k);
  auto it = std::lower_bound(triples_.begin(), triples_.end(), key, [](const BracketTriple& t, const auto& q) {
    return std::make_tuple(t.left, t.right, t.out) < q;
  });
  if (it == triples_.end() || std::make_tuple(it->left, it->right, it->out) != key) return Rat(0);
  return flip ? -it->value : it->value;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  if (i == j) return out;
  const bool flip = i > j;
  const std::size_t a = flip ? j : i, b = flip ? i : j;
  for (const auto& t : triples_)
    if (t.left == a && t.right == b) out[t.out] = flip ? -t.value : t.value;
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operand length");
  Vec out(dim_);
  for (const auto& t : triples_) {
    const Rat coeff = x[t.left] * y[t.right] - x[t.right] * y[t.left];
    if (!coeff.is_zero()) out[t.out] += coeff * t.value;
  }
  return out;
}

void LieAlgebra::verify_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Vec bij = bracket_basis(i, j);
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec ek(dim_), ei(dim_), ej(dim_);
        ek[k] = 1;
        ei[i] = 1;
        ej[j] = 1;
        Vec residual = bracket(bij, ek);
        residual = residual + bracket(bracket_basis(j, k), ei);
        residual = residual + bracket(bracket_basis(k, i), ej);
        if (!is_zero(residual)) {
          std::ostringstream os;
          os << "Jacobi identity fails on basis triple " << triple_str(i, j, k) << ", residual (";
          for (std::size_t m = 0; m < dim_; ++m) os << (m ? "," : "") << residual[m];
          os << ")";
          throw JacobiViolation(i, j, k, os.str());
        }
      }
    }
}

bool LieAlgebra::same_structure(const LieAlgebra& o) const {
  if (dim_ != o.dim_ || triples_.size() != o.triples_.size()) return false;
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    const auto &a = triples_[t], &b = o.triples_[t];
    if (a.left != b.left || a.right != b.right || a.out != b.out || a.value != b.value) return false;
  }
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw AmbientMismatch("ideal candidate in wrong space");
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Vec ei(L.dim());
    ei[i] = 1;
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(L.bracket(ei, s.basis_vector(r)))) return false;
  }
  return true;
}

IdealRef make_ideal(const LieAlgebra& L, const Subspace& s) {
  if (!is_ideal(L, s)) throw NotAnIdeal("subspace is not an ideal");
  return IdealRef{s};
}

QuotientMap quotient(const LieAlgebra& L, const IdealRef& n) {
  const std::size_t d = L.dim(), k = n.space.dim(), q = d - k;
  const auto& pivots = n.space.pivots();
  std::vector<bool> is_pivot(d, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < d; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  // Section basis: standard vectors at the ideal's non-pivot columns.
  Matrix section(d, q), projection(q, d);
  for (std::size_t m = 0; m < q; ++m) section.at(free_cols[m], m) = 1;
  for (std::size_t m = 0; m < q; ++m) {
    projection.at(m, free_cols[m]) = 1;
    for (std::size_t r = 0; r < k; ++r)
      projection.at(m, pivots[r]) = -n.space.basis().at(r, free_cols[m]);
  }

  std::vector<BracketTriple> triples;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      const Vec br = projection.apply(L.bracket_basis(free_cols[a], free_cols[b]));
      for (std::size_t m = 0; m < q; ++m)
        if (!br[m].is_zero()) triples.push_back({a, b, m, br[m]});
    }
  LieAlgebra Q = LieAlgebra::create(q, triples);

  // Well-definedness: projection must be a homomorphism on every basis pair.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec lhs = projection.apply(L.bracket_basis(i, j));
      const Vec rhs = Q.bracket(projection.apply(unit_vec(d, i)), projection.apply(unit_vec(d, j)));
      if (lhs != rhs) throw NotAnIdeal("projection is not a Lie homomorphism");
    }

  return QuotientMap{L, n.space, std::move(Q), std::move(projection), std::move(section)};
}

Covector pullback_covector(const QuotientMap& q, const Covector& beta_bar) {
  if (beta_bar.space_dim != q.quotient.dim()) throw DimensionMismatch("covector not on quotient");
  return Covector(q.parent.dim(), q.projection.transpose().apply(beta_bar.coords));
}

Covector push_covector(const QuotientMap& q, const Covector& alpha) {
  if (alpha.space_dim != q.parent.dim()) throw DimensionMismatch("covector not on parent");
  for (std::size_t r = 0; r < q.ideal.dim(); ++r)
    if (!alpha(q.ideal.basis_vector(r)).is_zero())
      throw NotAnExtension("covector does not vanish on the ideal");
  return Covector(q.quotient.dim(), q.section.transpose().apply(alpha.coords));
}

Matrix Representation::act(const Vec& x) const {
  Matrix m(space_dim, space_dim);
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t a = 0; a < space_dim; ++a)
      for (std::size_t b = 0; b < space_dim; ++b) m.at(a, b) += x[i] * action[i].at(a, b);
  }
  return m;
}

Representation make_representation(const LieAlgebra& L, std::vector<Matrix> action) {
  if (action.size() != L.dim()) throw NotARepresentation("need one action matrix per basis element");
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m) throw NotARepresentation("action matrices must be square and equal-sized");
  Representation rep{L, m, std::move(action)};
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Matrix lhs = rep.act(L.bracket_basis(i, j));
      const Matrix rhs = rep.action[i] * rep.action[j] - rep.action[j] * rep.action[i];
      if (lhs != rhs)
        throw NotARepresentation("homomorphism property fails on basis pair " +
                                 std::to_string(i) + "," + std::to_string(j));
    }
  return rep;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<BracketTriple> triples = a.triples();
  for (const auto& t : b.triples())
    triples.push_back({t.left + a.dim(), t.right + a.dim(), t.out + a.dim(), t.value});
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return LieAlgebra::create(a.dim() + b.dim(), triples, std::move(labels));
}

SemidirectProduct semidirect(const LieAlgebra& k, const Representation& rep) {
  if (!rep.domain.same_structure(k)) throw NotARepresentation("representation domain mismatch");
  const std::size_t dk = k.dim(), m = rep.space_dim, d = dk + m;
  std::vector<BracketTriple> triples = k.triples();
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t a = 0; a < m; ++a) {
        const Rat& v = rep.action[i].at(a, b);
        if (!v.is_zero()) triples.push_back({i, dk + b, dk + a, v});
      }
  LieAlgebra g = LieAlgebra::create(d, triples);

  std::vector<Vec> vrows;
  for (std::size_t a = 0; a < m; ++a) {
    Vec v(d);
    v[dk + a] = 1;
    vrows.push_back(std::move(v));
  }
  auto v_ideal = make_ideal(g, Subspace::span(d, vrows));
  return SemidirectProduct{std::move(g), std::move(v_ideal)};
}

Cocycle2 make_cocycle(const LieAlgebra& q, Matrix form) {
  const std::size_t d = q.dim();
  if (form.rows() != d || form.cols() != d) throw NotACocycle("cocycle matrix shape mismatch");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (form.at(i, j) != -form.at(j, i)) throw NotACocycle("cocycle matrix not skew");
  auto pair = [&](const Vec& x, std::size_t c) {
    Rat s;
    for (std::size_t i = 0; i < d; ++i) s += x[i] * form.at(i, c);
    return s;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Rat s = pair(q.bracket_basis(i, j), k) + pair(q.bracket_basis(j, k), i) +
                      pair(q.bracket_basis(k, i), j);
        if (!s.is_zero())
          throw NotACocycle("cocycle identity fails on basis triple " + triple_str(i, j, k));
      }
  return Cocycle2{q, std::move(form)};
}

LieAlgebra central_extension(const LieAlgebra& q, const Cocycle2& c) {
  if (!c.algebra.same_structure(q)) throw NotACocycle("cocycle defined on a different algebra");
  make_cocycle(q, c.form);  // revalidate; Jacobi of the extension is equivalent to this
  const std::size_t d = q.dim();
  std::vector<BracketTriple> triples = q.triples();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!c.form.at(i, j).is_zero()) triples.push_back({i, j, d, c.form.at(i, j)});
  std::vector<std::string> labels = q.labels();
  labels.push_back("z");
  return LieAlgebra::create(d + 1, triples, std::move(labels));
}

std::vector<Matrix> cocycle_space(const LieAlgebra& q) {
  const std::size_t d = q.dim();
  // unknowns: gamma[i][j] for i < j
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) vars.emplace_back(i, j);
  auto var_index = [&](std::size_t i, std::size_t j) {
    // i != j; returns (index, sign)
    const bool flip = i > j;
    const std::size_t a = flip ? j : i, b = flip ? i : j;
    std::size_t idx = 0;
    for (; idx < vars.size(); ++idx)
      if (vars[idx] == std::make_pair(a, b)) break;
    return std::make_pair(idx, flip ? Rat(-1) : Rat(1));
  };

  std::vector<Vec> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vec row(vars.size());
        auto add_term = [&](const Vec& bracket_vec, std::size_t c) {
          for (std::size_t m = 0; m < d; ++m) {
            if (bracket_vec[m].is_zero() || m == c) continue;
            auto [idx, sign] = var_index(m, c);
            row[idx] += sign * bracket_vec[m];
          }
        };
        add_term(q.bracket_basis(i, j), k);
        add_term(q.bracket_basis(j, k), i);
        add_term(q.bracket_basis(k, i), j);
        rows.push_back(std::move(row));
      }

  Matrix constraint = rows.empty() ? Matrix(0, vars.size()) : Matrix::from_rows(rows);
  const Matrix null_rows = kernel_basis(constraint);

  std::vector<Matrix> basis;
  for (std::size_t r = 0; r < null_rows.rows(); ++r) {
    Matrix f(d, d);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      f.at(vars[v].first, vars[v].second) = null_rows.at(r, v);
      f.at(vars[v].second, vars[v].first) = -null_rows.at(r, v);
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

SubalgebraMap subalgebra(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw AmbientMismatch("subalgebra candidate in wrong space");
  const std::size_t m = s.dim();
  std::vector<BracketTriple> triples;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t t = r + 1; t < m; ++t) {
      const Vec br = L.bracket(s.basis_vector(r), s.basis_vector(t));
      auto coords = s.try_coords_of(br);
      if (!coords) throw NotASubalgebra("subspace not closed under the bracket");
      for (std::size_t k = 0; k < m; ++k)
        if (!(*coords)[k].is_zero()) triples.push_back({r, t, k, (*coords)[k]});
    }
  return SubalgebraMap{LieAlgebra::create(m, triples), s};
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& new_basis) {
  const std::size_t d = L.dim();
  if (new_basis.rows() != d || new_basis.cols() != d)
    throw DimensionMismatch("basis change needs a square matrix of full size");
  if (rank(new_basis) != d) throw Error("basis change matrix is singular");
  const Matrix pt = new_basis.transpose();
  std::vector<BracketTriple> triples;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec w = L.bracket(new_basis.row(i), new_basis.row(j));
      auto x = solve(pt, w);
      if (!x) throw Error("basis change matrix is singular");
      for (std::size_t k = 0; k < d; ++k)
        if (!(*x)[k].is_zero()) triples.push_back({i, j, k, (*x)[k]});
    }
  return LieAlgebra::create(d, triples);
}

Subspace center(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  Matrix m(d * d, d);
  for (const auto& t : L.triples()) {
    // x central needs sum_i x_i c[i][j][k] = 0 for all (j,k)
    m.at(t.right * d + t.out, t.left) += t.value;
    m.at(t.left * d + t.out, t.right) -= t.value;
  }
  return kernel(m);
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t t = 0; t < b.dim(); ++t)
      rows.push_back(L.bracket(a.basis_vector(r), b.basis_vector(t)));
  return Subspace::span(L.dim(), rows);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  for (;;) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  std::vector<Subspace> series{Subspace::full(L.dim())};
  for (;;) {
    Subspace next = bracket_span(L, series.front(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

bool is_abelian_subspace(const LieAlgebra& L, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t t = r + 1; t < s.dim(); ++t)
      if (!is_zero(L.bracket(s.basis_vector(r), s.basis_vector(t)))) return false;
  return true;
}

}  // namespace lieorb
