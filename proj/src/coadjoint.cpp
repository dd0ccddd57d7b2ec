#include "lieorb/coadjoint.hpp"

#include "lieorb/errors.hpp"

namespace lieorb {

Matrix ad_star(const LieAlgebra& L, const Vec& xi) {
  const std::size_t d = L.dim();
  if (xi.size() != d) throw DimensionMismatch("ad* argument length");
  // (M s)_j = s([xi, e_j])
  Matrix m(d, d);
  for (const auto& t : L.triples()) {
    if (!xi[t.left].is_zero()) m.at(t.right, t.out) += xi[t.left] * t.value;
    if (!xi[t.right].is_zero()) m.at(t.left, t.out) -= xi[t.right] * t.value;
  }
  return m;
}

Matrix kirillov_form(const LieAlgebra& L, const Covector& sigma) {
  const std::size_t d = L.dim();
  if (sigma.space_dim != d) throw DimensionMismatch("covector not on the algebra");
  Matrix b(d, d);
  for (const auto& t : L.triples()) {
    const Rat v = t.value * sigma.coords[t.out];
    if (v.is_zero()) continue;
    b.at(t.left, t.right) += v;
    b.at(t.right, t.left) -= v;
  }
  return b;
}

Subspace isotropy(const LieAlgebra& L, const Covector& sigma) {
  return kernel(kirillov_form(L, sigma));
}

Matrix rep_action_matrix(const LieAlgebra& L, const IdealRef& n, const Covector& nu) {
  const std::size_t d = L.dim(), m = n.space.dim();
  if (nu.space_dim != m) throw DimensionMismatch("covector not on the ideal");
  // row r, column i: nu-value of [e_i, b_r], which lies in the ideal
  Matrix out(m, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec ei = unit_vec(d, i);
    for (std::size_t r = 0; r < m; ++r) {
      const Vec br = L.bracket(ei, n.space.basis_vector(r));
      out.at(r, i) = nu(n.space.coords_of(br));
    }
  }
  return out;
}

Subspace rep_isotropy(const LieAlgebra& L, const IdealRef& n, const Covector& nu) {
  return kernel(rep_action_matrix(L, n, nu));
}

IndexReport index(const LieAlgebra& L, std::uint64_t seed, std::size_t samples, long bound) {
  const std::size_t d = L.dim();
  GenericityCertificate cert;
  cert.seed = seed;
  cert.coefficient_bound = bound;
  cert.witness = Covector::zero(d);
  for_each_sample(seed, samples, bound, d, [&](const Covector& sigma) {
    ++cert.samples_tried;
    const std::size_t r = rank(kirillov_form(L, sigma));
    if (r > cert.achieved_rank || cert.samples_tried == 1) {
      cert.achieved_rank = r;
      cert.witness = sigma;
    }
    return cert.achieved_rank < d;  // cannot improve past full rank
  });
  return IndexReport{d - cert.achieved_rank, std::move(cert)};
}

RepIndexReport rep_orbit_coindex(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                                 std::size_t samples, long bound) {
  const std::size_t d = L.dim(), m = n.space.dim();
  GenericityCertificate cert;
  cert.seed = seed;
  cert.coefficient_bound = bound;
  cert.witness = Covector::zero(m);
  for_each_sample(seed, samples, bound, m, [&](const Covector& nu) {
    ++cert.samples_tried;
    const std::size_t r = rank(rep_action_matrix(L, n, nu));
    if (r > cert.achieved_rank || cert.samples_tried == 1) {
      cert.achieved_rank = r;
      cert.witness = nu;
    }
    return cert.achieved_rank < m;
  });
  return RepIndexReport{m - cert.achieved_rank, d - cert.achieved_rank, std::move(cert)};
}

bool is_regular(const LieAlgebra& L, const Covector& sigma, const IndexReport& idx) {
  return isotropy(L, sigma).dim() == idx.algebra_index;
}

}  // namespace lieorb
