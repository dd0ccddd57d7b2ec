#include "lieorb/reduction.hpp"

#include <optional>

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {

/// Rows of `local` (a subspace of the parent's coordinate space) re-expressed
/// in the coordinates of `frame`'s canonical basis.
Subspace express_in(const Subspace& frame, const Subspace& sub) {
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < sub.dim(); ++r) rows.push_back(frame.coords_of(sub.basis_vector(r)));
  return Subspace::span(frame.dim(), rows);
}

}  // namespace

Subspace natural_kernel(const LieAlgebra& L, const IdealRef& n, const Covector& nu) {
  const std::size_t d = L.dim();
  const Subspace g_nu = rep_isotropy(L, n, nu);
  const Subspace n_nu = intersect(n.space, g_nu);

  Matrix cond(1, n_nu.dim());
  for (std::size_t t = 0; t < n_nu.dim(); ++t)
    cond.at(0, t) = nu(n.space.coords_of(n_nu.basis_vector(t)));
  const Subspace param_kernel = kernel(cond);
  std::vector<Vec> rows;
  for (std::size_t t = 0; t < param_kernel.dim(); ++t)
    rows.push_back(n_nu.from_coords(param_kernel.basis_vector(t)));
  Subspace result = Subspace::span(d, rows);

  if (n_nu.dim() - result.dim() > 1)
    throw IdealityViolation("ker(nu|n_nu) has codimension larger than one");
  // [g_nu, n_nu] lies in the natural kernel
  for (std::size_t i = 0; i < g_nu.dim(); ++i)
    for (std::size_t t = 0; t < n_nu.dim(); ++t)
      if (!result.contains(L.bracket(g_nu.basis_vector(i), n_nu.basis_vector(t))))
        throw IdealityViolation("[g_nu, n_nu] escapes ker(nu|n_nu)");
  return result;
}

ReducedAlgebra reduced_algebra(const LieAlgebra& L, const IdealRef& n, const Covector& nu) {
  ReducedAlgebra out;
  const Subspace g_nu_space = rep_isotropy(L, n, nu);
  out.g_nu = subalgebra(L, g_nu_space);  // g_nu is closed under the bracket
  out.n_nu_ambient = intersect(n.space, g_nu_space);
  out.n_natural_ambient = natural_kernel(L, n, nu);
  out.n_nu_local = express_in(g_nu_space, out.n_nu_ambient);
  out.n_natural_local = express_in(g_nu_space, out.n_natural_ambient);
  out.nu_nonzero_on_n_nu = out.n_natural_ambient.dim() < out.n_nu_ambient.dim();

  out.b_nu = quotient(out.g_nu.algebra, make_ideal(out.g_nu.algebra, out.n_natural_local));

  if (out.nu_nonzero_on_n_nu) {
    // the image of n_nu must be a one-dimensional central line of b_nu
    std::vector<Vec> image_rows;
    for (std::size_t t = 0; t < out.n_nu_local.dim(); ++t)
      image_rows.push_back(out.b_nu.projection.apply(out.n_nu_local.basis_vector(t)));
    const Subspace image = Subspace::span(out.b_nu.quotient.dim(), image_rows);
    if (image.dim() != 1 || !center(out.b_nu.quotient).contains(image))
      throw AssertionFailed("image of n_nu in b_nu is not a central line");
  }
  return out;
}

DeltaReport delta_natural(const LieAlgebra& n_alg, std::uint64_t seed, std::size_t samples,
                          long bound) {
  const std::size_t d = n_alg.dim();
  DeltaReport rep;
  rep.certificate.seed = seed;
  rep.certificate.coefficient_bound = bound;
  rep.certificate.witness = Covector::zero(d);

  // two passes over the same deterministic sample set: find the maximal
  // orbit rank, then look for a maximal-rank sample with mu|n_mu != 0
  std::size_t best = 0;
  for_each_sample(seed, samples, bound, d, [&](const Covector& mu) {
    ++rep.certificate.samples_tried;
    best = std::max(best, rank(kirillov_form(n_alg, mu)));
    return true;
  });
  rep.certificate.achieved_rank = best;

  bool found = false;
  for_each_sample(seed, samples, bound, d, [&](const Covector& mu) {
    if (rank(kirillov_form(n_alg, mu)) != best) return true;
    if (!found) rep.certificate.witness = mu;  // remember some regular sample
    const Subspace n_mu = isotropy(n_alg, mu);
    for (std::size_t t = 0; t < n_mu.dim(); ++t)
      if (!mu(n_mu.basis_vector(t)).is_zero()) {
        rep.delta = 1;
        rep.certificate.witness = mu;
        found = true;
        return false;
      }
    found = true;
    return true;
  });
  return rep;
}

Cocycle2 cocycle_gamma(const LieAlgebra& L, const IdealRef& n, const Covector& nu,
                       const Covector& tau) {
  const Subspace g_nu_space = rep_isotropy(L, n, nu);
  if (tau.space_dim != g_nu_space.dim()) throw DimensionMismatch("tau not on g_nu");
  const auto g_nu = subalgebra(L, g_nu_space);
  const Subspace n_nu_ambient = intersect(n.space, g_nu_space);
  const Subspace n_nu_local = express_in(g_nu_space, n_nu_ambient);

  // tau must extend nu on n_nu
  for (std::size_t t = 0; t < n_nu_local.dim(); ++t) {
    const Vec local = n_nu_local.basis_vector(t);
    const Vec ambient = g_nu_space.from_coords(local);
    if (tau(local) != nu(n.space.coords_of(ambient)))
      throw NotAnExtension("tau does not agree with nu on n_nu");
  }

  // factorization through g_nu/n_nu: tau([n_nu, g_nu]) = 0
  for (std::size_t t = 0; t < n_nu_local.dim(); ++t)
    for (std::size_t i = 0; i < g_nu_space.dim(); ++i)
      if (!tau(g_nu.algebra.bracket(n_nu_local.basis_vector(t), unit_vec(g_nu_space.dim(), i)))
               .is_zero())
        throw FactorizationFailure("tau([n_nu, g_nu]) is nonzero");

  const QuotientMap q = quotient(g_nu.algebra, make_ideal(g_nu.algebra, n_nu_local));
  const std::size_t qd = q.quotient.dim();
  Matrix form(qd, qd);
  for (std::size_t a = 0; a < qd; ++a)
    for (std::size_t b = a + 1; b < qd; ++b) {
      const Rat v = tau(g_nu.algebra.bracket(q.section.transpose().row(a), q.section.transpose().row(b)));
      form.at(a, b) = v;
      form.at(b, a) = -v;
    }
  return make_cocycle(q.quotient, std::move(form));
}

CocycleClassResult cocycle_class_equal(const Cocycle2& c1, const Cocycle2& c2) {
  if (!c1.algebra.same_structure(c2.algebra))
    throw DimensionMismatch("cocycles on different algebras");
  const std::size_t d = c1.algebra.dim();
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      rows.push_back(c1.algebra.bracket_basis(i, j));
      rhs.push_back(c1.form.at(i, j) - c2.form.at(i, j));
    }
  const Matrix a = rows.empty() ? Matrix(0, d) : Matrix::from_rows(rows);
  auto lambda = solve(a, rhs);
  if (!lambda) return CocycleClassResult{false, std::nullopt};
  return CocycleClassResult{true, Covector(d, *lambda)};
}

bool cocycle_reconstruction_roundtrip(const LieAlgebra& L, const IdealRef& n, const Covector& nu,
                        const Covector& tau) {
  const auto red = reduced_algebra(L, n, nu);
  if (!red.nu_nonzero_on_n_nu) throw Error("cocycle reconstruction needs nu nonzero on n_nu");
  const std::size_t p = red.g_nu.algebra.dim();
  if (tau.space_dim != p) throw DimensionMismatch("tau not on g_nu");

  // z in n_nu with nu(z) = 1, i.e. tau(z) = 1 after scaling
  std::optional<Vec> z;
  for (std::size_t t = 0; t < red.n_nu_local.dim(); ++t) {
    const Rat v = tau(red.n_nu_local.basis_vector(t));
    if (!v.is_zero()) {
      z = (Rat(1) / v) * red.n_nu_local.basis_vector(t);
      break;
    }
  }
  if (!z) throw Error("tau vanishes on n_nu");

  // splitting ker tau = s_nu o+ n_nu-natural
  Matrix tau_row(1, p);
  for (std::size_t i = 0; i < p; ++i) tau_row.at(0, i) = tau.coords[i];
  const Subspace ker_tau = kernel(tau_row);
  const Subspace s_nu = complement(red.n_natural_local, ker_tau);

  // decompose brackets of the s-basis in the frame (s basis | n_nu basis)
  const std::size_t m = s_nu.dim();
  std::vector<Vec> frame_rows;
  for (std::size_t i = 0; i < m; ++i) frame_rows.push_back(s_nu.basis_vector(i));
  for (std::size_t t = 0; t < red.n_nu_local.dim(); ++t)
    frame_rows.push_back(red.n_nu_local.basis_vector(t));
  const Matrix frame_t = Matrix::from_rows(frame_rows).transpose();

  std::vector<BracketTriple> q_triples;
  Matrix gamma(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec w = red.g_nu.algebra.bracket(s_nu.basis_vector(a), s_nu.basis_vector(b));
      auto coords = solve(frame_t, w);
      if (!coords) throw AssertionFailed("s_nu + n_nu does not frame g_nu");
      for (std::size_t c = 0; c < m; ++c)
        if (!(*coords)[c].is_zero()) q_triples.push_back({a, b, c, (*coords)[c]});
      const Rat g = tau(w);
      gamma.at(a, b) = g;
      gamma.at(b, a) = -g;
    }
  const LieAlgebra q_prime = LieAlgebra::create(m, q_triples);
  const LieAlgebra extension = central_extension(q_prime, make_cocycle(q_prime, gamma));

  // b_nu in the basis (pi(s_1), ..., pi(s_m), pi(z))
  std::vector<Vec> new_basis;
  for (std::size_t a = 0; a < m; ++a) new_basis.push_back(red.b_nu.projection.apply(s_nu.basis_vector(a)));
  new_basis.push_back(red.b_nu.projection.apply(*z));
  const LieAlgebra b_rebased = change_basis(red.b_nu.quotient, Matrix::from_rows(new_basis));

  return extension.same_structure(b_rebased);
}

namespace {

struct WitnessSearchResult {
  Covector nu;     // on the ideal
  Covector sigma;  // ambient regular extension
};

/// Shared witness protocol for the formula verifiers.
WitnessSearchResult find_formula_witness(const LieAlgebra& L, const IdealRef& n,
                                           const LieAlgebra& n_alg, std::size_t max_rank_n,
                                           int delta, const IndexReport& idx_g,
                                           std::uint64_t seed, long bound,
                                           const WitnessOptions& opts) {
  const std::size_t d = L.dim(), m = n.space.dim();
  const Subspace ann_n = annihilator(n.space);
  const std::size_t target_rank_g = d - idx_g.algebra_index;

  for (std::size_t t = 0; t < opts.retry_budget; ++t) {
    const Covector nu = sample_covector(substream(seed, 31), t, m, bound);
    if (rank(kirillov_form(n_alg, nu)) != max_rank_n) continue;  // nu must be n-regular
    if (delta == 1) {
      // delta branch: nu must be nonzero on its own isotropy
      const Subspace n_mu = isotropy(n_alg, nu);
      bool nonzero = false;
      for (std::size_t r = 0; r < n_mu.dim() && !nonzero; ++r)
        nonzero = !nu(n_mu.basis_vector(r)).is_zero();
      if (!nonzero) continue;
    }
    const Covector base = extend_covector(nu, n.space, d);
    for (std::size_t s = 0; s < opts.extension_budget; ++s) {
      Vec coords = base.coords;
      if (s > 0)
        for (std::size_t r = 0; r < ann_n.dim(); ++r)
          coords = coords +
                   sample_rat(substream(seed, 32), t * opts.extension_budget + s, r, bound) *
                       ann_n.basis_vector(r);
      const Covector sigma(d, coords);
      if (rank(kirillov_form(L, sigma)) == target_rank_g) return {nu, sigma};
    }
  }
  throw WitnessNotFound("no certified witness within the retry budget");
}

}  // namespace

ReductionReport verify_index_formula(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                                     std::size_t samples, long bound, const WitnessOptions& opts) {
  if (n.space.dim() == 0) throw Error("the index formula needs a nonzero ideal");
  const std::size_t d = L.dim();

  const IndexReport idx_g = index(L, substream(seed, 1), samples, bound);
  const auto n_sub = subalgebra(L, n.space);
  const RepIndexReport rep = rep_orbit_coindex(L, n, substream(seed, 2), samples, bound);
  const DeltaReport delta = delta_natural(n_sub.algebra, substream(seed, 3), samples, bound);
  const IndexReport idx_n = index(n_sub.algebra, substream(seed, 4), samples, bound);
  const std::size_t max_rank_n = n_sub.algebra.dim() - idx_n.algebra_index;

  const auto witness = find_formula_witness(L, n, n_sub.algebra, max_rank_n, delta.delta, idx_g,
                                              seed, bound, opts);

  ReductionReport out;
  out.nu = witness.nu;
  out.sigma = witness.sigma;
  out.reduced = reduced_algebra(L, n, witness.nu);
  out.delta = delta;
  out.ind_g_certificate = idx_g.certificate;

  const IndexReport idx_b = index(out.reduced.b_nu.quotient, substream(seed, 5), samples, bound);
  out.ind_b_certificate = idx_b.certificate;

  out.formula.ind_g = static_cast<long>(idx_g.algebra_index);
  out.formula.ind_g_n = static_cast<long>(rep.coindex);
  out.formula.ind_b_nu = static_cast<long>(idx_b.algebra_index);
  out.formula.delta = delta.delta;
  out.formula.holds =
      out.formula.ind_g == out.formula.ind_g_n + out.formula.ind_b_nu - out.formula.delta;

  const Subspace g_nu_space = out.reduced.g_nu.space;
  out.cocycle = cocycle_gamma(L, n, witness.nu, restrict_covector(witness.sigma, g_nu_space));

  // regularity correspondence over sampled extensions, the plain canonical
  // extension included (usually non-generic)
  const Subspace ann_n = annihilator(n.space);
  const Covector base = extend_covector(witness.nu, n.space, d);
  out.regular_correspondence = true;
  for (std::size_t s = 0; s < opts.extension_budget; ++s) {
    Vec coords = base.coords;
    if (s > 0)
      for (std::size_t r = 0; r < ann_n.dim(); ++r)
        coords = coords + sample_rat(substream(seed, 33), s, r, bound) * ann_n.basis_vector(r);
    const Covector sigma_s(d, coords);
    const Covector tau_bar =
        push_covector(out.reduced.b_nu, restrict_covector(sigma_s, g_nu_space));
    const bool reg_g = is_regular(L, sigma_s, idx_g);
    const bool reg_b = is_regular(out.reduced.b_nu.quotient, tau_bar, idx_b);
    if (reg_g != reg_b) out.regular_correspondence = false;
  }
  return out;
}

PanasyukReport verify_panasyuk(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                               std::size_t samples, long bound, const WitnessOptions& opts) {
  PanasyukReport out;
  out.base = verify_index_formula(L, n, seed, samples, bound, opts);
  const long branch = out.base.reduced.nu_nonzero_on_n_nu ? 1 : 0;
  out.ind_eta = out.base.formula.ind_b_nu - branch;
  out.holds = out.base.formula.ind_g == out.base.formula.ind_g_n + out.ind_eta;
  out.agrees_with_theorem13 = out.holds == out.base.formula.holds;
  return out;
}

RaisReport verify_rais(const LieAlgebra& k, const Representation& rep, std::uint64_t seed,
                       std::size_t samples, long bound, const WitnessOptions& opts) {
  const auto sd = semidirect(k, rep);
  const std::size_t dk = k.dim(), mv = rep.space_dim, d = dk + mv;

  const IndexReport idx_g = index(sd.algebra, substream(seed, 1), samples, bound);

  // condition matrix for k_nu: row v, column i gives nu(rho(e_i) e_v)
  auto stabilizer_matrix = [&](const Covector& nu) {
    Matrix mres(mv, dk);
    for (std::size_t i = 0; i < dk; ++i)
      for (std::size_t v = 0; v < mv; ++v) {
        Rat s;
        for (std::size_t l = 0; l < mv; ++l) s += nu.coords[l] * rep.action[i].at(l, v);
        mres.at(v, i) = s;
      }
    return mres;
  };

  std::size_t best = 0;
  for_each_sample(substream(seed, 2), samples, bound, mv, [&](const Covector& nu) {
    best = std::max(best, rank(stabilizer_matrix(nu)));
    return true;
  });
  const long ind_k_v = static_cast<long>(mv) - static_cast<long>(best);

  // witness: k-regular nu with a g-regular extension (f, nu)
  std::optional<Covector> witness;
  std::optional<Covector> sigma_witness;
  const std::size_t target_rank_g = d - idx_g.algebra_index;
  for (std::size_t t = 0; t < opts.retry_budget && !witness; ++t) {
    const Covector nu = sample_covector(substream(seed, 3), t, mv, bound);
    if (rank(stabilizer_matrix(nu)) != best) continue;
    for (std::size_t s = 0; s < opts.extension_budget; ++s) {
      Vec coords(d);
      for (std::size_t i = 0; i < dk; ++i)
        coords[i] = s == 0 ? Rat(0)
                           : sample_rat(substream(seed, 4), t * opts.extension_budget + s, i, bound);
      for (std::size_t v = 0; v < mv; ++v) coords[dk + v] = nu.coords[v];
      const Covector sigma(d, coords);
      if (rank(kirillov_form(sd.algebra, sigma)) == target_rank_g) {
        witness = nu;
        sigma_witness = sigma;
        break;
      }
    }
  }
  if (!witness) throw WitnessNotFound("no k-regular witness with a g-regular extension");

  const Subspace k_nu = kernel(stabilizer_matrix(*witness));
  const auto k_nu_sub = subalgebra(k, k_nu);
  const IndexReport idx_k_nu = index(k_nu_sub.algebra, substream(seed, 5), samples, bound);

  RaisReport out;
  out.ind_g = static_cast<long>(idx_g.algebra_index);
  out.ind_k_v = ind_k_v;
  out.ind_k_nu = static_cast<long>(idx_k_nu.algebra_index);
  out.holds = out.ind_g == out.ind_k_v + out.ind_k_nu;
  out.nu = *witness;
  return out;
}

bool verify_regular_correspondence(const LieAlgebra& L, const IdealRef& n, const Covector& sigma,
                                   std::uint64_t seed, std::size_t samples, long bound) {
  const Covector nu = restrict_covector(sigma, n.space);
  const auto red = reduced_algebra(L, n, nu);
  const IndexReport idx_g = index(L, substream(seed, 1), samples, bound);
  const IndexReport idx_b = index(red.b_nu.quotient, substream(seed, 5), samples, bound);
  const Covector tau_bar = push_covector(red.b_nu, restrict_covector(sigma, red.g_nu.space));
  return is_regular(L, sigma, idx_g) == is_regular(red.b_nu.quotient, tau_bar, idx_b);
}

MuMembership mu_self_membership(const LieAlgebra& n_alg, const Covector& mu) {
  MuMembership out;
  const Subspace n_mu = isotropy(n_alg, mu);
  out.vanishes_on_isotropy = true;
  for (std::size_t t = 0; t < n_mu.dim(); ++t)
    if (!mu(n_mu.basis_vector(t)).is_zero()) out.vanishes_on_isotropy = false;

  const Matrix b = kirillov_form(n_alg, mu);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n_alg.dim(); ++i) rows.push_back(b.row(i));
  out.in_adstar_span = Subspace::span(n_alg.dim(), rows).contains(mu.coords);
  return out;
}

}  // namespace lieorb
