#include "lieorb/orbit_slice.hpp"

#include <algorithm>

#include "lieorb/errors.hpp"

namespace lieorb {

bool OrbitSliceReport::all_identities_pass() const {
  for (const auto& [name, ok] : identity_verdicts)
    if (!ok) return false;
  return isotropy_check && triviality_agree;
}

Covector restrict_covector(const Covector& sigma, const Subspace& s) {
  if (sigma.space_dim != s.ambient_dim()) throw AmbientMismatch("restriction across ambient spaces");
  Vec coords(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) coords[r] = sigma(s.basis_vector(r));
  return Covector(s.dim(), std::move(coords));
}

Covector extend_covector(const Covector& nu, const Subspace& s, std::size_t ambient_dim) {
  if (nu.space_dim != s.dim()) throw DimensionMismatch("covector not on the subspace");
  if (s.ambient_dim() != ambient_dim) throw AmbientMismatch("subspace in wrong ambient space");
  // placing the coordinates at pivot columns gives sigma(b_r) = nu_r exactly
  Vec coords(ambient_dim);
  for (std::size_t r = 0; r < s.dim(); ++r) coords[s.pivots()[r]] = nu.coords[r];
  return Covector(ambient_dim, std::move(coords));
}

namespace {

/// n_sigma recomputed from nu alone: {y in n : nu([y, g]) = 0}.
Subspace n_sigma_from_nu(const LieAlgebra& L, const IdealRef& n, const Covector& nu) {
  const std::size_t d = L.dim(), m = n.space.dim();
  Matrix cond(d, m);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec ej = unit_vec(d, j);
    for (std::size_t r = 0; r < m; ++r) {
      const Vec br = L.bracket(n.space.basis_vector(r), ej);
      cond.at(j, r) = nu(n.space.coords_of(br));
    }
  }
  const Subspace param_kernel = kernel(cond);
  std::vector<Vec> rows;
  for (std::size_t t = 0; t < param_kernel.dim(); ++t)
    rows.push_back(n.space.from_coords(param_kernel.basis_vector(t)));
  return Subspace::span(d, rows);
}

}  // namespace

OrbitSliceReport analyze_slice(const LieAlgebra& L, const IdealRef& n, const Covector& sigma) {
  const std::size_t d = L.dim();
  if (sigma.space_dim != d) throw DimensionMismatch("covector not on the algebra");

  OrbitSliceReport rep;
  rep.sigma = sigma;
  rep.nu = restrict_covector(sigma, n.space);

  rep.g_sigma = isotropy(L, sigma);
  rep.g_nu = rep_isotropy(L, n, rep.nu);
  rep.tau = restrict_covector(sigma, rep.g_nu);
  rep.n_nu = intersect(n.space, rep.g_nu);
  rep.n_sigma = intersect(n.space, rep.g_sigma);

  // n_nu^natural = ker(nu | n_nu)
  {
    Matrix cond(1, rep.n_nu.dim());
    for (std::size_t t = 0; t < rep.n_nu.dim(); ++t)
      cond.at(0, t) = rep.nu(n.space.coords_of(rep.n_nu.basis_vector(t)));
    const Subspace param_kernel = kernel(cond);
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < param_kernel.dim(); ++t)
      rows.push_back(rep.n_nu.from_coords(param_kernel.basis_vector(t)));
    rep.n_natural = Subspace::span(d, rows);
  }

  rep.direction = annihilator(sum(n.space, rep.g_nu));
  rep.g_nu_tau = sum(rep.n_nu, rep.g_sigma);

  {
    std::vector<Vec> rows;
    for (std::size_t t = 0; t < rep.n_nu.dim(); ++t)
      rows.push_back(ad_star(L, rep.n_nu.basis_vector(t)).apply(sigma.coords));
    rep.adstar_n_nu_sigma = Subspace::span(d, rows);
  }

  const long dim_g = static_cast<long>(d);
  const long dim_n = static_cast<long>(n.space.dim());
  const long g_sigma = static_cast<long>(rep.g_sigma.dim());
  const long g_nu = static_cast<long>(rep.g_nu.dim());
  const long n_nu = static_cast<long>(rep.n_nu.dim());
  const long n_sigma = static_cast<long>(rep.n_sigma.dim());
  const long n_nat = static_cast<long>(rep.n_natural.dim());
  const long g_nu_tau = static_cast<long>(rep.g_nu_tau.dim());
  const long slice = static_cast<long>(rep.direction.dim());

  rep.dims = {
      {"g", dim_g},           {"n", dim_n},           {"g_sigma", g_sigma},
      {"g_nu", g_nu},         {"n_nu", n_nu},         {"n_sigma", n_sigma},
      {"n_natural", n_nat},   {"g_nu_tau", g_nu_tau}, {"slice", slice},
      {"A_nu", dim_g - dim_n},
  };

  rep.identity_verdicts["restricted_isotropy_dim"] = n_sigma == dim_n - (dim_g - g_nu);
  rep.identity_verdicts["slice_tangent_space"] = rep.adstar_n_nu_sigma == rep.direction;
  rep.identity_verdicts["slice_dim_count"] = slice == (dim_g - g_nu) - (dim_n - n_nu);
  rep.identity_verdicts["stabilizer_gap"] = g_nu_tau - g_sigma == n_nu - n_sigma;
  rep.identity_verdicts["isotropy_dim_split"] =
      g_sigma == (dim_n - (dim_g - g_nu)) + (g_nu_tau - n_nat) - (n_nu - n_nat);
  rep.identity_verdicts["n_sigma_from_nu_alone"] = rep.n_sigma == n_sigma_from_nu(L, n, rep.nu);

  rep.isotropy_check = true;
  for (std::size_t s = 0; s < rep.n_nu.dim() && rep.isotropy_check; ++s)
    for (std::size_t t = s + 1; t < rep.n_nu.dim(); ++t)
      if (!sigma(L.bracket(rep.n_nu.basis_vector(s), rep.n_nu.basis_vector(t))).is_zero()) {
        rep.isotropy_check = false;
        break;
      }

  rep.triviality = slice_triviality_conditions(rep);
  rep.triviality_agree = true;
  for (bool f : rep.triviality)
    if (f != rep.triviality[0]) rep.triviality_agree = false;

  return rep;
}

bool slice_contains(const OrbitSliceReport& report, const Covector& alpha) {
  if (alpha.space_dim != report.sigma.space_dim)
    throw DimensionMismatch("covector not on the algebra");
  return report.direction.contains(alpha.coords - report.sigma.coords);
}

std::array<bool, 5> slice_triviality_conditions(const OrbitSliceReport& report) {
  const std::size_t d = report.sigma.space_dim;
  std::array<bool, 5> out{};
  out[0] = report.direction == Subspace::zero(d);
  out[1] = report.direction.dim() == 0;
  // g_nu + n = g, via dim(g_nu + n) = dim g_nu + dim n - dim(g_nu intersect n)
  out[2] = report.dims.at("g_nu") + report.dims.at("n") - report.dims.at("n_nu") ==
           report.dims.at("g");
  out[3] = report.g_sigma == report.g_nu_tau;
  out[4] = report.g_sigma.contains(report.n_nu);
  return out;
}

long complexity(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed, std::size_t samples,
                long bound) {
  const std::size_t m = n.space.dim();
  const auto n_sub = subalgebra(L, n.space);

  std::size_t best_n = 0, best_g = 0;
  std::optional<Covector> joint_witness;
  for_each_sample(substream(seed, 11), samples, bound, m, [&](const Covector& nu) {
    const std::size_t rn = rank(kirillov_form(n_sub.algebra, nu));
    const std::size_t rg = rank(rep_action_matrix(L, n, nu));
    if (rn > best_n || rg > best_g) joint_witness.reset();
    best_n = std::max(best_n, rn);
    best_g = std::max(best_g, rg);
    if (rn == best_n && rg == best_g && !joint_witness) joint_witness = nu;
    return true;
  });
  if (!joint_witness)
    throw WitnessNotFound("no sampled covector is generic for both orbit ranks");

  const long co_ranks = static_cast<long>(best_g) - static_cast<long>(best_n);
  const Covector sigma = extend_covector(*joint_witness, n.space, L.dim());
  const auto slice = analyze_slice(L, n, sigma);
  const long co_slice = slice.dims.at("slice");
  if (co_ranks != co_slice)
    throw GenericityDisagreement(co_ranks, co_slice,
                                 "complexity routes disagree on the sampled witness");
  return co_ranks;
}

const char* to_string(AbelianComplementResult::Status s) {
  using St = AbelianComplementResult::Status;
  switch (s) {
    case St::Found: return "found";
    case St::ComplexityNotZero: return "complexity-not-zero";
    case St::NoRegularExtension: return "no-regular-extension";
    case St::ReducedNotAbelian: return "reduced-algebra-not-abelian";
    case St::ComplementNotSpanning: return "complement-not-spanning";
    case St::SearchFailed: return "search-failed";
  }
  return "unknown";
}

AbelianComplementResult abelian_complement(const LieAlgebra& L, const IdealRef& n,
                                           const Covector& nu, std::uint64_t seed,
                                           std::size_t samples, long bound) {
  AbelianComplementResult res;
  const std::size_t d = L.dim();

  long co = 0;
  try {
    co = complexity(L, n, seed, samples, bound);
  } catch (const WitnessNotFound&) {
    res.status = AbelianComplementResult::Status::ComplexityNotZero;
    return res;
  }
  if (co != 0) {
    res.status = AbelianComplementResult::Status::ComplexityNotZero;
    return res;
  }

  const auto slice = analyze_slice(L, n, extend_covector(nu, n.space, d));
  const auto& g_nu = slice.g_nu;

  // A_nu must meet the regular set: sample extensions of nu
  const auto idx = index(L, substream(seed, 21), samples, bound);
  const Subspace ann_n = annihilator(n.space);
  const Covector base = extend_covector(nu, n.space, d);
  bool regular_found = false;
  for (std::size_t s = 0; s < samples && !regular_found; ++s) {
    Vec coords = base.coords;
    if (s > 0)
      for (std::size_t r = 0; r < ann_n.dim(); ++r) {
        const Rat c = sample_rat(substream(seed, 22), s, r, bound);
        coords = coords + c * ann_n.basis_vector(r);
      }
    regular_found = is_regular(L, Covector(d, coords), idx);
  }
  if (!regular_found) {
    res.status = AbelianComplementResult::Status::NoRegularExtension;
    return res;
  }

  // b_nu abelian means [g_nu, g_nu] inside ker(nu|n_nu)
  if (!slice.n_natural.contains(bracket_span(L, g_nu, g_nu))) {
    res.status = AbelianComplementResult::Status::ReducedNotAbelian;
    return res;
  }

  if (sum(g_nu, n.space).dim() != d) {
    res.status = AbelianComplementResult::Status::ComplementNotSpanning;
    return res;
  }

  // candidate: complement of n_nu inside g_nu, then bounded retries with
  // n_nu-shifts of its basis
  Subspace candidate = complement(slice.n_nu, g_nu);
  for (std::size_t attempt = 0; attempt <= 8; ++attempt) {
    Subspace a = candidate;
    if (attempt > 0) {
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < candidate.dim(); ++i) {
        Vec v = candidate.basis_vector(i);
        for (std::size_t r = 0; r < slice.n_nu.dim(); ++r) {
          const Rat c = sample_rat(substream(seed, 23), attempt * candidate.dim() + i, r, bound);
          v = v + c * slice.n_nu.basis_vector(r);
        }
        rows.push_back(std::move(v));
      }
      a = Subspace::span(d, rows);
    }
    // abelian ([a,a] = 0) already makes the subspace a subalgebra
    const bool abelian = is_abelian_subspace(L, a);
    const bool disjoint = intersect(a, n.space).dim() == 0;
    const bool spanning = sum(a, n.space).dim() == d;
    if (abelian && disjoint && spanning) {
      res.status = AbelianComplementResult::Status::Found;
      res.complement_subspace = a;
      return res;
    }
  }
  res.status = AbelianComplementResult::Status::SearchFailed;
  return res;
}

Prop22Verdict check_prop22(const LieAlgebra& L, const IdealRef& n, const Covector& sigma) {
  Prop22Verdict v;
  const auto rep = analyze_slice(L, n, sigma);
  const bool slice_point = rep.direction.dim() == 0;
  const bool b_nu_abelian = rep.n_natural.contains(bracket_span(L, rep.g_nu, rep.g_nu));
  v.applicable = slice_point && b_nu_abelian;
  if (!v.applicable) {
    v.detail = slice_point ? "reduced algebra not abelian" : "slice has positive dimension";
    return v;
  }
  const bool eq_g = rep.g_sigma == rep.g_nu;
  const bool eq_n = rep.n_sigma == rep.n_nu;
  const bool orbit_dims = rep.dims.at("g") - rep.dims.at("g_sigma") ==
                          rep.dims.at("n") - rep.dims.at("n_sigma");
  v.holds = eq_g && eq_n && orbit_dims;
  if (!v.holds)
    v.detail = std::string("failed: ") + (eq_g ? "" : "g_sigma!=g_nu ") +
               (eq_n ? "" : "n_sigma!=n_nu ") + (orbit_dims ? "" : "orbit-dims");
  return v;
}

}  // namespace lieorb
