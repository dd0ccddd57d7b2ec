#pragma once

#include "lieorb/orbit_slice.hpp"

namespace lieorb {

/// ker(nu | n_nu) as a subspace of the full algebra; an ideal of g_nu of
/// codimension at most one inside n_nu.
Subspace natural_kernel(const LieAlgebra& L, const IdealRef& n, const Covector& nu);

/// g_nu materialized as an algebra together with its quotient by the
/// natural kernel — the reduced algebra b_nu.
struct ReducedAlgebra {
  SubalgebraMap g_nu;                 // canonical basis of g_nu + restricted bracket
  Subspace n_nu_ambient;              // in the full algebra's coordinates
  Subspace n_natural_ambient;
  Subspace n_nu_local;                // in g_nu coordinates
  Subspace n_natural_local;
  QuotientMap b_nu;                   // parent is g_nu's algebra
  bool nu_nonzero_on_n_nu = false;    // the central-extension branch
};

ReducedAlgebra reduced_algebra(const LieAlgebra& L, const IdealRef& n, const Covector& nu);

struct DeltaReport {
  int delta = 0;  // 1 iff some maximal-rank sample mu has mu nonzero on its isotropy
  GenericityCertificate certificate;
};

/// delta-natural of an algebra: samples mu on its dual; among the samples
/// achieving the maximal orbit rank, reports whether any is nonzero on its
/// own isotropy algebra.
DeltaReport delta_natural(const LieAlgebra& n_alg, std::uint64_t seed, std::size_t samples,
                          long bound);

/// The central-extension cocycle on g_nu/n_nu induced by tau:
/// gamma(x-bar, y-bar) = tau([x, y]) for any lifts. tau must extend nu on
/// n_nu (throws NotAnExtension) and the factorization is verified exactly.
Cocycle2 cocycle_gamma(const LieAlgebra& L, const IdealRef& n, const Covector& nu,
                       const Covector& tau);

struct CocycleClassResult {
  bool equal = false;
  std::optional<Covector> witness;  // lambda with c1 - c2 = lambda o bracket
};

/// Cohomology-class equality: c1 - c2 is a coboundary iff the linear system
/// lambda([x,y]) = (c1-c2)(x,y) is solvable; the witness is returned.
CocycleClassResult cocycle_class_equal(const Cocycle2& c1, const Cocycle2& c2);

/// Adapted-basis reconstruction: with z in n_nu scaled to nu(z) = 1 and a
/// splitting ker tau = s_nu o+ n_nu-natural, the reduced algebra written in
/// the basis (s-bar, z-bar) must equal the central extension of g_nu/n_nu by
/// gamma_tau entry for entry. Requires nu nonzero on n_nu.
bool cocycle_reconstruction_roundtrip(const LieAlgebra& L, const IdealRef& n, const Covector& nu,
                        const Covector& tau);

struct WitnessOptions {
  std::size_t retry_budget = 64;      // nu re-draws
  std::size_t extension_budget = 16;  // sigma draws per nu
};

struct FormulaRecord {
  long ind_g = 0;
  long ind_g_n = 0;  // orbit coindex
  long ind_b_nu = 0;
  long delta = 0;
  bool holds = false;  // ind_g = ind_g_n + ind_b_nu - delta
};

struct ReductionReport {
  Covector nu;     // witness on the ideal (ideal-basis coords)
  Covector sigma;  // regular extension of nu
  ReducedAlgebra reduced;
  DeltaReport delta;
  Cocycle2 cocycle;  // gamma_tau for the witness tau
  FormulaRecord formula;
  bool regular_correspondence = false;
  GenericityCertificate ind_g_certificate;
  GenericityCertificate ind_b_certificate;
};

/// The theorem13 formula verifier: selects a certified witness nu (maximal n-orbit
/// rank; in the delta branch additionally nu nonzero on its isotropy; some
/// extension sigma g-regular), computes all four integers independently and
/// reports whether the identity holds. Throws WitnessNotFound after the
/// retry budget.
ReductionReport verify_index_formula(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                                     std::size_t samples, long bound,
                                     const WitnessOptions& opts = {});

struct PanasyukReport {
  ReductionReport base;
  long ind_eta = 0;  // ind b_nu minus one in the nonvanishing branch
  bool holds = false;
  bool agrees_with_theorem13 = false;
};

PanasyukReport verify_panasyuk(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                               std::size_t samples, long bound, const WitnessOptions& opts = {});

struct RaisReport {
  long ind_g = 0;
  long ind_k_v = 0;   // orbit coindex of the module action
  long ind_k_nu = 0;  // index of the stabilizer subalgebra
  bool holds = false;
  Covector nu;  // witness on V*
};

/// Rais' formula for k x| V with abelian V: ind g = ind(k, V) + ind k_nu,
/// verified on a k-regular witness with a g-regular extension.
RaisReport verify_rais(const LieAlgebra& k, const Representation& rep, std::uint64_t seed,
                       std::size_t samples, long bound, const WitnessOptions& opts = {});

/// Whether sigma is g-regular exactly when tau is b_nu-regular (the reduction's
/// regularity correspondence), for nu = sigma restricted to the ideal.
bool verify_regular_correspondence(const LieAlgebra& L, const IdealRef& n, const Covector& sigma,
                                   std::uint64_t seed, std::size_t samples, long bound);

struct MuMembership {
  bool vanishes_on_isotropy = false;  // mu | n_mu = 0
  bool in_adstar_span = false;        // mu in ad*_n mu
};

/// The two sides of the self-membership equivalence for mu on an algebra's
/// dual; they agree for every mu.
MuMembership mu_self_membership(const LieAlgebra& n_alg, const Covector& mu);

}  // namespace lieorb
