#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lieorb/coadjoint.hpp"

namespace lieorb {

/// Everything the slice analysis computes for one triple (algebra, ideal,
/// covector): the restrictions nu and tau, all isotropy subspaces, the
/// direction space of the isotropic affine slice, and exact verdicts for the
/// dimension identities that are theorems for arbitrary covectors.
struct OrbitSliceReport {
  Covector sigma;  // on the algebra
  Covector nu;     // sigma restricted to the ideal (ideal-basis coords)
  Covector tau;    // sigma restricted to g_nu (canonical-basis coords)

  Subspace g_sigma, g_nu, n_nu, n_sigma, n_natural;
  Subspace direction;   // (n + g_nu)-perp, the slice through sigma is sigma + direction
  Subspace g_nu_tau;    // n_nu + g_sigma
  Subspace adstar_n_nu_sigma;  // span of ad*_y sigma over a basis y of n_nu

  std::map<std::string, long> dims;
  std::map<std::string, bool> identity_verdicts;
  bool isotropy_check = false;  // sigma([n_nu, n_nu]) = 0

  std::array<bool, 5> triviality{};
  bool triviality_agree = false;

  bool all_identities_pass() const;
};

/// Covector restricted to a subspace, in the subspace's canonical-basis
/// coordinates. Linear in sigma.
Covector restrict_covector(const Covector& sigma, const Subspace& s);

/// The canonical extension: ambient covector agreeing with nu on s and
/// supported on s's pivot coordinates.
Covector extend_covector(const Covector& nu, const Subspace& s, std::size_t ambient_dim);

OrbitSliceReport analyze_slice(const LieAlgebra& L, const IdealRef& n, const Covector& sigma);

/// Membership in the affine slice through sigma: alpha lies in it iff
/// alpha - sigma belongs to the direction space.
bool slice_contains(const OrbitSliceReport& report, const Covector& alpha);

/// The five equivalent triviality conditions for the slice: one-point slice,
/// zero dimension, g_nu + n = g, g_sigma = g_nu_tau, n_nu inside g_sigma.
std::array<bool, 5> slice_triviality_conditions(const OrbitSliceReport& report);

/// co(g, n), computed two ways on one certified-generic witness (difference
/// of generic orbit ranks vs. the slice dimension) and returned when they
/// agree. Throws GenericityDisagreement otherwise and WitnessNotFound when
/// no sampled covector is simultaneously generic for both actions.
long complexity(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed, std::size_t samples,
                long bound);

struct AbelianComplementResult {
  enum class Status {
    Found,
    ComplexityNotZero,
    NoRegularExtension,
    ReducedNotAbelian,
    ComplementNotSpanning,
    SearchFailed,
  };
  Status status = Status::SearchFailed;
  std::optional<Subspace> complement_subspace;

  bool found() const { return status == Status::Found; }
};

const char* to_string(AbelianComplementResult::Status s);

/// Searches for an abelian subalgebra a inside g_nu with g = a o+ n; succeeds
/// under the zero-complexity hypotheses and reports which clause failed
/// otherwise. nu must be given in ideal-basis coordinates.
AbelianComplementResult abelian_complement(const LieAlgebra& L, const IdealRef& n,
                                           const Covector& nu, std::uint64_t seed,
                                           std::size_t samples, long bound);

struct Prop22Verdict {
  bool applicable = false;  // zero-dimensional slice and abelian reduced algebra
  bool holds = false;
  std::string detail;
};

/// When the slice through sigma is a point and the reduced algebra is
/// abelian, checks g_sigma = g_nu, n_sigma = n_nu and the orbit-dimension
/// equality dim(g/g_sigma) = dim(n/n_sigma) exactly.
Prop22Verdict check_prop22(const LieAlgebra& L, const IdealRef& n, const Covector& sigma);

}  // namespace lieorb
