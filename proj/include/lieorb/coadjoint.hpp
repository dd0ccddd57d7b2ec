#pragma once

#include <cstdint>

#include "lieorb/lie_algebra.hpp"
#include "lieorb/sampling.hpp"

namespace lieorb {

/// Reproducibility record for a sampled genericity claim: the witness
/// realizing the best rank seen, and everything needed to re-run or escalate.
struct GenericityCertificate {
  Covector witness;
  std::size_t achieved_rank = 0;
  std::size_t samples_tried = 0;
  std::uint64_t seed = 0;
  long coefficient_bound = 0;
};

/// ind of the coadjoint representation, as witnessed by sampling. The value
/// is an upper bound that equals the true index whenever any sample is
/// regular; the certificate makes the probabilistic step auditable.
struct IndexReport {
  std::size_t algebra_index = 0;
  GenericityCertificate certificate;
};

/// Both index conventions for the action induced on the ideal's dual:
/// coindex = codimension in n* of a generic orbit of the full-algebra action
/// (what the index formulas consume), stab_dim = the generic isotropy
/// dimension (the literal representation-index reading).
struct RepIndexReport {
  std::size_t coindex = 0;
  std::size_t stab_dim = 0;
  GenericityCertificate certificate;
};

/// Operator on the dual with <ad*_xi s, eta> = <s, [xi, eta]>.
Matrix ad_star(const LieAlgebra& L, const Vec& xi);

/// Skew matrix B with B[i][j] = sigma([e_i, e_j]); its rank is the dimension
/// of the coadjoint orbit through sigma.
Matrix kirillov_form(const LieAlgebra& L, const Covector& sigma);

/// g_sigma = {xi : sigma([xi, g]) = 0}, the kernel of the Kirillov form.
Subspace isotropy(const LieAlgebra& L, const Covector& sigma);

/// g_nu = {xi : nu([xi, n]) = 0} for nu on the ideal (ideal-basis coords).
Subspace rep_isotropy(const LieAlgebra& L, const IdealRef& n, const Covector& nu);

/// Condition matrix whose kernel is rep_isotropy and whose rank is the
/// dimension of the orbit of nu under the full-algebra action on n*.
Matrix rep_action_matrix(const LieAlgebra& L, const IdealRef& n, const Covector& nu);

/// Enumerates the deterministic sample set for (seed, samples, bound):
/// sample index k at every nested bound 1..bound, so enlarging either
/// parameter only ever adds draws. fn may stop the sweep by returning false.
template <typename Fn>
void for_each_sample(std::uint64_t seed, std::size_t samples, long bound, std::size_t dim, Fn&& fn) {
  for (std::size_t k = 0; k < samples; ++k)
    for (long b = 1; b <= bound; ++b)
      if (!fn(sample_covector(substream(seed, static_cast<std::uint64_t>(b)), k, dim, b)))
        return;
}

IndexReport index(const LieAlgebra& L, std::uint64_t seed, std::size_t samples, long bound);

RepIndexReport rep_orbit_coindex(const LieAlgebra& L, const IdealRef& n, std::uint64_t seed,
                                 std::size_t samples, long bound);

/// True iff sigma's isotropy dimension matches the reported index.
bool is_regular(const LieAlgebra& L, const Covector& sigma, const IndexReport& idx);

}  // namespace lieorb
