#include <doctest.h>

#include "lieorb/catalog.hpp"
#include "lieorb/errors.hpp"
#include "lieorb/random_gen.hpp"
#include "lieorb/reduction.hpp"

using namespace lieorb;

namespace {
IdealRef named_ideal(const char* algebra, const char* ideal) {
  for (const auto& [name, space] : catalog(algebra).ideals)
    if (name == ideal) return IdealRef{space};
  throw UnknownName("test ideal lookup failed");
}

/// The k-th sampled extension of nu inside A_nu.
Covector extend_plus(const LieAlgebra& L, const IdealRef& n, const Covector& nu, std::size_t k) {
  Vec coords = extend_covector(nu, n.space, L.dim()).coords;
  const Subspace ann = annihilator(n.space);
  for (std::size_t r = 0; r < ann.dim(); ++r)
    coords = coords + sample_rat(4242, k, r, 5) * ann.basis_vector(r);
  return Covector(L.dim(), coords);
}
}  // namespace

TEST_CASE("natural kernel on the worked examples") {
  const LieAlgebra h3 = catalog("heisenberg3").algebra;
  CHECK(natural_kernel(h3, named_ideal("heisenberg3", "center"), Covector(1, {1})).dim() == 0);
  CHECK(natural_kernel(h3, named_ideal("heisenberg3", "plane"), Covector(2, {0, 1})) ==
        Subspace::span(3, {{0, 1, 0}}));
  // zero covector: the kernel is all of n_nu = n
  CHECK(natural_kernel(h3, named_ideal("heisenberg3", "plane"), Covector::zero(2)) ==
        Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("reduced algebra on the worked examples") {
  SUBCASE("Heisenberg over its center reduces to itself") {
    const auto red = reduced_algebra(catalog("heisenberg3").algebra,
                                     named_ideal("heisenberg3", "center"), Covector(1, {1}));
    CHECK(red.b_nu.quotient.dim() == 3);
    CHECK(red.b_nu.quotient.same_structure(catalog("heisenberg3").algebra));
    CHECK(red.nu_nonzero_on_n_nu);
  }
  SUBCASE("Heisenberg over the plane reduces to a line") {
    const auto red = reduced_algebra(catalog("heisenberg3").algebra,
                                     named_ideal("heisenberg3", "plane"), Covector(2, {0, 1}));
    CHECK(red.b_nu.quotient.dim() == 1);
    CHECK(red.b_nu.quotient.is_abelian());
  }
  SUBCASE("gl2 over sl2 reduces to the abelian plane") {
    const auto red = reduced_algebra(catalog("gl2").algebra, named_ideal("gl2", "sl2"),
                                     Covector(3, {1, 0, 0}));
    CHECK(red.b_nu.quotient.dim() == 2);
    CHECK(red.b_nu.quotient.is_abelian());
  }
}

TEST_CASE("delta-natural on the worked examples") {
  CHECK(delta_natural(catalog("sl2").algebra, 0, 16, 7).delta == 1);
  CHECK(delta_natural(catalog("aff1").algebra, 0, 16, 7).delta == 0);
  CHECK(delta_natural(catalog("abelian:4").algebra, 0, 16, 7).delta == 1);
  CHECK(delta_natural(catalog("heisenberg3").algebra, 0, 16, 7).delta == 1);
  CHECK(delta_natural(catalog("e2").algebra, 0, 16, 7).delta == 1);
  CHECK(delta_natural(catalog("se3").algebra, 0, 16, 7).delta == 1);
  CHECK(delta_natural(catalog("so3").algebra, 0, 16, 7).delta == 1);
}

TEST_CASE("delta vanishes for Frobenius algebras") {
  // index 0 forces mu to vanish on the (zero) isotropy of a regular point
  const auto aff1 = catalog("aff1").algebra;
  const auto idx = index(aff1, 0, 16, 7);
  CHECK(idx.algebra_index == 0);
  CHECK(delta_natural(aff1, 0, 16, 7).delta == 0);
  const auto aff2 = direct_sum(aff1, aff1);
  CHECK(index(aff2, 0, 16, 7).algebra_index == 0);
  CHECK(delta_natural(aff2, 0, 16, 7).delta == 0);
}

TEST_CASE("cocycle of the Heisenberg slice") {
  const LieAlgebra h3 = catalog("heisenberg3").algebra;
  const IdealRef n = named_ideal("heisenberg3", "center");
  const Covector nu(1, {1});
  const Subspace g_nu = rep_isotropy(h3, n, nu);  // all of h3
  const Covector tau = restrict_covector(Covector(3, {0, 0, 1}), g_nu);

  const Cocycle2 gamma = cocycle_gamma(h3, n, nu, tau);
  CHECK(gamma.algebra.dim() == 2);
  CHECK(gamma.form.at(0, 1) == Rat(1));
  // reconstruction: the central extension of the abelian plane by gamma is h3
  CHECK(central_extension(gamma.algebra, gamma).same_structure(h3));
}

TEST_CASE("cocycle degenerate cases") {
  const LieAlgebra h3 = catalog("heisenberg3").algebra;
  SUBCASE("tau vanishing on the derived part gives the zero cocycle") {
    const IdealRef n = named_ideal("heisenberg3", "center");
    const Covector nu = Covector::zero(1);
    const Subspace g_nu = rep_isotropy(h3, n, nu);
    const Covector tau = restrict_covector(Covector(3, {5, 7, 0}), g_nu);
    CHECK(cocycle_gamma(h3, n, nu, tau).form.is_zero());
  }
  SUBCASE("zero-dimensional quotient gives the empty cocycle") {
    const IdealRef n = named_ideal("heisenberg3", "plane");
    const Covector nu(2, {0, 1});
    const Subspace g_nu = rep_isotropy(h3, n, nu);  // equals the plane
    const Covector tau = restrict_covector(Covector(3, {0, 0, 1}), g_nu);
    CHECK(cocycle_gamma(h3, n, nu, tau).algebra.dim() == 0);
  }
  SUBCASE("tau must extend nu") {
    const IdealRef n = named_ideal("heisenberg3", "center");
    const Covector nu(1, {1});
    const Subspace g_nu = rep_isotropy(h3, n, nu);
    const Covector tau = restrict_covector(Covector(3, {0, 0, 2}), g_nu);
    CHECK_THROWS_AS(cocycle_gamma(h3, n, nu, tau), NotAnExtension);
  }
}

TEST_CASE("cocycle class comparison") {
  const LieAlgebra ab2 = LieAlgebra::create(2, {});
  Matrix symplectic(2, 2);
  symplectic.at(0, 1) = 1;
  symplectic.at(1, 0) = -1;
  const Cocycle2 omega = make_cocycle(ab2, symplectic);
  const Cocycle2 zero = make_cocycle(ab2, Matrix(2, 2));

  SUBCASE("identical cocycles differ by the zero functional") {
    const auto r = cocycle_class_equal(omega, omega);
    CHECK(r.equal);
    CHECK(r.witness->is_zero());
  }
  SUBCASE("on an abelian algebra coboundaries vanish") {
    CHECK_FALSE(cocycle_class_equal(omega, zero).equal);
  }
  SUBCASE("cocycles of two extensions of one covector are cohomologous") {
    // g_nu here is sl2 + the center line, so different extensions give
    // genuinely different forms that must still be cohomologous
    const LieAlgebra L = catalog("sl2xh3").algebra;
    const IdealRef n = named_ideal("sl2xh3", "h3");
    const Covector nu(3, {0, 0, 1});
    const Subspace g_nu = rep_isotropy(L, n, nu);
    bool saw_different_forms = false;
    for (std::size_t k = 0; k < 8; ++k) {
      const Covector tau1 = restrict_covector(extend_plus(L, n, nu, 2 * k), g_nu);
      const Covector tau2 = restrict_covector(extend_plus(L, n, nu, 2 * k + 1), g_nu);
      const Cocycle2 c1 = cocycle_gamma(L, n, nu, tau1);
      const Cocycle2 c2 = cocycle_gamma(L, n, nu, tau2);
      if (c1.form != c2.form) saw_different_forms = true;
      CHECK(cocycle_class_equal(c1, c2).equal);
    }
    CHECK(saw_different_forms);
  }
}

TEST_CASE("adapted-basis cocycle reconstruction") {
  SUBCASE("Heisenberg over its center") {
    const LieAlgebra h3 = catalog("heisenberg3").algebra;
    const IdealRef n = named_ideal("heisenberg3", "center");
    const Covector nu(1, {1});
    const Covector tau = restrict_covector(Covector(3, {0, 0, 1}), rep_isotropy(h3, n, nu));
    CHECK(cocycle_reconstruction_roundtrip(h3, n, nu, tau));
  }
  SUBCASE("over catalog witnesses with the nonvanishing branch") {
    for (const auto& pair : catalog_pairs()) {
      const IdealRef n{pair.ideal};
      ReductionReport rep;
      try {
        rep = verify_index_formula(pair.algebra, n, 0, 16, 7);
      } catch (const WitnessNotFound&) {
        continue;
      }
      if (!rep.reduced.nu_nonzero_on_n_nu) continue;
      const Covector tau = restrict_covector(rep.sigma, rep.reduced.g_nu.space);
      CAPTURE(pair.algebra_name);
      CAPTURE(pair.ideal_name);
      CHECK(cocycle_reconstruction_roundtrip(pair.algebra, n, rep.nu, tau));
    }
  }
}

TEST_CASE("theorem13 formula on the worked examples") {
  SUBCASE("Heisenberg / center: 1 = 1 + 1 - 1") {
    const auto rep = verify_index_formula(catalog("heisenberg3").algebra,
                                          named_ideal("heisenberg3", "center"), 0, 16, 7);
    CHECK(rep.formula.ind_g == 1);
    CHECK(rep.formula.ind_g_n == 1);
    CHECK(rep.formula.ind_b_nu == 1);
    CHECK(rep.formula.delta == 1);
    CHECK(rep.formula.holds);
    CHECK(rep.regular_correspondence);
  }
  SUBCASE("Heisenberg / plane: 1 = 1 + 1 - 1") {
    const auto rep = verify_index_formula(catalog("heisenberg3").algebra,
                                          named_ideal("heisenberg3", "plane"), 0, 16, 7);
    CHECK(rep.formula.holds);
    CHECK(rep.formula.ind_b_nu == 1);
    CHECK(rep.reduced.b_nu.quotient.is_abelian());
  }
  SUBCASE("se3 / translations: 2 = 1 + 2 - 1") {
    const auto rep = verify_index_formula(catalog("se3").algebra,
                                          named_ideal("se3", "translations"), 0, 16, 7);
    CHECK(rep.formula.ind_g == 2);
    CHECK(rep.formula.ind_g_n == 1);
    CHECK(rep.formula.ind_b_nu == 2);
    CHECK(rep.formula.delta == 1);
    CHECK(rep.formula.holds);
    CHECK(rep.reduced.b_nu.quotient.is_abelian());
  }
  SUBCASE("the ideal must be nonzero") {
    CHECK_THROWS_AS(verify_index_formula(catalog("sl2").algebra,
                                         IdealRef{Subspace::zero(3)}, 0, 16, 7),
                    Error);
  }
  SUBCASE("an exhausted retry budget reports witness failure") {
    WitnessOptions opts;
    opts.retry_budget = 0;
    CHECK_THROWS_AS(verify_index_formula(catalog("heisenberg3").algebra,
                                         named_ideal("heisenberg3", "center"), 0, 16, 7, opts),
                    WitnessNotFound);
  }
}

TEST_CASE("panasyuk bookkeeping agrees with theorem13") {
  for (const auto& pair : catalog_pairs()) {
    CAPTURE(pair.algebra_name);
    CAPTURE(pair.ideal_name);
    PanasyukReport rep;
    try {
      rep = verify_panasyuk(pair.algebra, IdealRef{pair.ideal}, 0, 16, 7);
    } catch (const WitnessNotFound&) {
      rep = verify_panasyuk(pair.algebra, IdealRef{pair.ideal}, 0, 16, 13);
    }
    CHECK(rep.holds);
    CHECK(rep.base.formula.holds);
    CHECK(rep.agrees_with_theorem13);
  }
  // the eta bookkeeping on the Heisenberg examples
  const auto rep = verify_panasyuk(catalog("heisenberg3").algebra,
                                   named_ideal("heisenberg3", "center"), 0, 16, 7);
  CHECK(rep.ind_eta == 0);
}

TEST_CASE("Rais' formula") {
  SUBCASE("so3 on Q^3: 2 = 1 + 1") {
    const auto entry = catalog("se3");
    const auto& [k, rep] = *entry.split_form;
    const auto r = verify_rais(k, rep, 0, 16, 7);
    CHECK(r.ind_g == 2);
    CHECK(r.ind_k_v == 1);
    CHECK(r.ind_k_nu == 1);
    CHECK(r.holds);
  }
  SUBCASE("rotation on Q^2: 1 = 1 + 0") {
    const auto entry = catalog("e2");
    const auto& [k, rep] = *entry.split_form;
    const auto r = verify_rais(k, rep, 0, 16, 7);
    CHECK(r.ind_g == 1);
    CHECK(r.ind_k_v == 1);
    CHECK(r.ind_k_nu == 0);
    CHECK(r.holds);
  }
  SUBCASE("zero action: ind(k + abelian) splits as dim V + ind k") {
    const LieAlgebra sl2 = catalog("sl2").algebra;
    const Representation zero = make_representation(sl2, std::vector<Matrix>(3, Matrix(2, 2)));
    const auto r = verify_rais(sl2, zero, 0, 16, 7);
    CHECK(r.ind_g == 3);
    CHECK(r.ind_k_v == 2);
    CHECK(r.ind_k_nu == 1);
    CHECK(r.holds);
  }
  SUBCASE("generated instances") {
    for (std::size_t k = 0; k < 8; ++k) {
      const auto gen = random_semidirect(0, k);
      CAPTURE(gen.description);
      CHECK(verify_rais(gen.base, gen.rep, 0, 16, 7).holds);
    }
  }
}

TEST_CASE("regularity correspondence on the worked examples") {
  const LieAlgebra h3 = catalog("heisenberg3").algebra;
  const IdealRef center = named_ideal("heisenberg3", "center");
  CHECK(verify_regular_correspondence(h3, center, Covector(3, {0, 0, 1}), 0, 16, 7));
  CHECK(verify_regular_correspondence(h3, center, Covector(3, {1, 0, 1}), 0, 16, 7));
  CHECK(verify_regular_correspondence(catalog("gl2").algebra, named_ideal("gl2", "sl2"),
                                      Covector(4, {1, 2, 3, 5}), 0, 16, 7));
}

TEST_CASE("self-membership equivalence") {
  SUBCASE("abelian: nonzero mu lies outside the zero tangent space") {
    const auto r = mu_self_membership(catalog("abelian:2").algebra, Covector(2, {1, 0}));
    CHECK_FALSE(r.vanishes_on_isotropy);
    CHECK_FALSE(r.in_adstar_span);
  }
  SUBCASE("aff1 at the x-covector: full orbit through mu") {
    const auto r = mu_self_membership(catalog("aff1").algebra, Covector(2, {0, 1}));
    CHECK(r.vanishes_on_isotropy);
    CHECK(r.in_adstar_span);
  }
  SUBCASE("sl2 at a regular covector") {
    const auto r = mu_self_membership(catalog("sl2").algebra, Covector(3, {1, 0, 0}));
    CHECK_FALSE(r.vanishes_on_isotropy);
    CHECK_FALSE(r.in_adstar_span);
  }
  SUBCASE("the two sides agree on arbitrary covectors") {
    for (const auto& name : catalog_names()) {
      const LieAlgebra L = catalog(name).algebra;
      for (std::size_t k = 0; k < 8; ++k) {
        const auto r = mu_self_membership(L, sample_covector(61, k, L.dim(), 6));
        CHECK(r.vanishes_on_isotropy == r.in_adstar_span);
      }
    }
  }
}

TEST_CASE("theorem13 formula over generated pairs") {
  for (std::size_t k = 0; k < 12; ++k) {
    const auto gen = random_algebra_ideal(0, k);
    CAPTURE(gen.description);
    ReductionReport rep;
    try {
      rep = verify_index_formula(gen.algebra, IdealRef{gen.ideal}, 0, 16, 7);
    } catch (const WitnessNotFound&) {
      rep = verify_index_formula(gen.algebra, IdealRef{gen.ideal}, 0, 16, 13);
    }
    CHECK(rep.formula.holds);
    CHECK(rep.regular_correspondence);
  }
}
