#include "lieorb/random_gen.hpp"

#include "lieorb/catalog.hpp"
#include "lieorb/errors.hpp"
#include "lieorb/sampling.hpp"

namespace lieorb {

namespace {

// Irreducible sl2 module of highest weight m on basis v_0..v_m:
// h v_i = (m-2i) v_i, f v_i = v_{i+1}, e v_i = i(m-i+1) v_{i-1}.
Representation sl2_irrep(const LieAlgebra& sl2_alg, std::size_t m) {
  const std::size_t n = m + 1;
  Matrix h(n, n), e(n, n), f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h.at(i, i) = static_cast<long>(m) - 2 * static_cast<long>(i);
    if (i + 1 < n) {
      f.at(i + 1, i) = 1;
      e.at(i, i + 1) = static_cast<long>((i + 1) * (m - i));
    }
  }
  return make_representation(sl2_alg, {h, e, f});
}

Representation aff1_block(const LieAlgebra& aff1_alg) {
  Matrix t(2, 2), x(2, 2);
  t.at(0, 0) = 1;
  x.at(0, 1) = 1;
  return make_representation(aff1_alg, {t, x});
}

Representation h3_block(const LieAlgebra& h3_alg) {
  Matrix a(3, 3), b(3, 3), c(3, 3);
  a.at(0, 1) = 1;
  b.at(1, 2) = 1;
  c.at(0, 2) = 1;
  return make_representation(h3_alg, {a, b, c});
}

Representation abelian_jordan_block(const LieAlgebra& ab, std::uint64_t seed, std::size_t k,
                                    std::size_t space) {
  // polynomials in one nilpotent Jordan block commute, so any choice of
  // coefficients gives a valid module of the abelian algebra
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < ab.dim(); ++i) {
    Matrix m(space, space);
    const Rat a = sample_rat(seed, k, 3 * i, 3);
    const Rat b = sample_rat(seed, k, 3 * i + 1, 3);
    for (std::size_t r = 0; r < space; ++r) {
      m.at(r, r) = a;
      if (r + 1 < space) m.at(r, r + 1) = b;
    }
    action.push_back(std::move(m));
  }
  return make_representation(ab, std::move(action));
}

Representation direct_sum_rep(const Representation& a, const Representation& b) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    Matrix m(a.space_dim + b.space_dim, a.space_dim + b.space_dim);
    for (std::size_t r = 0; r < a.space_dim; ++r)
      for (std::size_t c = 0; c < a.space_dim; ++c) m.at(r, c) = a.action[i].at(r, c);
    for (std::size_t r = 0; r < b.space_dim; ++r)
      for (std::size_t c = 0; c < b.space_dim; ++c)
        m.at(a.space_dim + r, a.space_dim + c) = b.action[i].at(r, c);
    action.push_back(std::move(m));
  }
  return make_representation(a.domain, std::move(action));
}

Representation trivial_rep(const LieAlgebra& L, std::size_t space) {
  return make_representation(L, std::vector<Matrix>(L.dim(), Matrix(space, space)));
}

/// Conjugates by a random unimodular matrix (a short product of shears).
Representation conjugate_rep(const Representation& rep, std::uint64_t seed, std::size_t k) {
  const std::size_t n = rep.space_dim;
  if (n < 2) return rep;
  Matrix p = Matrix::identity(n), p_inv = Matrix::identity(n);
  const std::size_t shears = 2 + static_cast<std::size_t>(sample_int(seed, k, 100, 0, 2));
  for (std::size_t t = 0; t < shears; ++t) {
    const auto i = static_cast<std::size_t>(sample_int(seed, k, 101 + 3 * t, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(sample_int(seed, k, 102 + 3 * t, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Rat c = sample_int(seed, k, 103 + 3 * t, -2, 2);
    Matrix shear = Matrix::identity(n), shear_inv = Matrix::identity(n);
    shear.at(i, j) = c;
    shear_inv.at(i, j) = -c;
    p = p * shear;
    p_inv = shear_inv * p_inv;
  }
  std::vector<Matrix> action;
  for (const auto& m : rep.action) action.push_back(p * m * p_inv);
  return make_representation(rep.domain, std::move(action));
}

Representation base_rep(const LieAlgebra& k_alg, const std::string& k_name, std::uint64_t seed,
                        std::size_t k) {
  if (k_name == "sl2")
    return sl2_irrep(k_alg, 1 + static_cast<std::size_t>(sample_int(seed, k, 50, 0, 2)));
  if (k_name == "so3") return catalog("se3").split_form->second;
  if (k_name == "aff1") return aff1_block(k_alg);
  if (k_name == "heisenberg3") return h3_block(k_alg);
  // abelian
  return abelian_jordan_block(k_alg, seed, k,
                              2 + static_cast<std::size_t>(sample_int(seed, k, 51, 0, 1)));
}

const std::vector<std::string>& semidirect_bases() {
  static const std::vector<std::string> names = {"abelian:1", "abelian:2", "aff1",
                                                 "sl2",       "so3",       "heisenberg3"};
  return names;
}

}  // namespace

GeneratedSemidirect random_semidirect(std::uint64_t seed, std::size_t k) {
  const std::uint64_t s = substream(seed, 0x5d);
  const auto& bases = semidirect_bases();
  const auto pick =
      static_cast<std::size_t>(sample_int(s, k, 0, 0, static_cast<long>(bases.size()) - 1));
  const std::string name = bases[pick];
  const LieAlgebra base = catalog(name).algebra;

  Representation rep = base_rep(base, name, s, k);
  if (sample_int(s, k, 1, 0, 1) == 1) rep = direct_sum_rep(rep, trivial_rep(base, 1));
  rep = conjugate_rep(rep, s, k);

  return GeneratedSemidirect{name + " acting on Q^" + std::to_string(rep.space_dim), base, rep};
}

GeneratedPair random_algebra_ideal(std::uint64_t seed, std::size_t k) {
  const std::uint64_t s = substream(seed, 0x6e);
  const long recipe = sample_int(s, k, 0, 0, 3);

  static const std::vector<std::string> pool = {"abelian:2", "abelian:3", "aff1", "heisenberg3",
                                                "sl2",       "so3",       "e2",   "aff1xaff1"};
  auto pick_entry = [&](std::uint64_t lane) {
    const auto idx =
        static_cast<std::size_t>(sample_int(s, k, lane, 0, static_cast<long>(pool.size()) - 1));
    return catalog(pool[idx]);
  };

  if (recipe == 0) {
    // direct sum; the ideal mixes a designated ideal on one side with all or
    // nothing of the other
    const auto a = pick_entry(10);
    const auto b = pick_entry(11);
    const LieAlgebra g = direct_sum(a.algebra, b.algebra);
    const std::size_t da = a.algebra.dim(), d = g.dim();
    std::vector<Vec> rows;
    const bool left_whole = sample_int(s, k, 12, 0, 1) == 1;
    if (left_whole) {
      for (std::size_t i = 0; i < da; ++i) rows.push_back(unit_vec(d, i));
    } else if (!a.ideals.empty()) {
      const auto& sp = a.ideals.front().second;
      for (std::size_t r = 0; r < sp.dim(); ++r) {
        Vec v(d);
        for (std::size_t j = 0; j < da; ++j) v[j] = sp.basis().at(r, j);
        rows.push_back(std::move(v));
      }
    }
    if (!b.ideals.empty() && (rows.empty() || sample_int(s, k, 13, 0, 1) == 1)) {
      const auto& sp = b.ideals.front().second;
      for (std::size_t r = 0; r < sp.dim(); ++r) {
        Vec v(d);
        for (std::size_t j = 0; j < b.algebra.dim(); ++j) v[da + j] = sp.basis().at(r, j);
        rows.push_back(std::move(v));
      }
    }
    if (rows.empty())
      for (std::size_t i = 0; i < da; ++i) rows.push_back(unit_vec(d, i));
    const Subspace ideal = Subspace::span(d, rows);
    return GeneratedPair{a.name + " + " + b.name, g, make_ideal(g, ideal).space};
  }

  if (recipe == 1) {
    const auto sd = random_semidirect(seed, k);
    const auto built = semidirect(sd.base, sd.rep);
    return GeneratedPair{"semidirect " + sd.description, built.algebra, built.module_ideal.space};
  }

  if (recipe == 2) {
    // central extension by a random element of the cocycle space
    const auto q = pick_entry(20);
    const auto space = cocycle_space(q.algebra);
    Matrix form(q.algebra.dim(), q.algebra.dim());
    for (std::size_t b = 0; b < space.size(); ++b) {
      const Rat c = sample_rat(s, k, 30 + b, 2);
      if (!c.is_zero()) form = form + [&] {
        Matrix scaled(q.algebra.dim(), q.algebra.dim());
        for (std::size_t i = 0; i < q.algebra.dim(); ++i)
          for (std::size_t j = 0; j < q.algebra.dim(); ++j) scaled.at(i, j) = c * space[b].at(i, j);
        return scaled;
      }();
    }
    const LieAlgebra g = central_extension(q.algebra, make_cocycle(q.algebra, form));
    const std::size_t d = g.dim();
    std::vector<Vec> rows;
    rows.push_back(unit_vec(d, d - 1));  // the new central line
    if (!q.ideals.empty() && sample_int(s, k, 21, 0, 1) == 1) {
      // preimage of a designated ideal downstairs is an ideal upstairs
      const auto& sp = q.ideals.front().second;
      for (std::size_t r = 0; r < sp.dim(); ++r) {
        Vec v(d);
        for (std::size_t j = 0; j + 1 < d; ++j) v[j] = sp.basis().at(r, j);
        rows.push_back(std::move(v));
      }
    }
    const Subspace ideal = Subspace::span(d, rows);
    return GeneratedPair{"central extension of " + q.name, g, make_ideal(g, ideal).space};
  }

  // recipe 3: quotient by a series member, ideal from the quotient's series
  const auto e = pick_entry(40);
  std::vector<Subspace> candidates;
  for (const auto& series : {lower_central_series(e.algebra), derived_series(e.algebra)})
    for (const auto& member : series)
      if (member.dim() > 0 && member.dim() < e.algebra.dim()) candidates.push_back(member);
  if (!e.ideals.empty() && e.ideals.front().second.dim() < e.algebra.dim())
    candidates.push_back(e.ideals.front().second);
  Subspace kernel_space = Subspace::zero(e.algebra.dim());
  if (!candidates.empty())
    kernel_space = candidates[static_cast<std::size_t>(
        sample_int(s, k, 41, 0, static_cast<long>(candidates.size()) - 1))];
  const auto qm = quotient(e.algebra, make_ideal(e.algebra, kernel_space));
  const LieAlgebra g = qm.quotient;
  if (g.dim() == 0) {
    const auto fallback = catalog("heisenberg3");
    return GeneratedPair{"fallback heisenberg3", fallback.algebra, fallback.ideals.front().second};
  }
  Subspace ideal = center(g);
  if (ideal.dim() == 0) ideal = bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
  if (ideal.dim() == 0) ideal = Subspace::full(g.dim());
  return GeneratedPair{"quotient of " + e.name, g, make_ideal(g, ideal).space};
}

}  // namespace lieorb
