#include "lieorb/catalog.hpp"

#include "lieorb/errors.hpp"

namespace lieorb {

namespace {

LieAlgebra abelian(std::size_t n) { return LieAlgebra::create(n, {}); }

LieAlgebra heisenberg3() {
  return LieAlgebra::create(3, {{0, 1, 2, 1}});
}

LieAlgebra sl2() {
  // basis h, e, f
  return LieAlgebra::create(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}, {"h", "e", "f"});
}

LieAlgebra aff1() {
  // [t, x] = x
  return LieAlgebra::create(2, {{0, 1, 1, 1}}, {"t", "x"});
}

LieAlgebra so3() {
  return LieAlgebra::create(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}, {"L1", "L2", "L3"});
}

Representation so3_vector_rep() {
  Matrix r0(3, 3), r1(3, 3), r2(3, 3);
  r0.at(2, 1) = 1;
  r0.at(1, 2) = -1;
  r1.at(0, 2) = 1;
  r1.at(2, 0) = -1;
  r2.at(1, 0) = 1;
  r2.at(0, 1) = -1;
  return make_representation(so3(), {r0, r1, r2});
}

Representation so2_rotation_rep() {
  Matrix r(2, 2);
  r.at(1, 0) = 1;
  r.at(0, 1) = -1;
  return make_representation(abelian(1), {r});
}

Subspace coordinate_span(std::size_t ambient, std::initializer_list<std::size_t> coords) {
  std::vector<Vec> rows;
  for (auto c : coords) rows.push_back(unit_vec(ambient, c));
  return Subspace::span(ambient, rows);
}

Cocycle2 e2_symplectic_cocycle(const LieAlgebra& e2_alg) {
  Matrix form(3, 3);
  form.at(1, 2) = 1;
  form.at(2, 1) = -1;
  return make_cocycle(e2_alg, std::move(form));
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
  if (name.rfind("abelian:", 0) == 0) {
    const std::string arg = name.substr(8);
    std::size_t n = 0;
    try {
      n = std::stoul(arg);
    } catch (...) {
      throw UnknownName("bad abelian dimension '" + arg + "'");
    }
    if (n > 32) throw UnknownName("abelian dimension too large");
    CatalogEntry e{name, abelian(n), {}, std::nullopt, std::nullopt};
    if (n >= 1) e.ideals.emplace_back("line", coordinate_span(n, {0}));
    return e;
  }

  if (name == "heisenberg3") {
    CatalogEntry e{name, heisenberg3(), {}, Covector(3, {0, 0, 1}), std::nullopt};
    e.ideals.emplace_back("center", coordinate_span(3, {2}));
    e.ideals.emplace_back("plane", coordinate_span(3, {1, 2}));
    return e;
  }

  if (name == "sl2") {
    CatalogEntry e{name, sl2(), {}, Covector(3, {1, 0, 0}), std::nullopt};
    e.ideals.emplace_back("full", Subspace::full(3));
    return e;
  }

  if (name == "gl2") {
    CatalogEntry e{name, direct_sum(sl2(), abelian(1)), {}, std::nullopt, std::nullopt};
    e.ideals.emplace_back("sl2", coordinate_span(4, {0, 1, 2}));
    e.ideals.emplace_back("center", coordinate_span(4, {3}));
    return e;
  }

  if (name == "aff1") {
    CatalogEntry e{name, aff1(), {}, std::nullopt, std::nullopt};
    e.ideals.emplace_back("x-line", coordinate_span(2, {1}));
    e.ideals.emplace_back("full", Subspace::full(2));
    return e;
  }

  if (name == "so3") {
    CatalogEntry e{name, so3(), {}, std::nullopt, std::nullopt};
    return e;
  }

  if (name == "e2") {
    auto rep = so2_rotation_rep();
    auto sd = semidirect(rep.domain, rep);
    CatalogEntry e{name, sd.algebra, {}, std::nullopt, std::make_pair(rep.domain, rep)};
    e.ideals.emplace_back("translations", sd.module_ideal.space);
    return e;
  }

  if (name == "se3") {
    auto rep = so3_vector_rep();
    auto sd = semidirect(rep.domain, rep);
    CatalogEntry e{name, sd.algebra, {}, Covector(6, {0, 0, 0, 0, 0, 1}),
                   std::make_pair(rep.domain, rep)};
    e.ideals.emplace_back("translations", sd.module_ideal.space);
    return e;
  }

  if (name == "osc") {
    // oscillator algebra: central extension of e2 by the symplectic cocycle
    auto e2_alg = catalog("e2").algebra;
    auto ext = central_extension(e2_alg, e2_symplectic_cocycle(e2_alg));
    CatalogEntry e{name, ext, {}, std::nullopt, std::nullopt};
    e.ideals.emplace_back("heisenberg", coordinate_span(4, {1, 2, 3}));
    e.ideals.emplace_back("center", coordinate_span(4, {3}));
    return e;
  }

  if (name == "sl2xh3") {
    CatalogEntry e{name, direct_sum(sl2(), heisenberg3()), {}, std::nullopt, std::nullopt};
    e.ideals.emplace_back("h3", coordinate_span(6, {3, 4, 5}));
    e.ideals.emplace_back("h3-center", coordinate_span(6, {5}));
    return e;
  }

  if (name == "aff1xaff1") {
    CatalogEntry e{name, direct_sum(aff1(), aff1()), {}, std::nullopt, std::nullopt};
    e.ideals.emplace_back("x-plane", coordinate_span(4, {1, 3}));
    e.ideals.emplace_back("second", coordinate_span(4, {2, 3}));
    return e;
  }

  throw UnknownName("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"abelian:2", "abelian:4", "heisenberg3", "sl2", "gl2",   "aff1",
          "so3",       "e2",        "se3",         "osc", "sl2xh3", "aff1xaff1"};
}

std::vector<CatalogPair> catalog_pairs() {
  std::vector<CatalogPair> out;
  for (const auto& name : catalog_names()) {
    const auto entry = catalog(name);
    for (const auto& [ideal_name, ideal] : entry.ideals)
      out.push_back({entry.name, ideal_name, entry.algebra, ideal});
  }
  return out;
}

}  // namespace lieorb
