#include <doctest.h>

#include "lieorb/errors.hpp"
#include "lieorb/matrix.hpp"
#include "lieorb/sampling.hpp"
#include "lieorb/subspace.hpp"

using namespace lieorb;

namespace {

Matrix mat(std::vector<Vec> rows) { return Matrix::from_rows(rows); }

Matrix random_matrix(std::uint64_t seed, std::size_t k, std::size_t rows, std::size_t cols,
                     long bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = sample_rat(seed, k, i * cols + j, bound);
  return m;
}

Subspace random_subspace(std::uint64_t seed, std::size_t k, std::size_t ambient, std::size_t rows,
                         long bound) {
  std::vector<Vec> vs;
  for (std::size_t r = 0; r < rows; ++r) {
    Vec v(ambient);
    for (std::size_t j = 0; j < ambient; ++j) v[j] = sample_rat(seed, k, 100 * r + j, bound);
    vs.push_back(std::move(v));
  }
  return Subspace::span(ambient, vs);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rat::parse("3").str() == "3");
  CHECK(Rat::parse("-7/2").str() == "-7/2");
  CHECK(Rat::parse("4/6").str() == "2/3");
  CHECK(Rat::parse("-4/6").str() == "-2/3");
  CHECK(Rat::parse("0/5").str() == "0");
  CHECK(Rat::parse("+2/4").str() == "1/2");
  CHECK(Rat(6, -4).str() == "-3/2");  // denominator normalized positive

  CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rat::parse(""), ParseError);
  CHECK_THROWS_AS(Rat::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rat a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  Rat s;
  for (int i = 0; i < 1000; ++i) s += Rat(1, 3);
  CHECK(s == Rat(1000, 3));
}

TEST_CASE("rref on the worked examples") {
  SUBCASE("already echelon") {
    const auto r = rref(mat({{0, 1}, {0, 0}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{1});
  }
  SUBCASE("zero matrix") {
    const auto r = rref(Matrix(3, 3));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
  }
  SUBCASE("one elimination step") {
    const auto r = rref(mat({{1, 2}, {2, 4}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
  }
}

TEST_CASE("kernel on the worked examples") {
  CHECK(kernel(Matrix::identity(2)) == Subspace::zero(2));
  CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
  // kernel of (1 2) is the line through (-2, 1), canonically (1, -1/2)
  const Subspace k = kernel(mat({{1, 2}}));
  CHECK(k.dim() == 1);
  CHECK(k.basis_vector(0) == Vec{Rat(1), Rat(-1, 2)});
}

TEST_CASE("annihilator on the worked examples") {
  CHECK(annihilator(Subspace::full(3)) == Subspace::zero(3));
  CHECK(annihilator(Subspace::zero(3)) == Subspace::full(3));
  const Subspace s = Subspace::span(3, {{0, 0, 1}});
  CHECK(annihilator(s) == Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("lattice operations on the worked examples") {
  const Subspace e0 = Subspace::span(2, {{1, 0}});
  const Subspace e1 = Subspace::span(2, {{0, 1}});
  CHECK(sum(e0, e1) == Subspace::full(2));

  const Subspace s = Subspace::span(3, {{1, 2, 0}, {0, 0, 1}});
  CHECK(intersect(s, s) == s);

  const Subspace inner = Subspace::span(3, {{1, 0, 0}});
  CHECK(complement(inner, Subspace::full(3)) == Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("lattice error paths") {
  CHECK_THROWS_AS(sum(Subspace::full(2), Subspace::full(3)), AmbientMismatch);
  CHECK_THROWS_AS(intersect(Subspace::full(2), Subspace::zero(3)), AmbientMismatch);
  const Subspace line = Subspace::span(3, {{1, 1, 0}});
  const Subspace other = Subspace::span(3, {{0, 0, 1}});
  CHECK_THROWS_AS(complement(line, other), NotContained);
  CHECK_THROWS_AS(Subspace::span(2, {{1, 0, 0}}), AmbientMismatch);
}

TEST_CASE("rank properties over random matrices") {
  for (std::size_t k = 0; k < 40; ++k) {
    const std::size_t rows = 1 + mix64(9, k, 0) % 5, cols = 1 + mix64(9, k, 1) % 5;
    const Matrix m = random_matrix(10, k, rows, cols, 5);
    const auto r = rref(m);
    CHECK(r.rank == rank(m.transpose()));
    CHECK(kernel(m).dim() + r.rank == cols);
    // rref is idempotent and unique
    CHECK(rref(r.reduced).reduced == r.reduced);
    // row scaling cannot change the reduced form
    Matrix scaled = m;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) scaled.at(i, j) *= Rat(3, 7);
    CHECK(rref(scaled).reduced == r.reduced);
    // every kernel vector is annihilated exactly
    const Subspace ker = kernel(m);
    for (std::size_t t = 0; t < ker.dim(); ++t) CHECK(is_zero(m.apply(ker.basis_vector(t))));
  }
}

TEST_CASE("elimination introduces no unforced denominators") {
  for (std::size_t k = 0; k < 20; ++k) {
    Matrix m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = sample_int(11, k, i * 4 + j, -6, 6);
    const auto r = rref(m);
    // scaling an integer matrix leaves the unique reduced form untouched
    Matrix doubled = m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) doubled.at(i, j) *= 2;
    CHECK(rref(doubled).reduced == r.reduced);
    // pivot entries are exactly one
    for (std::size_t t = 0; t < r.rank; ++t) CHECK(r.reduced.at(t, r.pivots[t]) == Rat(1));
  }
}

TEST_CASE("annihilator involution and dimension over random subspaces") {
  for (std::size_t k = 0; k < 30; ++k) {
    const std::size_t ambient = 2 + mix64(12, k, 0) % 4;
    const Subspace s = random_subspace(13, k, ambient, 1 + mix64(12, k, 1) % ambient, 4);
    const Subspace ann = annihilator(s);
    CHECK(s.dim() + ann.dim() == ambient);
    CHECK(annihilator(ann) == s);
    // inclusion reversal against a random larger space
    const Subspace t = sum(s, random_subspace(14, k, ambient, 1, 4));
    CHECK(ann.contains(annihilator(t)));
  }
}

TEST_CASE("modular law of dimensions and complement splitting") {
  for (std::size_t k = 0; k < 30; ++k) {
    const std::size_t ambient = 3 + mix64(15, k, 0) % 3;
    const Subspace a = random_subspace(16, k, ambient, 1 + mix64(15, k, 1) % 3, 4);
    const Subspace b = random_subspace(17, k, ambient, 1 + mix64(15, k, 2) % 3, 4);
    CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());

    const Subspace outer = sum(a, b);
    const Subspace comp = complement(a, outer);
    CHECK(sum(a, comp) == outer);
    CHECK(intersect(a, comp).dim() == 0);
  }
}

TEST_CASE("canonical form makes subspace equality entry-wise") {
  // one plane, three spanning sets
  const Subspace s1 = Subspace::span(3, {{1, 1, 0}, {0, 2, 2}});
  const Subspace s2 = Subspace::span(3, {{2, 2, 0}, {1, 3, 2}, {3, 5, 2}});
  CHECK(s1 == s2);
  CHECK(s1.basis() == s2.basis());
  CHECK(s1.contains(Vec{Rat(5), Rat(7), Rat(2)}));
  CHECK_FALSE(s1.contains(Vec{Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("coords round-trip") {
  const Subspace s = Subspace::span(4, {{1, 0, 2, 0}, {0, 1, -1, 0}});
  const Vec v{Rat(3), Rat(-2), Rat(8), Rat(0)};
  const Vec c = s.coords_of(v);
  CHECK(s.from_coords(c) == v);
  CHECK_THROWS_AS(s.coords_of(Vec{Rat(0), Rat(0), Rat(0), Rat(1)}), NotContained);
}

TEST_CASE("linear solve") {
  const Matrix a = mat({{1, 2}, {3, 4}});
  const auto x = solve(a, Vec{Rat(5), Rat(11)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == Vec{Rat(5), Rat(11)});
  const Matrix b = mat({{1, 2}, {2, 4}});
  CHECK_FALSE(solve(b, Vec{Rat(1), Rat(3)}).has_value());
}
