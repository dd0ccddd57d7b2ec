#include <doctest.h>

#include "lieorb/errors.hpp"
#include "lieorb/json_io.hpp"

using namespace lieorb;
using nlohmann::json;

TEST_CASE("parsing a plain algebra file") {
  const json j = json::parse(R"({
    "name": "heisenberg3",
    "dim": 3,
    "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}}],
    "ideal": [["0", "0", "1"]],
    "sigma": ["0", "0", "1"]
  })");
  const AlgebraInput in = parse_algebra_input(j);
  CHECK(in.name == "heisenberg3");
  CHECK(in.algebra.dim() == 3);
  CHECK(in.algebra.structure(0, 1, 2) == Rat(1));
  REQUIRE(in.ideal.has_value());
  CHECK(in.ideal->dim() == 1);
  REQUIRE(in.sigma.has_value());
  CHECK(in.sigma->coords == Vec{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("rejected inputs") {
  SUBCASE("inconsistent bracket orientations") {
    const json j = json::parse(R"({
      "dim": 3,
      "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}},
                   {"left": 1, "right": 0, "result": {"2": "1"}}]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), AntisymmetryConflict);
  }
  SUBCASE("Jacobi violation") {
    const json j = json::parse(R"({
      "dim": 3,
      "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}},
                   {"left": 0, "right": 2, "result": {"1": "1"}},
                   {"left": 1, "right": 2, "result": {"1": "1"}}]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), JacobiViolation);
  }
  SUBCASE("floats are not rationals") {
    const json j = json::parse(R"({
      "dim": 2,
      "brackets": [{"left": 0, "right": 1, "result": {"1": 0.5}}]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), ParseError);
  }
  SUBCASE("ideal rows that do not span an ideal") {
    const json j = json::parse(R"({
      "dim": 3,
      "brackets": [{"left": 0, "right": 1, "result": {"2": "1"}}],
      "ideal": [["1", "0", "0"]]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), NotAnIdeal);
  }
  SUBCASE("semidirect form with an invalid representation") {
    const json j = json::parse(R"({
      "k": {"dim": 3,
            "brackets": [{"left": 0, "right": 1, "result": {"1": "2"}},
                         {"left": 0, "right": 2, "result": {"2": "-2"}},
                         {"left": 1, "right": 2, "result": {"0": "1"}}]},
      "rep": [[["1","0"],["0","1"]], [["1","0"],["0","1"]], [["1","0"],["0","1"]]]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), NotARepresentation);
  }
  SUBCASE("out-of-range index") {
    const json j = json::parse(R"({
      "dim": 2,
      "brackets": [{"left": 0, "right": 5, "result": {"1": "1"}}]
    })");
    CHECK_THROWS_AS(parse_algebra_input(j), ParseError);
  }
}

TEST_CASE("catalog entries round-trip through the file format") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const CatalogEntry e = catalog(name);
    const std::optional<Subspace> ideal =
        e.ideals.empty() ? std::nullopt : std::make_optional(e.ideals.front().second);
    const json j = algebra_to_json(e.name, e.algebra, ideal, e.sigma);
    const AlgebraInput back = parse_algebra_input(j);
    CHECK(back.algebra.same_structure(e.algebra));
    if (ideal) CHECK(*back.ideal == *ideal);
  }
}

TEST_CASE("semidirect split form round-trips") {
  const CatalogEntry se3 = catalog("se3");
  const json j = split_form_to_json(se3.name, se3.split_form->first, se3.split_form->second);
  const AlgebraInput back = parse_algebra_input(j);
  REQUIRE(back.split_form.has_value());
  CHECK(back.algebra.same_structure(se3.algebra));
  CHECK(back.ideal.has_value());  // the module ideal comes along automatically
}

TEST_CASE("digest and envelope") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));

  const json env = make_envelope("deadbeef", 7, json{{"samples", 16}}, json{{"x", 1}},
                                 json{{"all_pass", true}});
  CHECK(env.at("tool_version") == kToolVersion);
  CHECK(env.at("input_digest") == "deadbeef");
  CHECK(env.at("seed") == 7);
  CHECK(env.at("verdicts").at("all_pass") == true);
  // identical construction gives identical bytes
  const json env2 = make_envelope("deadbeef", 7, json{{"samples", 16}}, json{{"x", 1}},
                                  json{{"all_pass", true}});
  CHECK(env.dump(2) == env2.dump(2));
}

TEST_CASE("rational strings survive serialization") {
  const Vec v{Rat(1, 2), Rat(-3), Rat(7, 3)};
  CHECK(vec_from_json(vec_to_json(v)) == v);
}
