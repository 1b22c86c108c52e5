#include <doctest.h>

#include <random>
#include <string>
#include <variant>

#include "jinf/automorphism.hpp"
#include "jinf/formats.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"

using namespace jinf;

TEST_CASE("permutation specs round-trip through json") {
  std::mt19937_64 rng(321);
  for (int round = 0; round < 10; ++round) {
    RandomPermutationConfig config;
    config.seed = rng();
    const ComputablePermutation s = randomPermutation(config);
    CHECK(permutationFromJson(permutationToJson(s)) == s);
  }

  const ComputablePermutation parsed = permutationFromJson(R"({
    "threshold": 2, "modulus": 1,
    "classes": [{"from": 0, "to": 0, "offset": 0}],
    "patch": {"1": 2, "2": 1}
  })");
  CHECK(parsed == ComputablePermutation::transposition(1, 2));
}

TEST_CASE("malformed json and malformed fields raise the format error") {
  CHECK_THROWS_AS(permutationFromJson("not json"), FormatError);
  CHECK_THROWS_AS(permutationFromJson(R"({"modulus": 1})"), FormatError);
  const std::string textKey = R"({
    "threshold": 1, "modulus": 1,
    "classes": [{"from": 0, "to": 0, "offset": 0}],
    "patch": {"x": 1}
  })";
  CHECK_THROWS_AS(permutationFromJson(textKey), FormatError);
  const std::string zeroKey = R"({
    "threshold": 1, "modulus": 1,
    "classes": [{"from": 0, "to": 0, "offset": 0}],
    "patch": {"0": 1}
  })";
  CHECK_THROWS_AS(permutationFromJson(zeroKey), FormatError);

  // validation failures keep their own types
  const std::string collision = R"({
    "threshold": 2, "modulus": 1,
    "classes": [{"from": 0, "to": 0, "offset": 0}],
    "patch": {"1": 2, "2": 2}
  })";
  CHECK_THROWS_AS(permutationFromJson(collision), NotInjective);
}

TEST_CASE("automorphism specs cover both kinds") {
  const RegularAutomorphism reg{ComputablePermutation::transposition(1, 2), true};
  const AutomorphismValue regValue{reg};
  const AutomorphismValue regBack = automorphismFromJson(automorphismToJson(regValue));
  REQUIRE(std::holds_alternative<RegularAutomorphism>(regBack));
  CHECK(std::get<RegularAutomorphism>(regBack) == reg);

  const Vertex evens = Vertex::fromSet(PeriodicSet::evens());
  const PiecewiseAutomorphism pw({{evens, ComputablePermutation::transposition(1, 2)}});
  const AutomorphismValue pwValue{pw};
  const AutomorphismValue pwBack = automorphismFromJson(automorphismToJson(pwValue));
  REQUIRE(std::holds_alternative<PiecewiseAutomorphism>(pwBack));
  CHECK(std::get<PiecewiseAutomorphism>(pwBack) == pw);

  // flip defaults to false and kind is mandatory
  const AutomorphismValue defaulted = automorphismFromJson(R"({
    "kind": "regular",
    "perm": {"threshold": 0, "modulus": 1,
             "classes": [{"from": 0, "to": 0, "offset": 0}], "patch": {}}
  })");
  CHECK_FALSE(std::get<RegularAutomorphism>(defaulted).flip);
  CHECK_THROWS_AS(automorphismFromJson(R"({"kind": "diagonal"})"), FormatError);

  // domain validation inside a piecewise spec keeps its own error type
  const std::string overlapping = R"json({
    "kind": "piecewise",
    "pieces": [
      {"rep": "evens", "perm": {"threshold": 0, "modulus": 1,
        "classes": [{"from": 0, "to": 0, "offset": 0}], "patch": {}}},
      {"rep": "union(diff(evens,{2}),{1})", "perm": {"threshold": 0, "modulus": 1,
        "classes": [{"from": 0, "to": 0, "offset": 0}], "patch": {}}}
    ]
  })json";
  CHECK_THROWS_AS(automorphismFromJson(overlapping), OverlappingPieces);
}

TEST_CASE("oracle construction applies either kind") {
  const AutomorphismValue reg{RegularAutomorphism{ComputablePermutation::identity(), true}};
  const Vertex evens = Vertex::fromSet(PeriodicSet::evens());
  CHECK(oracleFromValue(reg)(evens) == Vertex::fromSet(PeriodicSet::odds()));
}

TEST_CASE("certificates serialize their four vertices") {
  const Vertex a = Vertex::fromSet(PeriodicSet::evens());
  const Vertex b = Vertex::fromSet(unite(subtract(PeriodicSet::evens(), PeriodicSet::finite({2})),
                                         PeriodicSet::finite({1})));
  const ExampleOneResult example = buildExampleOne(a, b);
  const NonRegularityCertificate& cert = example.certificate;
  const NonRegularityCertificate back = certificateFromJson(certificateToJson(cert));
  CHECK(back.a == cert.a);
  CHECK(back.y == cert.y);
  CHECK(back.fa == cert.fa);
  CHECK(back.fy == cert.fy);

  CHECK_THROWS_AS(certificateFromJson(R"({"a": "evens"})"), FormatError);
  // certificate vertices must be balanced sets
  CHECK_THROWS_AS(certificateFromJson(R"({"a": "{1}", "y": "evens",
                                          "fa": "evens", "fy": "odds"})"),
                  NotBalanced);
}
