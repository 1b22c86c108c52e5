#include <doctest.h>

#include "jinf/automorphism.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"

using namespace jinf;

namespace {

Vertex vx(const PeriodicSet& s) { return Vertex::fromSet(s); }

const PeriodicSet kEvens = PeriodicSet::evens();
const PeriodicSet kRelabeled =
    unite(subtract(PeriodicSet::evens(), PeriodicSet::finite({2})), PeriodicSet::finite({1}));

}  // namespace

TEST_CASE("regular automorphisms push sets forward, optionally complemented") {
  const RegularAutomorphism plain{ComputablePermutation::transposition(1, 2), false};
  const AutomorphismOracle f = makeOracle(plain);
  CHECK(f(vx(kEvens)) == vx(kRelabeled));
  CHECK(applyAuto(f, vx(PeriodicSet::odds())).set() ==
        unite(subtract(PeriodicSet::odds(), PeriodicSet::finite({1})), PeriodicSet::finite({2})));

  const RegularAutomorphism flip{ComputablePermutation::identity(), true};
  const AutomorphismOracle g = makeOracle(flip);
  CHECK(g(vx(kEvens)) == vx(PeriodicSet::odds()));

  // complementation reverses containment
  const Vertex small = vx(subtract(kEvens, PeriodicSet::finite({2})));
  CHECK(incident(small, vx(kEvens)));
  CHECK(incident(g(small), g(vx(kEvens))));
  CHECK(subsetOf(g(vx(kEvens)).set(), g(small).set()));
}

TEST_CASE("oracles reject images that are not vertices") {
  const AutomorphismOracle broken([](const Vertex&) { return PeriodicSet::finite({1}); });
  try {
    broken(vx(kEvens));
    FAIL("expected OracleFailure");
  } catch (const OracleFailure& e) {
    CHECK(e.orbit.kind == OrbitType::Kind::FiniteOfSize);
  }
}

TEST_CASE("piecewise automorphisms act per component and fix the rest") {
  const PiecewiseAutomorphism::Piece piece{vx(kEvens),
                                           ComputablePermutation::transposition(1, 2)};
  const PiecewiseAutomorphism f({piece});
  const AutomorphismOracle oracle = makeOracle(f);

  CHECK(oracle(vx(kEvens)) == vx(kRelabeled));
  // a one-swap neighbor stays in the component, so the piece applies
  const PeriodicSet nearby =
      unite(subtract(kEvens, PeriodicSet::finite({4})), PeriodicSet::finite({7}));
  CHECK(oracle(vx(nearby)).set() ==
        unite(subtract(nearby, PeriodicSet::finite({2})), PeriodicSet::finite({1})));
  // other components are fixed pointwise
  CHECK(oracle(vx(PeriodicSet::odds())) == vx(PeriodicSet::odds()));
  CHECK(oracle(vx(PeriodicSet::multiples(3))) == vx(PeriodicSet::multiples(3)));
  // adjoining a point changes the component, so the piece does not apply
  CHECK(oracle(vx(unite(kEvens, PeriodicSet::finite({7})))) ==
        vx(unite(kEvens, PeriodicSet::finite({7}))));

  CHECK(f.pieces().size() == 1);
  CHECK(f == PiecewiseAutomorphism({piece}));
  CHECK_FALSE(f == PiecewiseAutomorphism({}));
}

TEST_CASE("piecewise construction validates its pieces") {
  const PiecewiseAutomorphism::Piece piece{vx(kEvens),
                                           ComputablePermutation::transposition(1, 2)};
  const PiecewiseAutomorphism::Piece overlapping{vx(kRelabeled),
                                                 ComputablePermutation::identity()};
  CHECK_THROWS_AS(PiecewiseAutomorphism({piece, overlapping}), OverlappingPieces);

  // a permutation moving the representative out of its component
  const ComputablePermutation paritySwap =
      ComputablePermutation::fromSpec(0, 2, {{0, 1, -1}, {1, 0, 1}}, {});
  const PiecewiseAutomorphism::Piece escaping{vx(kEvens), paritySwap};
  CHECK_THROWS_AS(PiecewiseAutomorphism({escaping}), ComponentNotPreserved);
}

TEST_CASE("the one-component relabeling produces a working certificate") {
  const ExampleOneResult result = buildExampleOne(vx(kEvens), vx(kRelabeled));
  const AutomorphismOracle f = makeOracle(result.f);

  CHECK(f(vx(kEvens)) == vx(kRelabeled));
  CHECK(result.certificate.a == vx(kEvens));
  CHECK(result.certificate.fa == vx(kRelabeled));
  // the witness pair is incident before and not after
  CHECK(incident(result.certificate.a, result.certificate.y));
  CHECK_FALSE(incident(result.certificate.fa, result.certificate.fy));
  CHECK(f(result.certificate.y) == result.certificate.fy);

  CHECK(verifyCertificate(f, result.certificate));

  // a certificate only counts against the map that produced the images
  const AutomorphismOracle honest = makeOracle(RegularAutomorphism{});
  CHECK_FALSE(verifyCertificate(honest, result.certificate));
}

TEST_CASE("the relabeling rejects degenerate vertex pairs") {
  CHECK_THROWS_AS(buildExampleOne(vx(kEvens), vx(kEvens)), EqualVertices);
  CHECK_THROWS_AS(buildExampleOne(vx(kEvens), vx(PeriodicSet::odds())), NotSameComponent);
}
