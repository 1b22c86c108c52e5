#include <doctest.h>

#include <variant>

#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"

using namespace jinf;

namespace {

Vertex vx(const PeriodicSet& s) { return Vertex::fromSet(s); }

PeriodicSet swapIn(const PeriodicSet& base, std::uint64_t out, std::uint64_t in) {
  return unite(subtract(base, PeriodicSet::finite({out})), PeriodicSet::finite({in}));
}

}  // namespace

TEST_CASE("vertices must be balanced") {
  CHECK_NOTHROW(vx(PeriodicSet::evens()));
  try {
    vx(PeriodicSet::finite({1, 2}));
    FAIL("expected NotBalanced");
  } catch (const NotBalanced& e) {
    CHECK(e.orbit.kind == OrbitType::Kind::FiniteOfSize);
    CHECK(e.orbit.size == 2);
  }
  CHECK_THROWS_AS(vx(complement(PeriodicSet::finite({3}))), NotBalanced);
}

TEST_CASE("johnson adjacency swaps exactly one element") {
  const Vertex evens = vx(PeriodicSet::evens());
  CHECK(adjacentJohnson(evens, vx(swapIn(PeriodicSet::evens(), 2, 1))));
  CHECK(adjacentJohnson(evens, vx(swapIn(PeriodicSet::evens(), 4, 7))));
  // covering pairs differ on one side only; that is incidence, not adjacency
  CHECK_FALSE(adjacentJohnson(evens, vx(unite(PeriodicSet::evens(), PeriodicSet::finite({1})))));
  CHECK_FALSE(
      adjacentJohnson(evens, vx(subtract(PeriodicSet::evens(), PeriodicSet::finite({2})))));
  CHECK_FALSE(adjacentJohnson(evens, evens));
  CHECK_FALSE(adjacentJohnson(evens, vx(PeriodicSet::odds())));
  CHECK_FALSE(
      adjacentJohnson(evens, vx(swapIn(swapIn(PeriodicSet::evens(), 2, 1), 4, 3))));
}

TEST_CASE("components are finite-symmetric-difference classes") {
  const Vertex evens = vx(PeriodicSet::evens());
  CHECK(sameComponent(evens, vx(swapIn(PeriodicSet::evens(), 2, 7))));
  CHECK_FALSE(sameComponent(evens, vx(PeriodicSet::odds())));
  CHECK_FALSE(sameComponent(evens, vx(PeriodicSet::multiples(4))));
}

TEST_CASE("distance counts one-sided difference, geodesics step through swaps") {
  const PeriodicSet evens = PeriodicSet::evens();
  const Vertex x = vx(evens);
  const Vertex y = vx(swapIn(swapIn(evens, 2, 1), 4, 3));
  CHECK(distanceJohnson(x, y) == 2);
  CHECK(distanceJohnson(x, x) == 0);

  const std::vector<Vertex> path = geodesic(x, y);
  REQUIRE(path.size() == 3);
  CHECK(path.front() == x);
  CHECK(path.back() == y);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    CHECK(adjacentJohnson(path[i], path[i + 1]));
  }

  CHECK_THROWS_AS(distanceJohnson(x, vx(PeriodicSet::odds())), DifferentComponents);
  CHECK_THROWS_AS(geodesic(x, vx(PeriodicSet::odds())), DifferentComponents);
}

TEST_CASE("star and top samples stay inside one clique") {
  const Vertex evens = vx(PeriodicSet::evens());

  const std::vector<Vertex> star = starSample(evens, 3);
  REQUIRE(star.size() == 3);
  CHECK(star[0] == vx(unite(PeriodicSet::evens(), PeriodicSet::finite({1}))));
  CHECK(star[1] == vx(unite(PeriodicSet::evens(), PeriodicSet::finite({3}))));
  CHECK(star[2] == vx(unite(PeriodicSet::evens(), PeriodicSet::finite({5}))));

  const std::vector<Vertex> skipped = starSample(evens, 1, {1, 3});
  CHECK(skipped[0] == vx(unite(PeriodicSet::evens(), PeriodicSet::finite({5}))));

  const std::vector<Vertex> top = topSample(evens, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == vx(subtract(PeriodicSet::evens(), PeriodicSet::finite({2}))));
  CHECK(top[1] == vx(subtract(PeriodicSet::evens(), PeriodicSet::finite({4}))));
  CHECK(top[2] == vx(subtract(PeriodicSet::evens(), PeriodicSet::finite({6}))));

  // the center and carrier are recovered, neither being a member itself
  const CliqueKind starKind = classifyClique(star);
  REQUIRE(std::holds_alternative<StarKind>(starKind));
  CHECK(std::get<StarKind>(starKind).center == evens);

  const CliqueKind topKind = classifyClique(top);
  REQUIRE(std::holds_alternative<TopKind>(topKind));
  CHECK(std::get<TopKind>(topKind).carrier == evens);
}

TEST_CASE("clique classification distinguishes the degenerate cases") {
  const PeriodicSet evens = PeriodicSet::evens();
  const Vertex a = vx(evens);
  const Vertex b = vx(swapIn(evens, 2, 1));

  const CliqueKind pair = classifyClique({a, b});
  REQUIRE(std::holds_alternative<PairAmbiguousKind>(pair));
  CHECK(std::get<PairAmbiguousKind>(pair).starCenter ==
        vx(subtract(evens, PeriodicSet::finite({2}))));
  CHECK(std::get<PairAmbiguousKind>(pair).topCarrier ==
        vx(unite(evens, PeriodicSet::finite({1}))));

  const std::vector<Vertex> members = {a, vx(unite(evens, PeriodicSet::finite({1}))),
                                       vx(swapIn(evens, 2, 1))};
  const CliqueKind bad = classifyClique(members);
  REQUIRE(std::holds_alternative<NotCliqueKind>(bad));
  const auto witness = std::get<NotCliqueKind>(bad);
  CHECK(witness.i < witness.j);
  CHECK_FALSE(adjacentJohnson(members[witness.i], members[witness.j]));

  CHECK_THROWS_AS(classifyClique({a, a}), DuplicateVertices);
  CHECK_THROWS_AS(classifyClique({a}), DomainError);
}

TEST_CASE("incidence is containment either way") {
  const PeriodicSet evens = PeriodicSet::evens();
  CHECK(incident(vx(evens), vx(unite(evens, PeriodicSet::finite({1})))));
  CHECK(incident(vx(unite(evens, PeriodicSet::finite({1}))), vx(evens)));
  CHECK(incident(vx(evens), vx(evens)));
  CHECK_FALSE(incident(vx(evens), vx(swapIn(evens, 2, 1))));
}

TEST_CASE("kneser distance follows the diameter-3 characterization") {
  const PeriodicSet evens = PeriodicSet::evens();
  const PeriodicSet odds = PeriodicSet::odds();

  CHECK(kneserDistance(vx(evens), vx(evens)).distance == 0);

  CHECK(adjacentKneser(vx(evens), vx(odds)));
  CHECK_FALSE(adjacentKneser(vx(evens), vx(swapIn(evens, 2, 1))));
  const KneserPath d1 = kneserDistance(vx(evens), vx(odds));
  CHECK(d1.distance == 1);
  REQUIRE(d1.path.size() == 2);

  // intersecting, union misses infinitely many points
  const KneserPath d2 = kneserDistance(vx(evens), vx(swapIn(evens, 2, 1)));
  CHECK(d2.distance == 2);
  REQUIRE(d2.path.size() == 3);
  CHECK(adjacentKneser(d2.path[0], d2.path[1]));
  CHECK(adjacentKneser(d2.path[1], d2.path[2]));

  // intersecting, union misses only the point 1
  const Vertex x = vx(evens);
  const Vertex y = vx(swapIn(odds, 1, 2));
  CHECK_FALSE(intersect(x.set(), y.set()).isEmpty());
  CHECK(complement(unite(x.set(), y.set())) == PeriodicSet::finite({1}));
  const KneserPath d3 = kneserDistance(x, y);
  CHECK(d3.distance == 3);
  REQUIRE(d3.path.size() == 4);
  CHECK(d3.path.front() == x);
  CHECK(d3.path.back() == y);
  for (std::size_t i = 0; i + 1 < d3.path.size(); ++i) {
    CHECK(adjacentKneser(d3.path[i], d3.path[i + 1]));
  }
}

TEST_CASE("separation witnesses meet x and avoid y") {
  const PeriodicSet evens = PeriodicSet::evens();
  const Vertex x = vx(evens);
  const Vertex y = vx(PeriodicSet::multiples(4));
  const Vertex z = kneserSeparationWitness(x, y);
  CHECK_FALSE(intersect(z.set(), x.set()).isEmpty());
  CHECK(intersect(z.set(), y.set()).isEmpty());

  CHECK_THROWS_AS(kneserSeparationWitness(vx(PeriodicSet::multiples(4)), vx(evens)), IsSubset);
}
