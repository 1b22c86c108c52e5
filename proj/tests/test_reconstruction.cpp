#include <doctest.h>

#include <random>

#include "jinf/automorphism.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"
#include "jinf/reconstruction.hpp"

using namespace jinf;

namespace {

Vertex vx(const PeriodicSet& s) { return Vertex::fromSet(s); }

const PeriodicSet kEvens = PeriodicSet::evens();

AutomorphismOracle regular(const ComputablePermutation& s, bool flip) {
  return makeOracle(RegularAutomorphism{s, flip});
}

}  // namespace

TEST_CASE("star images classify the two cases") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  CHECK(classifyCase(regular(s, false), vx(kEvens)) == CaseTag::StarsToStars);
  CHECK(classifyCase(regular(s, true), vx(kEvens)) == CaseTag::StarsToTops);

  const AutomorphismOracle constant([](const Vertex&) { return PeriodicSet::evens(); });
  CHECK_THROWS_AS(classifyCase(constant, vx(PeriodicSet::odds())), NotCliquePreserving);
}

TEST_CASE("sigma reconstruction reads points off star probes") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  const AutomorphismOracle f = regular(s, false);
  const Vertex base = vx(kEvens);
  CHECK(reconstructSigma(f, base, 1) == 2);  // outside the base set
  CHECK(reconstructSigma(f, base, 2) == 1);  // inside the base set
  CHECK(reconstructSigma(f, base, 3) == 3);
  CHECK(reconstructSigma(f, base, 4) == 4);

  const AutomorphismOracle stuck([](const Vertex&) { return PeriodicSet::evens(); });
  CHECK_THROWS_AS(reconstructSigma(stuck, vx(kEvens), 1), NotSingleton);
}

TEST_CASE("component reconstruction folds the flip into the oracle") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 10; ++round) {
    RandomPermutationConfig config;
    config.seed = rng();
    const ComputablePermutation s = randomPermutation(config);
    const bool flip = (round % 2) == 1;
    const ComponentReconstruction recon = reconstructComponentMap(regular(s, flip), vx(kEvens));
    CHECK(recon.flip == flip);
    CHECK(recon.tag == (flip ? CaseTag::StarsToTops : CaseTag::StarsToStars));
    for (std::uint64_t n = 1; n <= 48; ++n) CHECK(recon.sigma.apply(n) == s.apply(n));
  }
}

TEST_CASE("reconstruction does not depend on the base vertex") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  const AutomorphismOracle f = regular(s, false);
  const Vertex baseA = vx(kEvens);
  const Vertex baseB =
      vx(unite(subtract(kEvens, PeriodicSet::finite({2, 4})), PeriodicSet::finite({1, 7})));
  std::vector<std::uint64_t> points;
  for (std::uint64_t n = 1; n <= 24; ++n) points.push_back(n);
  CHECK(baseIndependenceCheck(f, baseA, baseB, points));

  // the bases must share a component
  CHECK_THROWS_AS(baseIndependenceCheck(f, baseA, vx(PeriodicSet::odds()), points),
                  NotSameComponent);
}

TEST_CASE("restriction verification flags a corrupted image") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  const AutomorphismOracle honest = regular(s, false);
  const Vertex target = vx(unite(kEvens, PeriodicSet::finite({3})));

  const ComponentReconstruction recon = reconstructComponentMap(honest, vx(kEvens));
  const RestrictionReport good =
      verifyRestriction(honest, recon.sigma, recon.flip, {vx(kEvens), target}, 32);
  CHECK(good.allOk());
  CHECK(good.entries.size() == 2);

  const AutomorphismOracle tampered([&](const Vertex& v) {
    PeriodicSet image = pushforward(s, v.set());
    if (v == target) {
      image = unite(subtract(image, PeriodicSet::finite({image.minElement()})),
                    PeriodicSet::finite({complement(image).minElement()}));
    }
    return image;
  });
  const RestrictionReport flagged =
      verifyRestriction(tampered, recon.sigma, recon.flip, {vx(kEvens), target}, 32);
  CHECK_FALSE(flagged.allOk());
  CHECK(flagged.entries[0].ok);
  CHECK_FALSE(flagged.entries[1].ok);
  CHECK_FALSE(flagged.entries[1].detail.empty());
}

TEST_CASE("order-based reconstruction needs no base and detects reversal") {
  const ComputablePermutation s = ComputablePermutation::transposition(2, 5);
  const AutomorphismOracle f = regular(s, false);
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK(orderSigma(f, n) == s.apply(n));

  const QueryBackedPermutation sigma = reconstructOrderPreserving(f, 8);
  CHECK(sigma.apply(2) == 5);
  CHECK(sigma.apply(40) == 40);  // queries beyond the sweep window are fine

  const AutomorphismOracle flipped = regular(s, true);
  for (std::uint64_t n : {1, 2, 3, 7}) {
    CHECK_THROWS_AS(orderSigma(flipped, n), NotSingletonIntersection);
  }
}

TEST_CASE("meet preservation holds for induced maps and fails for relabelings") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  const AutomorphismOracle f = regular(s, false);
  const Vertex x1 = vx(unite(kEvens, PeriodicSet::finite({1})));
  const Vertex x2 = vx(unite(kEvens, PeriodicSet::finite({3})));
  CHECK(checkIntersectionPreservation(f, {x1, x2}));

  // relabel one component only; a cross-component family exposes the seam
  const Vertex a = vx(kEvens);
  const Vertex b = vx(unite(subtract(kEvens, PeriodicSet::finite({2})), PeriodicSet::finite({1})));
  const ExampleOneResult example = buildExampleOne(a, b);
  const AutomorphismOracle g = makeOracle(example.f);
  const Vertex y = example.certificate.y;
  REQUIRE(subsetOf(y.set(), a.set()));
  CHECK_FALSE(checkIntersectionPreservation(g, {a, y}));

  CHECK_THROWS_AS(checkIntersectionPreservation(f, {}), DomainError);
  CHECK_THROWS_AS(checkIntersectionPreservation(f, {vx(kEvens), vx(PeriodicSet::odds())}),
                  IntersectionNotVertex);
}

TEST_CASE("covering preservation") {
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);
  const Vertex upper = vx(unite(kEvens, PeriodicSet::finite({5})));
  const Vertex lower = vx(kEvens);
  CHECK(checkCoveringPreservation(regular(s, false), upper, lower));

  const AutomorphismOracle scrambled([&](const Vertex& v) {
    if (v == lower) return PeriodicSet::odds();
    return v.set();
  });
  CHECK_FALSE(checkCoveringPreservation(scrambled, upper, lower));

  CHECK_THROWS_AS(
      checkCoveringPreservation(regular(s, false), vx(kEvens), vx(PeriodicSet::odds())),
      PreconditionViolated);
}

TEST_CASE("containment samples expose order violations") {
  const Vertex a = vx(kEvens);
  const Vertex b = vx(unite(subtract(kEvens, PeriodicSet::finite({2})), PeriodicSet::finite({1})));
  const ExampleOneResult example = buildExampleOne(a, b);
  const AutomorphismOracle g = makeOracle(example.f);

  const OrderCheckVerdict bad =
      checkOrderPreservingOnSamples(g, {{example.certificate.a, example.certificate.y}});
  CHECK_FALSE(bad.allPass);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == example.certificate.a);

  const OrderCheckVerdict fine = checkOrderPreservingOnSamples(
      regular(ComputablePermutation::transposition(1, 2), false),
      {{a, vx(unite(kEvens, PeriodicSet::finite({1})))}});
  CHECK(fine.allPass);
  CHECK_FALSE(fine.witness.has_value());
}

TEST_CASE("closed forms are recovered from pointwise access") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 5; ++round) {
    RandomPermutationConfig config;
    config.seed = rng();
    const ComputablePermutation s = randomPermutation(config);
    const QueryBackedPermutation q([&s](std::uint64_t n) { return s.apply(n); });
    const auto recovered = exactifyPermutation(q, ExactifySearch{});
    REQUIRE(recovered.has_value());
    CHECK(*recovered == s);
  }

  // swaps (2^k, 2^k + 1) for k >= 2: deviations recur past every window,
  // so no candidate within the search bounds survives its cross-check
  const auto pow2Swap = [](std::uint64_t n) -> std::uint64_t {
    const auto isPow2 = [](std::uint64_t m) { return m >= 4 && (m & (m - 1)) == 0; };
    if (isPow2(n)) return n + 1;
    if (n >= 5 && isPow2(n - 1)) return n - 1;
    return n;
  };
  const QueryBackedPermutation qFar(pow2Swap);
  CHECK_FALSE(exactifyPermutation(qFar, ExactifySearch{}).has_value());

  // a single deviation beyond every verified window is invisible: the search
  // settles on the spec agreeing with all sampled points
  const ComputablePermutation far = ComputablePermutation::transposition(100, 101);
  const QueryBackedPermutation qTrap([&far](std::uint64_t n) { return far.apply(n); });
  const auto best = exactifyPermutation(qTrap, ExactifySearch{});
  REQUIRE(best.has_value());
  CHECK(*best == ComputablePermutation::identity());

  // inconsistency in the backing oracle is not swallowed
  const QueryBackedPermutation broken([](std::uint64_t) { return std::uint64_t{1}; });
  CHECK_THROWS_AS(exactifyPermutation(broken, ExactifySearch{}), InconsistentOracle);
}
