#include "jinf/suite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "jinf/automorphism.hpp"
#include "jinf/finite_graph.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"
#include "jinf/reconstruction.hpp"

namespace jinf {
namespace {

using Witness = std::optional<std::string>;

PeriodicSet randomSet(std::mt19937_64& rng, std::uint64_t maxPrefix = 8,
                      std::uint64_t maxPeriod = 8) {
  const std::uint64_t prefixLen = rng() % (maxPrefix + 1);
  const std::uint64_t periodLen = 1 + rng() % maxPeriod;
  Bits prefix(prefixLen);
  Bits period(periodLen);
  for (std::uint64_t i = 0; i < prefixLen; ++i) prefix[i] = (rng() & 1) != 0;
  for (std::uint64_t i = 0; i < periodLen; ++i) period[i] = (rng() & 1) != 0;
  return PeriodicSet::fromBits(std::move(prefix), std::move(period));
}

PeriodicSet randomBalancedSet(std::mt19937_64& rng, std::uint64_t maxPrefix = 6,
                              std::uint64_t maxPeriod = 6) {
  const std::uint64_t prefixLen = rng() % (maxPrefix + 1);
  const std::uint64_t periodLen = 2 + rng() % (maxPeriod - 1);
  Bits prefix(prefixLen);
  Bits period(periodLen);
  for (std::uint64_t i = 0; i < prefixLen; ++i) prefix[i] = (rng() & 1) != 0;
  for (std::uint64_t i = 0; i < periodLen; ++i) period[i] = (rng() & 1) != 0;
  // force one point and one gap in every period so the set stays balanced
  const std::uint64_t on = rng() % periodLen;
  std::uint64_t off = rng() % periodLen;
  if (off == on) off = (off + 1) % periodLen;
  period[on] = true;
  period[off] = false;
  return PeriodicSet::fromBits(std::move(prefix), std::move(period));
}

PeriodicSet randomFiniteSet(std::mt19937_64& rng, std::uint64_t maxElement = 24,
                            std::uint64_t maxCount = 4) {
  std::vector<std::uint64_t> elements;
  const std::uint64_t count = rng() % (maxCount + 1);
  for (std::uint64_t i = 0; i < count; ++i) elements.push_back(1 + rng() % maxElement);
  return PeriodicSet::finite(elements);
}

ComputablePermutation randomPerm(std::mt19937_64& rng, std::uint64_t maxModulus = 4,
                                 std::uint64_t maxOffset = 2, std::uint64_t maxPatch = 6) {
  RandomPermutationConfig config;
  config.maxModulus = maxModulus;
  config.maxOffset = maxOffset;
  config.maxPatch = maxPatch;
  config.seed = rng();
  return randomPermutation(config);
}

std::string describeRound(int round, const std::string& rest) {
  return "round " + std::to_string(round) + ": " + rest;
}

// --- regular-roundtrip ------------------------------------------------------

Witness checkRegularRoundtrip(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Vertex base = Vertex::fromSet(PeriodicSet::evens());
  for (int round = 0; round < 100; ++round) {
    const ComputablePermutation s = randomPerm(rng, 6, 3, 8);
    const bool flip = (rng() & 1) != 0;
    const AutomorphismOracle oracle = makeOracle(RegularAutomorphism{s, flip});
    const ComponentReconstruction recon = reconstructComponentMap(oracle, base);
    const CaseTag expected = flip ? CaseTag::StarsToTops : CaseTag::StarsToStars;
    if (recon.tag != expected || recon.flip != flip) {
      return describeRound(round, std::string("flip=") + (flip ? "true" : "false") +
                                      " misclassified");
    }
    for (std::uint64_t n = 1; n <= 128; ++n) {
      const std::uint64_t got = recon.sigma.apply(n);
      const std::uint64_t want = s.apply(n);
      if (got != want) {
        return describeRound(round, "sigma(" + std::to_string(n) + ") = " + std::to_string(got) +
                                        ", generator gives " + std::to_string(want));
      }
    }
  }
  return std::nullopt;
}

// --- nonregular-restriction -------------------------------------------------

Witness checkNonregularRestriction() {
  const PeriodicSet a = PeriodicSet::evens();
  const PeriodicSet b =
      unite(subtract(a, PeriodicSet::finite({2})), PeriodicSet::finite({1}));
  const ExampleOneResult example = buildExampleOne(Vertex::fromSet(a), Vertex::fromSet(b));
  const AutomorphismOracle oracle = makeOracle(example.f);
  const ComputablePermutation s = ComputablePermutation::transposition(1, 2);

  const ComponentReconstruction moved = reconstructComponentMap(oracle, Vertex::fromSet(a));
  if (moved.flip || moved.tag != CaseTag::StarsToStars) {
    return std::string("relabeled component misclassified");
  }
  for (std::uint64_t n = 1; n <= 128; ++n) {
    if (moved.sigma.apply(n) != s.apply(n)) {
      return "relabeled component: sigma(" + std::to_string(n) + ") = " +
             std::to_string(moved.sigma.apply(n));
    }
  }

  const std::vector<PeriodicSet> others = {
      PeriodicSet::odds(), PeriodicSet::multiples(3), PeriodicSet::residueClass(4, 0),
      PeriodicSet::residueClass(4, 1), PeriodicSet::residueClass(5, 0)};
  for (const PeriodicSet& other : others) {
    const ComponentReconstruction recon =
        reconstructComponentMap(oracle, Vertex::fromSet(other));
    if (recon.flip || recon.tag != CaseTag::StarsToStars) {
      return "untouched component " + other.toText() + " misclassified";
    }
    for (std::uint64_t n = 1; n <= 64; ++n) {
      if (recon.sigma.apply(n) != n) {
        return "untouched component " + other.toText() + ": sigma(" + std::to_string(n) +
               ") = " + std::to_string(recon.sigma.apply(n));
      }
    }
  }

  if (!verifyCertificate(oracle, example.certificate)) return std::string("certificate rejected");
  const OrderCheckVerdict verdict = checkOrderPreservingOnSamples(
      oracle, {{example.certificate.a, example.certificate.y}});
  if (verdict.allPass) return std::string("order violation went undetected");
  return std::nullopt;
}

// --- base-independence ------------------------------------------------------

Witness checkBaseIndependence(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const PeriodicSet evens = PeriodicSet::evens();
  const PeriodicSet evensTwin = unite(subtract(evens, PeriodicSet::finite({2, 4})),
                                      PeriodicSet::finite({1, 7}));
  const PeriodicSet odds = PeriodicSet::odds();
  const PeriodicSet oddsTwin =
      unite(subtract(odds, PeriodicSet::finite({1})), PeriodicSet::finite({4}));
  const std::vector<std::pair<PeriodicSet, PeriodicSet>> basePairs = {{evens, evensTwin},
                                                                      {odds, oddsTwin}};
  std::vector<std::uint64_t> points(16);
  std::iota(points.begin(), points.end(), 1);

  for (int round = 0; round < 20; ++round) {
    const ComputablePermutation s = randomPerm(rng);
    const bool flip = (rng() & 1) != 0;
    const AutomorphismOracle oracle = makeOracle(RegularAutomorphism{s, flip});
    const AutomorphismOracle starPreserving =
        flip ? AutomorphismOracle(
                   [oracle](const Vertex& v) { return complement(oracle(v).set()); })
             : oracle;
    for (const auto& [first, second] : basePairs) {
      const Vertex baseA = Vertex::fromSet(first);
      const Vertex baseB = Vertex::fromSet(second);
      const ComponentReconstruction ra = reconstructComponentMap(oracle, baseA);
      const ComponentReconstruction rb = reconstructComponentMap(oracle, baseB);
      for (std::uint64_t n = 1; n <= 64; ++n) {
        const std::uint64_t va = ra.sigma.apply(n);
        if (va != rb.sigma.apply(n) || va != s.apply(n)) {
          return describeRound(round, "bases " + first.toText() + " and " + second.toText() +
                                          " disagree at " + std::to_string(n));
        }
      }
      if (!baseIndependenceCheck(starPreserving, baseA, baseB, points)) {
        return describeRound(round, "pointwise base independence failed");
      }
    }
  }
  return std::nullopt;
}

// --- order-reconstruction ---------------------------------------------------

Witness checkOrderReconstruction(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 50; ++round) {
    const ComputablePermutation s = randomPerm(rng);
    const AutomorphismOracle oracle = makeOracle(RegularAutomorphism{s, false});
    const QueryBackedPermutation sigma = reconstructOrderPreserving(oracle, 8);
    for (std::uint64_t n = 1; n <= 128; ++n) {
      if (sigma.apply(n) != s.apply(n)) {
        return describeRound(round, "order reconstruction differs at " + std::to_string(n));
      }
    }
  }

  // complementing maps must trip the meet probe
  {
    const ComputablePermutation s = randomPerm(rng);
    const AutomorphismOracle flipped = makeOracle(RegularAutomorphism{s, true});
    for (std::uint64_t n = 1; n <= 8; ++n) {
      try {
        orderSigma(flipped, n);
        return "complementing map survived the probe at " + std::to_string(n);
      } catch (const NotSingletonIntersection&) {
      }
    }
  }

  // meets and coverings survive permutation-induced maps
  for (int round = 0; round < 100; ++round) {
    const ComputablePermutation s = randomPerm(rng);
    const AutomorphismOracle oracle = makeOracle(RegularAutomorphism{s, false});
    const Vertex x1 = Vertex::fromSet(unite(PeriodicSet::evens(), randomFiniteSet(rng)));
    const Vertex x2 = Vertex::fromSet(unite(PeriodicSet::evens(), randomFiniteSet(rng)));
    if (!checkIntersectionPreservation(oracle, {x1, x2})) {
      return describeRound(round, "meet of " + x1.set().toText() + " and " + x2.set().toText() +
                                      " not preserved");
    }
  }
  for (int round = 0; round < 100; ++round) {
    const ComputablePermutation s = randomPerm(rng);
    const AutomorphismOracle oracle = makeOracle(RegularAutomorphism{s, false});
    const PeriodicSet lower = randomBalancedSet(rng);
    const auto absent = complement(lower).firstElements(5);
    const std::uint64_t added = absent[rng() % absent.size()];
    const Vertex x = Vertex::fromSet(unite(lower, PeriodicSet::finite({added})));
    const Vertex y = Vertex::fromSet(lower);
    if (!checkCoveringPreservation(oracle, x, y)) {
      return describeRound(round, "covering over " + lower.toText() + " not preserved");
    }
  }
  return std::nullopt;
}

// --- finite-groups ----------------------------------------------------------

Witness checkFiniteGroups() {
  const FiniteGraph j52 = buildJohnsonFinite(5, 2);
  if (const auto order = autGroupOrder(j52); order != 120) {
    return "2-subsets of a 5-set: expected 120 symmetries, counted " + std::to_string(order);
  }
  const FiniteGraph j63 = buildJohnsonFinite(6, 3);
  if (const auto order = autGroupOrder(j63); order != 1440) {
    return "3-subsets of a 6-set: expected 1440 symmetries, counted " + std::to_string(order);
  }
  const FiniteGraph k52 = buildKneserFinite(5, 2);
  if (const auto order = autGroupOrder(k52); order != 120) {
    return "disjointness on 2-subsets of a 5-set: expected 120 symmetries, counted " +
           std::to_string(order);
  }

  const auto cliques = maximalCliques(j52);
  std::size_t stars = 0;
  std::size_t tops = 0;
  for (const MaximalClique& clique : cliques) {
    if (clique.isStar && clique.members.size() == 4) ++stars;
    if (clique.isTop && clique.members.size() == 3) ++tops;
  }
  if (cliques.size() != 15 || stars != 5 || tops != 10) {
    return "clique census: " + std::to_string(stars) + " stars, " + std::to_string(tops) +
           " tops, " + std::to_string(cliques.size()) + " total";
  }

  std::vector<std::uint64_t> points{1, 2, 3, 4, 5};
  do {
    const auto vertexMap = applyPointMapToVertices(j52, points);
    const InducedPointMap recovered = inducedPermutationFinite(j52, vertexMap);
    if (recovered.usedComplement || recovered.images != points) {
      std::ostringstream os;
      os << "point map";
      for (std::uint64_t q : points) os << ' ' << q;
      os << " does not round-trip";
      return os.str();
    }
  } while (std::next_permutation(points.begin(), points.end()));
  return std::nullopt;
}

// --- distance-law -----------------------------------------------------------

Witness checkDistanceLaw() {
  const FiniteGraph g =
      buildTruncatedComponent(Vertex::fromSet(PeriodicSet::evens()), 16, 3);
  if (g.size() != 3985) {
    return "expected 3985 vertices, built " + std::to_string(g.size());
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto dist = bfsAll(g, v);
    for (std::size_t u = v + 1; u < g.size(); ++u) {
      const auto law = static_cast<std::int64_t>(std::popcount(g.masks[v] ^ g.masks[u]) / 2);
      if (dist[u] != law) {
        return "distance between " + g.labelText(v) + " and " + g.labelText(u) + " is " +
               std::to_string(dist[u]) + ", the difference count is " + std::to_string(law);
      }
    }
  }
  return std::nullopt;
}

// --- kneser-metric ----------------------------------------------------------

Witness checkKneserMetric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t deepPairs = 0;
  for (int round = 0; round < 1000; ++round) {
    const Vertex x = Vertex::fromSet(randomBalancedSet(rng));
    const Vertex y = Vertex::fromSet(randomBalancedSet(rng));
    const KneserPath result = kneserDistance(x, y);

    if (result.path.size() != result.distance + 1 || !(result.path.front() == x) ||
        !(result.path.back() == y)) {
      return describeRound(round, "path shape is wrong");
    }
    for (std::size_t i = 0; i + 1 < result.path.size(); ++i) {
      if (!adjacentKneser(result.path[i], result.path[i + 1])) {
        return describeRound(round, "path step " + std::to_string(i) + " is not an edge");
      }
    }

    // Pin the exact value independently: equality, disjointness, and the
    // complement of the union decide everything. A finite complement rules
    // out any common neighbor, so intersecting pairs there sit at 3.
    std::uint64_t expected = 3;
    if (x == y) {
      expected = 0;
    } else if (intersect(x.set(), y.set()).isEmpty()) {
      expected = 1;
    } else if (!complement(unite(x.set(), y.set())).isFinite()) {
      expected = 2;
    }
    if (result.distance != expected) {
      return describeRound(round, x.set().toText() + " vs " + y.set().toText() + ": got " +
                                      std::to_string(result.distance) + ", characterization " +
                                      std::to_string(expected));
    }
    if (expected == 3) ++deepPairs;

    if (!subsetOf(x.set(), y.set())) {
      const Vertex z = kneserSeparationWitness(x, y);
      if (!intersect(z.set(), y.set()).isEmpty() || intersect(z.set(), x.set()).isEmpty()) {
        return describeRound(round, "separation witness fails its contract");
      }
    }
  }
  if (deepPairs == 0) return std::string("no distance-3 pair under this seed");
  return std::nullopt;
}

// --- core-algebra -----------------------------------------------------------

Witness checkCoreAlgebra(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 10000; ++round) {
    const PeriodicSet a = randomSet(rng);
    const PeriodicSet b = randomSet(rng);
    const std::uint64_t window = 1 + rng() % 512;

    // canonical form: the period is minimal and the prefix cannot shrink
    const std::uint64_t p = a.periodLength();
    for (std::uint64_t d = 1; d < p; ++d) {
      if (p % d != 0) continue;
      bool collapses = true;
      for (std::uint64_t j = d; j < p && collapses; ++j) {
        collapses = a.periodBits()[j] == a.periodBits()[j % d];
      }
      if (collapses) return describeRound(round, "period " + a.toText() + " is not minimal");
    }
    if (a.prefixLength() > 0 && a.prefixBits().back() == a.periodBits().back()) {
      return describeRound(round, "prefix of " + a.toText() + " can still peel");
    }

    // representation independence: doubled period, prefix padded by one step
    {
      Bits doubled = a.periodBits();
      doubled.insert(doubled.end(), a.periodBits().begin(), a.periodBits().end());
      if (PeriodicSet::fromBits(a.prefixBits(), doubled) != a) {
        return describeRound(round, "doubling the period changed " + a.toText());
      }
      Bits padded = a.prefixBits();
      padded.push_back(a.periodBits().front());
      Bits rotated(a.periodBits().begin() + 1, a.periodBits().end());
      rotated.push_back(a.periodBits().front());
      if (PeriodicSet::fromBits(std::move(padded), std::move(rotated)) != a) {
        return describeRound(round, "rotating a period step changed " + a.toText());
      }
    }

    const PeriodicSet uni = unite(a, b);
    const PeriodicSet meet = intersect(a, b);
    const PeriodicSet diff = subtract(a, b);
    const PeriodicSet sym = symmetricDiff(a, b);
    const PeriodicSet comp = complement(a);
    for (std::uint64_t n = 1; n <= window; ++n) {
      const bool inA = a.member(n);
      const bool inB = b.member(n);
      if (uni.member(n) != (inA || inB) || meet.member(n) != (inA && inB) ||
          diff.member(n) != (inA && !inB) || sym.member(n) != (inA != inB) ||
          comp.member(n) == inA) {
        return describeRound(round, "membership law fails at " + std::to_string(n));
      }
    }
    if (complement(comp) != a || subsetOf(meet, a) != true || subsetOf(a, uni) != true) {
      return describeRound(round, "complement or containment law fails for " + a.toText());
    }
  }

  std::mt19937_64 rng2(seed ^ 0x9e3779b97f4a7c15ull);
  for (int round = 0; round < 200; ++round) {
    const ComputablePermutation s = randomPerm(rng2);
    const ComputablePermutation t = randomPerm(rng2);
    const ComputablePermutation st = compose(s, t);
    const ComputablePermutation sInv = s.inverse();
    for (std::uint64_t n = 1; n <= 1024; ++n) {
      if (st.apply(n) != s.apply(t.apply(n))) {
        return describeRound(round, "composition differs at " + std::to_string(n));
      }
      if (sInv.apply(s.apply(n)) != n || s.applyInverse(s.apply(n)) != n) {
        return describeRound(round, "inverse differs at " + std::to_string(n));
      }
    }
    if (ComputablePermutation::fromSpec(s.threshold(), s.modulus(), s.classMaps(), s.patch()) !=
        s) {
      return describeRound(round, "revalidation is not a fixed point");
    }
    const PeriodicSet set = randomSet(rng2);
    const PeriodicSet image = pushforward(s, set);
    for (std::uint64_t m = 1; m <= 512; ++m) {
      if (image.member(m) != set.member(s.applyInverse(m))) {
        return describeRound(round, "pushforward membership differs at " + std::to_string(m));
      }
    }
  }
  return std::nullopt;
}

// --- mutant-probe -----------------------------------------------------------

// Feeds the reconstruction pipeline an oracle corrupted at one vertex and
// passes only when the restriction check reports the corruption.
Witness checkMutantProbe(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ComputablePermutation s = randomPerm(rng);
  const AutomorphismOracle honest = makeOracle(RegularAutomorphism{s, false});
  const Vertex target =
      Vertex::fromSet(unite(PeriodicSet::evens(), PeriodicSet::finite({3})));
  const AutomorphismOracle tampered([honest, target](const Vertex& v) {
    PeriodicSet image = honest(v).set();
    if (v == target) {
      const std::uint64_t dropped = image.minElement();
      const std::uint64_t added = complement(image).minElement();
      image = unite(subtract(image, PeriodicSet::finite({dropped})),
                    PeriodicSet::finite({added}));
    }
    return image;
  });

  const ComponentReconstruction recon =
      reconstructComponentMap(tampered, Vertex::fromSet(PeriodicSet::evens()));
  const RestrictionReport report =
      verifyRestriction(tampered, recon.sigma, recon.flip, {target}, 64);
  if (report.allOk()) return std::string("tampered image slipped past the restriction check");
  return std::nullopt;
}

// --- registry ----------------------------------------------------------------

struct NamedCheck {
  std::string name;
  std::function<Witness(const SuiteConfig&)> run;
};

std::vector<NamedCheck> buildRegistry(bool includeMutant) {
  std::vector<NamedCheck> checks = {
      {"regular-roundtrip",
       [](const SuiteConfig& c) { return checkRegularRoundtrip(c.seed ^ 0x5eed0001ull); }},
      {"nonregular-restriction",
       [](const SuiteConfig&) { return checkNonregularRestriction(); }},
      {"base-independence",
       [](const SuiteConfig& c) { return checkBaseIndependence(c.seed ^ 0x5eed0002ull); }},
      {"order-reconstruction",
       [](const SuiteConfig& c) { return checkOrderReconstruction(c.seed ^ 0x5eed0003ull); }},
      {"finite-groups", [](const SuiteConfig&) { return checkFiniteGroups(); }},
      {"distance-law", [](const SuiteConfig&) { return checkDistanceLaw(); }},
      {"kneser-metric",
       [](const SuiteConfig& c) { return checkKneserMetric(c.seed ^ 0x5eed0004ull); }},
      {"core-algebra",
       [](const SuiteConfig& c) { return checkCoreAlgebra(c.seed ^ 0x5eed0005ull); }},
  };
  if (includeMutant) {
    checks.push_back({"mutant-probe", [](const SuiteConfig& c) {
                        return checkMutantProbe(c.seed ^ 0x5eed0006ull);
                      }});
  }
  return checks;
}

const char* statusText(CheckResult::Status status) {
  switch (status) {
    case CheckResult::Status::Pass:
      return "pass";
    case CheckResult::Status::Fail:
      return "fail";
    default:
      return "error";
  }
}

}  // namespace

bool SuiteReport::allPassed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) {
    return r.status == CheckResult::Status::Pass;
  });
}

std::vector<std::string> suiteCheckNames(bool includeMutant) {
  std::vector<std::string> names;
  for (const NamedCheck& check : buildRegistry(includeMutant)) names.push_back(check.name);
  return names;
}

SuiteReport runSuite(const SuiteConfig& config) {
  SuiteReport report;
  for (const NamedCheck& check : buildRegistry(config.includeMutant)) {
    if (!config.filter.empty() && check.name.find(config.filter) == std::string::npos) continue;
    CheckResult result;
    result.name = check.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (const Witness witness = check.run(config)) {
        result.status = CheckResult::Status::Fail;
        result.witness = *witness;
      }
    } catch (const std::exception& e) {
      result.status = CheckResult::Status::Error;
      result.witness = e.what();
    }
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report.checks.push_back(std::move(result));
  }
  return report;
}

std::string renderReportText(const SuiteReport& report) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CheckResult& r : report.checks) {
    if (r.status == CheckResult::Status::Pass) {
      ++passed;
      os << "PASS " << r.name << " (" << r.millis << " ms)\n";
    } else {
      os << (r.status == CheckResult::Status::Fail ? "FAIL " : "ERROR ") << r.name << ": "
         << r.witness << " (" << r.millis << " ms)\n";
    }
  }
  os << passed << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

std::string renderReportJson(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : report.checks) {
    checks.push_back({{"name", r.name},
                      {"status", statusText(r.status)},
                      {"witness", r.witness},
                      {"millis", r.millis}});
  }
  return nlohmann::json{{"checks", checks}, {"allPassed", report.allPassed()}}.dump(2);
}

}  // namespace jinf
