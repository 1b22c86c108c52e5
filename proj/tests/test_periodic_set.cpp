#include <doctest.h>

#include <random>

#include "jinf/periodic_set.hpp"

using namespace jinf;

namespace {

// Reference membership straight from an uncanonicalized (prefix, period)
// description; the class under test must agree everywhere.
bool rawMember(const Bits& prefix, const Bits& period, std::uint64_t n) {
  if (n <= prefix.size()) return prefix[n - 1];
  return period[(n - prefix.size() - 1) % period.size()];
}

}  // namespace

TEST_CASE("named constructors and membership") {
  const PeriodicSet evens = PeriodicSet::evens();
  CHECK(evens.member(2));
  CHECK(evens.member(100));
  CHECK_FALSE(evens.member(1));
  CHECK_FALSE(evens.member(99));
  CHECK(evens.toText() == "per(;01)");

  CHECK(PeriodicSet::odds().toText() == "per(;10)");
  CHECK(PeriodicSet::multiples(3) == PeriodicSet::residueClass(3, 0));
  CHECK(PeriodicSet::residueClass(5, 2).firstElements(3) == std::vector<std::uint64_t>{2, 7, 12});
  CHECK(PeriodicSet::naturals().toText() == "per(;1)");
  CHECK(PeriodicSet::emptySet().toText() == "per(;0)");
  CHECK(PeriodicSet::emptySet().isEmpty());
  CHECK(PeriodicSet::naturals().isAll());

  CHECK_THROWS_AS(PeriodicSet::residueClass(3, 3), DomainError);
  CHECK_THROWS_AS(evens.member(0), DomainError);
}

TEST_CASE("finite sets deduplicate and render as element lists") {
  const PeriodicSet s = PeriodicSet::finite({3, 1, 3});
  CHECK(s.toText() == "{1,3}");
  CHECK(s.isFinite());
  CHECK(s.finiteElements() == std::vector<std::uint64_t>{1, 3});
  CHECK(s.minElement() == 1);
  CHECK_FALSE(PeriodicSet::evens().finiteElements().has_value());
  CHECK_THROWS_AS(PeriodicSet::emptySet().minElement(), DomainError);
  CHECK_THROWS_AS(PeriodicSet::finite({0}), DomainError);
}

TEST_CASE("canonical form is representation independent") {
  // 1,3,5,... written with a redundant prefix and a rotated period
  CHECK(PeriodicSet::fromBits({1, 0, 1, 0}, {1, 0}) == PeriodicSet::odds());
  CHECK(PeriodicSet::fromBits({1}, {0, 1}) == PeriodicSet::odds());
  CHECK(PeriodicSet::fromBits({1, 0, 1, 0}, {1, 0}).prefixLength() == 0);

  // doubled block collapses to the minimal one
  const PeriodicSet s = PeriodicSet::fromBits({}, {1, 0, 1, 0});
  CHECK(s.periodLength() == 2);
  CHECK(s == PeriodicSet::odds());

  CHECK_THROWS_AS(PeriodicSet::fromBits({1}, {}), MalformedRepresentation);
}

TEST_CASE("canonicalization agrees with raw membership on random input") {
  std::mt19937_64 rng(20260814);
  for (int round = 0; round < 2000; ++round) {
    Bits prefix(rng() % 12);
    Bits period(1 + rng() % 9);
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = (rng() & 1) != 0;
    for (std::size_t i = 0; i < period.size(); ++i) period[i] = (rng() & 1) != 0;
    const PeriodicSet s = PeriodicSet::fromBits(prefix, period);

    const std::uint64_t window = prefix.size() + 4 * period.size() + 8;
    for (std::uint64_t n = 1; n <= window; ++n) {
      REQUIRE(s.member(n) == rawMember(prefix, period, n));
    }

    // minimality: no proper divisor of the period length generates the tail,
    // and a nonempty prefix never ends with the period's last bit
    const std::uint64_t p = s.periodLength();
    for (std::uint64_t d = 1; d < p; ++d) {
      if (p % d != 0) continue;
      bool collapses = true;
      for (std::uint64_t j = d; j < p && collapses; ++j) {
        collapses = s.periodBits()[j] == s.periodBits()[j % d];
      }
      CHECK_FALSE(collapses);
    }
    if (s.prefixLength() > 0) {
      CHECK(s.prefixBits().back() != s.periodBits().back());
    }
  }
}

TEST_CASE("boolean operations satisfy the membership laws") {
  const PeriodicSet a = PeriodicSet::evens();
  const PeriodicSet b = PeriodicSet::multiples(3);

  CHECK(intersect(a, b) == PeriodicSet::multiples(6));
  CHECK(unite(a, complement(a)) == PeriodicSet::naturals());
  CHECK(symmetricDiff(a, PeriodicSet::odds()) == PeriodicSet::naturals());
  CHECK(subtract(PeriodicSet::naturals(), PeriodicSet::odds()) == a);
  CHECK(complement(complement(b)) == b);

  CHECK(subsetOf(PeriodicSet::multiples(6), a));
  CHECK_FALSE(subsetOf(a, b));
  CHECK(subsetOf(PeriodicSet::emptySet(), b));

  const PeriodicSet mixed = unite(subtract(a, PeriodicSet::finite({2})), PeriodicSet::finite({1}));
  CHECK(mixed.member(1));
  CHECK_FALSE(mixed.member(2));
  CHECK(mixed.member(4));
  CHECK(mixed.toText() == "per(10;01)");
}

TEST_CASE("period alignment is guarded") {
  const PeriodicSet big1 = PeriodicSet::residueClass(4096, 0);
  const PeriodicSet big2 = PeriodicSet::residueClass(6561, 0);
  try {
    unite(big1, big2);
    FAIL("expected PeriodLimitExceeded");
  } catch (const PeriodLimitExceeded& e) {
    CHECK(e.lhs == 4096);
    CHECK(e.rhs == 6561);
  }
}

TEST_CASE("orbit classification") {
  const OrbitType fin = classifyOrbit(PeriodicSet::finite({1, 2}));
  CHECK(fin.kind == OrbitType::Kind::FiniteOfSize);
  CHECK(fin.size == 2);

  const OrbitType cofin = classifyOrbit(complement(PeriodicSet::finite({1, 2})));
  CHECK(cofin.kind == OrbitType::Kind::CofiniteOfCodim);
  CHECK(cofin.size == 2);

  CHECK(classifyOrbit(PeriodicSet::evens()).kind == OrbitType::Kind::Balanced);
  CHECK(PeriodicSet::evens().isBalanced());
  CHECK_FALSE(PeriodicSet::evens().isFinite());
  CHECK_FALSE(PeriodicSet::evens().isCofinite());

  CHECK_THROWS_AS(classifyOrbit(PeriodicSet::emptySet()), NotProperSubset);
  CHECK_THROWS_AS(classifyOrbit(PeriodicSet::naturals()), NotProperSubset);
}

TEST_CASE("splitting an infinite set alternates its elements") {
  const auto [first, second] = splitInfinite(PeriodicSet::evens());
  CHECK(first.firstElements(3) == std::vector<std::uint64_t>{2, 6, 10});
  CHECK(second.firstElements(3) == std::vector<std::uint64_t>{4, 8, 12});
  CHECK(intersect(first, second).isEmpty());
  CHECK(unite(first, second) == PeriodicSet::evens());
  CHECK_FALSE(first.isFinite());
  CHECK_FALSE(second.isFinite());

  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Bits period(2 + rng() % 7);
    for (std::size_t i = 0; i < period.size(); ++i) period[i] = (rng() & 1) != 0;
    period[rng() % period.size()] = true;
    Bits prefix(rng() % 5);
    for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = (rng() & 1) != 0;
    const PeriodicSet s = PeriodicSet::fromBits(std::move(prefix), std::move(period));
    const auto [x, y] = splitInfinite(s);
    CHECK(intersect(x, y).isEmpty());
    CHECK(unite(x, y) == s);
    CHECK_FALSE(x.isFinite());
    CHECK_FALSE(y.isFinite());
  }

  CHECK_THROWS_AS(splitInfinite(PeriodicSet::finite({1, 2})), NotInfinite);
}

TEST_CASE("first elements and rendering round out the accessors") {
  CHECK(PeriodicSet::evens().firstElements(4) == std::vector<std::uint64_t>{2, 4, 6, 8});
  CHECK(PeriodicSet::finite({5}).firstElements(1) == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(PeriodicSet::finite({5}).firstElements(3), DomainError);
  CHECK(PeriodicSet::evens().minElement() == 2);
  CHECK(PeriodicSet::evens().prefixBits().empty());
  CHECK(PeriodicSet::evens().periodBits() == Bits{false, true});
}
