#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jinf/errors.hpp"

namespace jinf {

using Bits = std::vector<bool>;

// An eventually periodic subset of N = {1, 2, 3, ...}: finitely many explicit
// prefix bits followed by an infinitely repeated block.
//
//   n in S  <=>  n <= L ? prefix[n]  :  period[((n - L - 1) mod p) + 1]
//
// (1-based bit positions; L = prefix length, p = period length >= 1).
// Examples, written prefix;period:
//
//      ;01      = {2,4,6,...}        evens
//      ;10      = {1,3,5,...}        odds
//      1011;0   = {1,3,4}            finite sets have an all-zero period
//      ;1       = N                  cofinite sets have an all-one period
//      01;0001  = {2} u {6,10,14,..}
//
// Instances are kept canonical: the period is the shortest block generating
// the tail, and given that, the prefix is as short as possible (a trailing
// prefix bit that merely repeats the period is folded into it, rotating the
// block). Canonical forms are unique, so operator== decides extensional set
// equality. This class is the ground representation everywhere else: graph
// vertices are balanced instances, permutations push them forward exactly.
class PeriodicSet {
 public:
  // Canonicalizes. Throws MalformedRepresentation if period is empty.
  static PeriodicSet fromBits(Bits prefix, Bits period);

  // Finite set literal. Throws DomainError on elements below 1.
  static PeriodicSet finite(const std::vector<std::uint64_t>& elements);

  static PeriodicSet emptySet();
  static PeriodicSet naturals();
  static PeriodicSet evens();
  static PeriodicSet odds();
  // {n : n = residue (mod modulus), n >= 1}; residue taken in [0, modulus).
  static PeriodicSet residueClass(std::uint64_t modulus, std::uint64_t residue);
  static PeriodicSet multiples(std::uint64_t modulus);

  PeriodicSet() : PeriodicSet(emptySet()) {}

  // Membership of n >= 1 (DomainError otherwise). O(1).
  bool member(std::uint64_t n) const;

  std::uint64_t prefixLength() const { return prefix_.size(); }
  std::uint64_t periodLength() const { return period_.size(); }
  const Bits& prefixBits() const { return prefix_; }
  const Bits& periodBits() const { return period_; }

  bool isEmpty() const;
  bool isAll() const;
  bool isFinite() const;    // period all zero
  bool isCofinite() const;  // period all one
  bool isBalanced() const;  // infinite with infinite complement

  // Ascending elements when finite, nullopt when infinite.
  std::optional<std::vector<std::uint64_t>> finiteElements() const;

  // Least element; DomainError on the empty set.
  std::uint64_t minElement() const;

  // The `count` smallest elements, ascending. DomainError if the set has
  // fewer (only possible for finite sets).
  std::vector<std::uint64_t> firstElements(std::size_t count) const;

  bool operator==(const PeriodicSet& other) const = default;

  // Canonical text: {1,2,3} for finite sets, per(prefix;period) otherwise.
  std::string toText() const;

 private:
  PeriodicSet(Bits prefix, Bits period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    canonicalize();
  }
  void canonicalize();

  Bits prefix_;
  Bits period_;
};

std::ostream& operator<<(std::ostream& os, const PeriodicSet& s);

// Boolean algebra. Binary operations align the operands on a common prefix
// and on lcm of the periods; PeriodLimitExceeded above kPeriodLimit.
PeriodicSet complement(const PeriodicSet& s);
PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet subtract(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet symmetricDiff(const PeriodicSet& a, const PeriodicSet& b);

bool subsetOf(const PeriodicSet& a, const PeriodicSet& b);

// Trichotomy for nonempty proper subsets of N.
struct OrbitType {
  enum class Kind { FiniteOfSize, CofiniteOfCodim, Balanced };
  Kind kind = Kind::Balanced;
  std::uint64_t size = 0;  // cardinality resp. codimension; 0 for Balanced

  bool operator==(const OrbitType&) const = default;
};

std::ostream& operator<<(std::ostream& os, const OrbitType& t);

// Thrown by classifyOrbit on the empty set and on all of N.
class NotProperSubset : public Error {
 public:
  explicit NotProperSubset(bool empty)
      : Error(empty ? "empty set is not a proper nonempty subset"
                    : "full set is not a proper nonempty subset"),
        isEmpty(empty) {}
  bool isEmpty;
};

OrbitType classifyOrbit(const PeriodicSet& s);

// Thrown by splitInfinite on finite input.
class NotInfinite : public Error {
 public:
  NotInfinite() : Error("set is finite, cannot split into two infinite halves") {}
};

// Splits an infinite set into two infinite halves by alternation: the 1st,
// 3rd, 5th, ... elements (ascending) go left, the rest go right. Both halves
// are eventually periodic with period at most twice the input's.
std::pair<PeriodicSet, PeriodicSet> splitInfinite(const PeriodicSet& s);

}  // namespace jinf
