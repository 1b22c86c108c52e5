#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "jinf/errors.hpp"
#include "jinf/periodic_set.hpp"

namespace jinf {

class ResidueMapNotBijective : public Error {
 public:
  ResidueMapNotBijective() : Error("class maps do not permute the residues") {}
};

class NotInjective : public Error {
 public:
  NotInjective(std::uint64_t a, std::uint64_t b)
      : Error("points " + std::to_string(a) + " and " + std::to_string(b) +
              " share an image"),
        n1(a),
        n2(b) {}
  std::uint64_t n1;
  std::uint64_t n2;
};

class NotSurjective : public Error {
 public:
  explicit NotSurjective(std::uint64_t m)
      : Error("value " + std::to_string(m) + " has no preimage"), missing(m) {}
  std::uint64_t missing;
};

class GenerationFailed : public Error {
 public:
  GenerationFailed() : Error("could not generate a valid permutation within retry budget") {}
};

// A bijection s of N = {1, 2, ...} that is eventually a translation on every
// residue class: for n > threshold with n = r (mod p),
//
//   s(n) = n + (to(r) - r) + p * offset(r)
//
// where r -> to(r) permutes the residues {0..p-1}, plus a finite patch of
// exceptional points at or below the threshold (unpatched points below the
// threshold follow the class formula too). Construction validates exact
// bijectivity on finite windows; see docs/permutation-validation.md for why
// the windows decide it. Instances are normalized (minimal modulus, minimal
// threshold, patch holds only genuine exceptions), so operator== is
// meaningful: equal fields iff equal functions.
class ComputablePermutation {
 public:
  struct ClassMap {
    std::uint64_t from = 0;  // source residue r in [0, p)
    std::uint64_t to = 0;    // image residue in [0, p)
    std::int64_t offset = 0; // jump in whole blocks of size p

    bool operator==(const ClassMap&) const = default;
  };

  // Validates and normalizes; throws ResidueMapNotBijective, NotInjective,
  // NotSurjective, MalformedRepresentation.
  static ComputablePermutation fromSpec(std::uint64_t threshold, std::uint64_t modulus,
                                        const std::vector<ClassMap>& classes,
                                        const std::map<std::uint64_t, std::uint64_t>& patch);

  static ComputablePermutation identity();

  // Identity outside the patch. The patch must itself be a bijection of a
  // finite set of points (validated).
  static ComputablePermutation fromPatch(const std::map<std::uint64_t, std::uint64_t>& patch);

  static ComputablePermutation transposition(std::uint64_t a, std::uint64_t b);

  ComputablePermutation() {
    shifts_ = {0};
    buildInverseTables();
  }

  std::uint64_t apply(std::uint64_t n) const;
  std::uint64_t applyInverse(std::uint64_t m) const;

  ComputablePermutation inverse() const;

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t modulus() const { return modulus_; }
  std::vector<ClassMap> classMaps() const;
  const std::map<std::uint64_t, std::uint64_t>& patch() const { return patch_; }

  bool operator==(const ComputablePermutation& other) const = default;

 private:
  friend ComputablePermutation compose(const ComputablePermutation&, const ComputablePermutation&);

  std::int64_t shiftAt(std::uint64_t n) const { return shifts_[n % modulus_]; }
  void normalize();
  void buildInverseTables();

  std::uint64_t threshold_ = 0;
  std::uint64_t modulus_ = 1;
  std::vector<std::int64_t> shifts_;  // s(n) - n per source residue, n beyond threshold
  std::map<std::uint64_t, std::uint64_t> patch_;
  // Derived, rebuilt on normalize.
  std::map<std::uint64_t, std::uint64_t> patchInverse_;
  std::vector<std::uint64_t> residueInverse_;  // target residue -> source residue
};

std::ostream& operator<<(std::ostream& os, const ComputablePermutation& s);

// (s o t)(n) = s(t(n)). Works over lcm of the moduli; PeriodLimitExceeded
// above kPeriodLimit.
ComputablePermutation compose(const ComputablePermutation& s, const ComputablePermutation& t);

// Exact image {s(n) : n in S}, eventually periodic with period dividing
// lcm(modulus, period of S).
PeriodicSet pushforward(const ComputablePermutation& s, const PeriodicSet& S);

struct RandomPermutationConfig {
  std::uint64_t maxModulus = 4;
  std::uint64_t maxOffset = 2;   // bound on |block jump| per class
  std::uint64_t maxPatch = 6;    // extra exceptional swaps beyond the forced bottom repair
  std::uint64_t seed = 0;
};

// Deterministic for a fixed config. Classes with nonzero jumps displace the
// bottom of the line, so a repair patch pairing the displaced arguments with
// the uncovered values is always included; maxPatch adds random swaps on top.
ComputablePermutation randomPermutation(const RandomPermutationConfig& config);

class InconsistentOracle : public Error {
 public:
  explicit InconsistentOracle(const std::string& msg) : Error(msg) {}
};

// A permutation known only through a point oracle. Queries are memoized and
// injectivity is asserted across everything seen so far. Thread-safe; copies
// share the memo and the consistency record.
class QueryBackedPermutation {
 public:
  using PointFn = std::function<std::uint64_t(std::uint64_t)>;

  explicit QueryBackedPermutation(PointFn forward, PointFn inverse = nullptr);

  // Throws InconsistentOracle when the oracle repeats a value on a new
  // argument; DomainError on n < 1 or an image below 1.
  std::uint64_t apply(std::uint64_t n) const;

  // Uses the inverse oracle when present (cross-checked against the forward
  // direction); otherwise scans memoized values, then walks the forward
  // oracle up to searchLimit. InconsistentOracle when nothing maps to m.
  std::uint64_t applyInverse(std::uint64_t m, std::uint64_t searchLimit = 1u << 20) const;

  std::map<std::uint64_t, std::uint64_t> memoSnapshot() const;

 private:
  struct State;  // memo and injectivity record behind one lock

  PointFn forward_;
  PointFn inverse_;
  std::shared_ptr<State> state_;
};

}  // namespace jinf
