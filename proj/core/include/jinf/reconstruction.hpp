#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jinf/automorphism.hpp"
#include "jinf/errors.hpp"
#include "jinf/graph.hpp"
#include "jinf/permutation.hpp"

namespace jinf {

class NotCliquePreserving : public Error {
 public:
  explicit NotCliquePreserving(const std::string& detail)
      : Error("images of a star sample form neither a star nor a top: " + detail) {}
};

// How an automorphism treats the maximal cliques of a component: sending
// stars to stars (order preserving there) or stars to tops (composed with
// complementation).
enum class CaseTag { StarsToStars, StarsToTops };

std::ostream& operator<<(std::ostream& os, CaseTag tag);

// Probes f with three members of one star around `base` and classifies the
// image clique. Throws NotCliquePreserving when the oracle is not an
// automorphism of the component.
CaseTag classifyCase(const AutomorphismOracle& f, const Vertex& base);

class NotSingleton : public Error {
 public:
  explicit NotSingleton(const std::string& detail)
      : Error("expected a one-element difference: " + detail) {}
};

// Reads off the ground permutation hiding behind a star-preserving f on the
// component of `base`: the image of a probe vertex differing from base only
// at n differs from f(base) exactly at sigma(n). Requires f star-preserving
// there (classifyCase == StarsToStars); callers handle the other case by
// composing with complement first. Throws NotSingleton when the difference
// is not a single point, which certifies f is not induced by a permutation.
std::uint64_t reconstructSigma(const AutomorphismOracle& f, const Vertex& base, std::uint64_t n);

struct ComponentReconstruction {
  QueryBackedPermutation sigma;
  bool flip = false;  // true when f composes a pushforward with complement
  CaseTag tag = CaseTag::StarsToStars;
};

// classifyCase + memoized pointwise reconstruction; flip is set and the
// complement folded in when stars go to tops.
ComponentReconstruction reconstructComponentMap(const AutomorphismOracle& f, const Vertex& base);

// True iff reconstruction from both bases agrees on every point of `points`.
// Bases must lie in one component (NotSameComponent) and f must be
// star-preserving there.
bool baseIndependenceCheck(const AutomorphismOracle& f, const Vertex& a, const Vertex& x,
                           const std::vector<std::uint64_t>& points);

struct RestrictionReport {
  struct Entry {
    Vertex sample;
    bool ok = false;
    std::string detail;  // witness on mismatch, empty otherwise
  };
  std::vector<Entry> entries;

  bool allOk() const;
};

// Checks f(u) == sigma(u) (complemented when flip) pointwise on a membership
// window for each sample vertex; window 0 picks one from the operands'
// representations.
RestrictionReport verifyRestriction(const AutomorphismOracle& f, const QueryBackedPermutation& sigma,
                                    bool flip, const std::vector<Vertex>& samples,
                                    std::uint64_t window = 0);

class NotSingletonIntersection : public Error {
 public:
  explicit NotSingletonIntersection(const std::string& detail)
      : Error("probe images do not meet in exactly one point: " + detail) {}
};

// Order-theoretic pointwise reconstruction that needs no base component:
// two probe vertices meeting exactly at n have images meeting exactly at
// sigma(n) whenever f is induced by a permutation. Order-reversing maps fail
// with NotSingletonIntersection (the probe images then share an infinite
// tail), which is the detection mechanism.
std::uint64_t orderSigma(const AutomorphismOracle& f, std::uint64_t n);

// Lazy memoized orderSigma; `window` sizes the upfront injectivity sweep
// hint only, queries beyond it are allowed.
QueryBackedPermutation reconstructOrderPreserving(const AutomorphismOracle& f,
                                                  std::uint64_t window);

class IntersectionNotVertex : public Error {
 public:
  explicit IntersectionNotVertex(OrbitType got)
      : Error("family intersection is not balanced"), orbit(got) {}
  OrbitType orbit;
};

// f(meet of the family) == meet of the images, for families whose meet is
// itself a vertex (IntersectionNotVertex otherwise; DomainError on empty
// family).
bool checkIntersectionPreservation(const AutomorphismOracle& f, const std::vector<Vertex>& family);

class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& detail) : Error(detail) {}
};

// For y covered by x (y subset of x, one element apart): images must again
// be one covering the other in the same direction.
bool checkCoveringPreservation(const AutomorphismOracle& f, const Vertex& x, const Vertex& y);

struct OrderCheckVerdict {
  bool allPass = true;
  std::optional<std::pair<Vertex, Vertex>> witness;  // first violating pair
};

// Tests "x contained in y iff f(x) contained in f(y)" on each pair, both
// orientations.
OrderCheckVerdict checkOrderPreservingOnSamples(const AutomorphismOracle& f,
                                                const std::vector<std::pair<Vertex, Vertex>>& pairs);

struct ExactifySearch {
  std::uint64_t maxModulus = 8;
  std::uint64_t maxThreshold = 64;
};

// Tries to express a point oracle as a ComputablePermutation by scanning
// moduli and thresholds, fitting one shift per residue class, validating,
// and cross-checking on a doubled window. nullopt when nothing within the
// search bounds fits (the oracle may still be a permutation). The result is
// only guaranteed to agree with the oracle on the verified window: a
// deviation hidden beyond every candidate's window is invisible.
// InconsistentOracle surfaces if the probes ever repeat a value.
std::optional<ComputablePermutation> exactifyPermutation(const QueryBackedPermutation& q,
                                                         const ExactifySearch& search);

}  // namespace jinf
