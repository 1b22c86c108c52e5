#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "jinf/errors.hpp"
#include "jinf/periodic_set.hpp"

namespace jinf {

class NotBalanced : public Error {
 public:
  explicit NotBalanced(OrbitType found)
      : Error("vertex must be an infinite set with infinite complement"), orbit(found) {}
  OrbitType orbit;
};

// A vertex of the infinite Johnson graph (equivalently of the infinite
// Kneser graph): a subset of N that is infinite with infinite complement.
class Vertex {
 public:
  // Throws NotBalanced (carrying the actual orbit type) otherwise.
  static Vertex fromSet(PeriodicSet s);

  const PeriodicSet& set() const { return set_; }

  bool operator==(const Vertex& other) const = default;

 private:
  explicit Vertex(PeriodicSet s) : set_(std::move(s)) {}
  PeriodicSet set_;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

// Johnson adjacency: the two sets differ by exactly one element each way.
bool adjacentJohnson(const Vertex& x, const Vertex& y);

// Connected iff the two difference sets are finite and of equal size.
bool sameComponent(const Vertex& x, const Vertex& y);

class DifferentComponents : public Error {
 public:
  DifferentComponents() : Error("vertices lie in different connected components") {}
};

// Graph distance within a component: |X \ Y|.
std::uint64_t distanceJohnson(const Vertex& x, const Vertex& y);

// A shortest path from x to y, swapping one displaced element per step.
// Length distanceJohnson(x, y) + 1 including both endpoints.
std::vector<Vertex> geodesic(const Vertex& x, const Vertex& y);

// `count` neighbors of x obtained by adjoining the smallest absent points
// (skipping `excluding`); all returned vertices plus x lie in one star.
std::vector<Vertex> starSample(const Vertex& x, std::size_t count,
                               const std::vector<std::uint64_t>& excluding = {});

// Dual sampler: drop the smallest present points; the results lie in one top.
std::vector<Vertex> topSample(const Vertex& x, std::size_t count,
                              const std::vector<std::uint64_t>& excluding = {});

class DuplicateVertices : public Error {
 public:
  DuplicateVertices() : Error("clique members must be pairwise distinct") {}
};

struct StarKind {
  Vertex center;  // common intersection, itself balanced
};
struct TopKind {
  Vertex carrier;  // common union, itself balanced
};
struct PairAmbiguousKind {  // two adjacent vertices lie in exactly one star and one top
  Vertex starCenter;
  Vertex topCarrier;
};
struct NotCliqueKind {
  std::size_t i = 0;  // indices of a non-adjacent pair
  std::size_t j = 0;
};
using CliqueKind = std::variant<StarKind, TopKind, PairAmbiguousKind, NotCliqueKind>;

// Classifies >= 2 pairwise-distinct vertices. Cliques of size >= 3 are
// either a piece of a star (all pairwise intersections coincide) or of a top
// (all pairwise unions coincide). Throws DuplicateVertices, DomainError on
// fewer than two members.
CliqueKind classifyClique(const std::vector<Vertex>& members);

// Containment either way.
bool incident(const Vertex& x, const Vertex& y);

// Kneser adjacency: disjointness.
bool adjacentKneser(const Vertex& x, const Vertex& y);

// The infinite Kneser graph is connected with diameter 3:
//   d = 0  equal
//   d = 1  disjoint
//   d = 2  intersecting with infinite complement of the union
//          (middle vertex: that complement)
//   d = 3  intersecting with finite complement of the union
//          (path x, N \ x, x \ y, y; the middle sets are balanced here)
struct KneserPath {
  std::uint64_t distance = 0;
  std::vector<Vertex> path;  // distance + 1 vertices from x to y
};

KneserPath kneserDistance(const Vertex& x, const Vertex& y);

class IsSubset : public Error {
 public:
  IsSubset() : Error("no separating vertex exists when x is contained in y") {}
};

// A vertex z meeting x but disjoint from y; exists iff x is not contained
// in y (IsSubset otherwise).
Vertex kneserSeparationWitness(const Vertex& x, const Vertex& y);

}  // namespace jinf
