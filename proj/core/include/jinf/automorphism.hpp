#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "jinf/errors.hpp"
#include "jinf/graph.hpp"
#include "jinf/permutation.hpp"

namespace jinf {

// The globally defined automorphisms: a permutation of the ground set acting
// by pushforward, optionally composed with complementation. Without the flip
// the action is order preserving, with it order reversing.
struct RegularAutomorphism {
  ComputablePermutation perm;
  bool flip = false;

  bool operator==(const RegularAutomorphism&) const = default;
};

Vertex applyAuto(const RegularAutomorphism& f, const Vertex& x);

class OverlappingPieces : public Error {
 public:
  OverlappingPieces() : Error("piece representatives share a connected component") {}
};

class ComponentNotPreserved : public Error {
 public:
  ComponentNotPreserved() : Error("piece permutation moves its representative out of its component") {}
};

// Acts by a different ground permutation on each listed connected component
// (first match by representative) and as the identity elsewhere. Each piece
// permutation must map its component to itself; representatives must lie in
// pairwise distinct components. Such maps are automorphisms but generally
// not induced by any single ground permutation.
class PiecewiseAutomorphism {
 public:
  struct Piece {
    Vertex rep;
    ComputablePermutation perm;

    bool operator==(const Piece&) const = default;
  };

  // Throws OverlappingPieces, ComponentNotPreserved.
  explicit PiecewiseAutomorphism(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }

  bool operator==(const PiecewiseAutomorphism&) const = default;

 private:
  std::vector<Piece> pieces_;
};

Vertex applyAuto(const PiecewiseAutomorphism& f, const Vertex& x);

class OracleFailure : public Error {
 public:
  explicit OracleFailure(OrbitType got)
      : Error("oracle returned a non-vertex set"), orbit(got) {}
  OrbitType orbit;
};

// A vertex map known only as a black box. Results are never trusted: every
// answer is checked to be a vertex (OracleFailure otherwise). All the
// reconstruction machinery consumes this type, so it applies uniformly to
// the structured automorphisms above and to arbitrary externally supplied
// maps.
class AutomorphismOracle {
 public:
  using Fn = std::function<PeriodicSet(const Vertex&)>;

  explicit AutomorphismOracle(Fn fn) : fn_(std::move(fn)) {}

  Vertex operator()(const Vertex& x) const;

 private:
  Fn fn_;
};

AutomorphismOracle makeOracle(RegularAutomorphism f);
AutomorphismOracle makeOracle(PiecewiseAutomorphism f);

inline Vertex applyAuto(const AutomorphismOracle& f, const Vertex& x) { return f(x); }

// Witness that a map is not induced by one global ground permutation (with
// or without complement): an incident pair whose images are not incident.
// Any regular automorphism preserves incidence, composed with complement it
// reverses it; either way incidence of images would survive.
struct NonRegularityCertificate {
  Vertex a;
  Vertex y;
  Vertex fa;
  Vertex fy;
};

class NotSameComponent : public Error {
 public:
  NotSameComponent() : Error("vertices lie in different components") {}
};

class EqualVertices : public Error {
 public:
  EqualVertices() : Error("vertices must differ") {}
};

struct ExampleOneResult {
  PiecewiseAutomorphism f;
  NonRegularityCertificate certificate;
};

// The classic non-regular automorphism: relabel one component by the finite
// swap taking a to b, fix everything else. The certificate pairs a with a
// subvertex y built from alternating halves of the intersection; y lies
// outside the moved component, so f(y) = y while f(a) = b no longer
// contains it. Throws NotSameComponent, EqualVertices.
ExampleOneResult buildExampleOne(const Vertex& a, const Vertex& b);

// Re-applies f to the certificate's vertices and checks incidence flips
// from held to violated.
bool verifyCertificate(const AutomorphismOracle& f, const NonRegularityCertificate& cert);

}  // namespace jinf
