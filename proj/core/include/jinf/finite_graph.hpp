#pragma once
// Finite cross-checks for the infinite constructions: small Johnson and
// Kneser graphs, truncated slices of a single component, and measurements
// on them (BFS metric, maximal cliques, automorphism counting, recovery of
// the point permutation inducing a vertex map).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jinf/errors.hpp"
#include "jinf/graph.hpp"

namespace jinf {

struct BadParameters : Error {
  explicit BadParameters(const std::string& detail) : Error("bad parameters: " + detail) {}
};

struct WindowTooSmall : Error {
  WindowTooSmall(std::uint64_t window, std::uint64_t radius)
      : Error("window [1," + std::to_string(window) + "] cannot carry radius " +
              std::to_string(radius)),
        window(window),
        radius(radius) {}
  std::uint64_t window;
  std::uint64_t radius;
};

struct UnknownVertex : Error {
  explicit UnknownVertex(const std::string& detail) : Error("unknown vertex: " + detail) {}
};

struct UnsupportedFamily : Error {
  explicit UnsupportedFamily(const std::string& detail) : Error("unsupported family: " + detail) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& detail) : Error("budget exceeded: " + detail) {}
};

struct NotAutomorphism : Error {
  explicit NotAutomorphism(const std::string& detail)
      : Error("vertex map is not an automorphism: " + detail) {}
};

struct NotInducedByPermutation : Error {
  explicit NotInducedByPermutation(const std::string& detail)
      : Error("vertex map is not induced by a point permutation: " + detail) {}
};

// Vertices are equal-size subsets of [1, groundSize], stored as sorted point
// lists in lexicographic order with parallel bitmasks (bit p-1 <=> point p).
struct FiniteGraph {
  enum class Family { Johnson, Kneser, TruncatedComponent };

  Family family;
  std::uint64_t groundSize;  // at most 64, so one mask word suffices
  std::uint64_t subsetSize;
  std::uint64_t radius;         // truncation radius; 0 for the full families
  bool boundaryWarning;         // Kneser with n == 2k: a perfect matching
  std::vector<std::vector<std::uint64_t>> labels;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbor indices

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> indexOf(const std::vector<std::uint64_t>& label) const;
  std::string labelText(std::size_t v) const;  // "1,3,4"
};

FiniteGraph buildJohnsonFinite(std::uint64_t n, std::uint64_t k);

// Requires 2k <= n; at equality the graph is a perfect matching and the
// boundaryWarning flag is set.
FiniteGraph buildKneserFinite(std::uint64_t n, std::uint64_t k);

// All vertices reachable from base by swapping at most `radius` points inside
// [1, window]. Labels record only the window part; beyond the window every
// vertex agrees with base, so the window part is a faithful name.
FiniteGraph buildTruncatedComponent(const Vertex& base, std::uint64_t window,
                                    std::uint64_t radius);

std::optional<std::uint64_t> bfsDistance(const FiniteGraph& g, std::size_t from, std::size_t to);

// Distances from one source to every vertex; -1 marks unreachable.
std::vector<std::int64_t> bfsAll(const FiniteGraph& g, std::size_t from);

struct MaximalClique {
  std::vector<std::size_t> members;  // sorted vertex indices
  bool isStar;                       // members share a common (k-1)-core
  bool isTop;                        // members fit inside a common (k+1)-carrier
};

// All maximal cliques, sorted by member list. Kneser graphs are rejected:
// their cliques are disjoint families and the star/top reading does not apply.
std::vector<MaximalClique> maximalCliques(const FiniteGraph& g);

// Exact automorphism group order via color refinement plus backtracking.
std::uint64_t autGroupOrder(const FiniteGraph& g, std::uint64_t vertexBudget = 40);

struct InducedPointMap {
  std::vector<std::uint64_t> images;  // images[p-1] is the image of point p
  bool usedComplement;                // map factored through complementation
};

// Recovers the point permutation inducing `vertexMap` on a Johnson graph,
// walking star images down from k-subsets to singletons. When n == 2k a map
// may act as a permutation followed by complementation; that case is detected
// and flagged. The recovered map is verified against every vertex before it
// is returned.
InducedPointMap inducedPermutationFinite(const FiniteGraph& g,
                                         const std::vector<std::size_t>& vertexMap);

// Vertex map induced by a point permutation (optionally followed by
// complementation). images must be a bijection of [1, groundSize].
std::vector<std::size_t> applyPointMapToVertices(const FiniteGraph& g,
                                                 const std::vector<std::uint64_t>& images,
                                                 bool complementAfter = false);

// One line per vertex: "label: neighbor neighbor ...", labels comma-joined.
std::string renderAdjacencyText(const FiniteGraph& g);

}  // namespace jinf
