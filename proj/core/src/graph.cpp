#include "jinf/graph.hpp"

#include <algorithm>
#include <ostream>

namespace jinf {

Vertex Vertex::fromSet(PeriodicSet s) {
  if (!s.isBalanced()) {
    OrbitType orbit{OrbitType::Kind::Balanced, 0};
    try {
      orbit = classifyOrbit(s);
    } catch (const NotProperSubset& e) {
      orbit = e.isEmpty ? OrbitType{OrbitType::Kind::FiniteOfSize, 0}
                        : OrbitType{OrbitType::Kind::CofiniteOfCodim, 0};
    }
    throw NotBalanced(orbit);
  }
  return Vertex(std::move(s));
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << v.set(); }

namespace {

// Size of a difference set when finite.
std::optional<std::uint64_t> diffSize(const Vertex& x, const Vertex& y) {
  const auto elems = subtract(x.set(), y.set()).finiteElements();
  if (!elems) return std::nullopt;
  return elems->size();
}

}  // namespace

bool adjacentJohnson(const Vertex& x, const Vertex& y) {
  return diffSize(x, y) == std::optional<std::uint64_t>(1) &&
         diffSize(y, x) == std::optional<std::uint64_t>(1);
}

bool sameComponent(const Vertex& x, const Vertex& y) {
  const auto a = diffSize(x, y);
  const auto b = diffSize(y, x);
  return a && b && *a == *b;
}

std::uint64_t distanceJohnson(const Vertex& x, const Vertex& y) {
  if (!sameComponent(x, y)) throw DifferentComponents();
  return *diffSize(x, y);
}

std::vector<Vertex> geodesic(const Vertex& x, const Vertex& y) {
  if (!sameComponent(x, y)) throw DifferentComponents();
  const auto out = *subtract(x.set(), y.set()).finiteElements();
  const auto in = *subtract(y.set(), x.set()).finiteElements();
  std::vector<Vertex> path{x};
  PeriodicSet current = x.set();
  for (std::size_t i = 0; i < out.size(); ++i) {
    current = unite(subtract(current, PeriodicSet::finite({out[i]})),
                    PeriodicSet::finite({in[i]}));
    path.push_back(Vertex::fromSet(current));
  }
  return path;
}

namespace {

std::vector<Vertex> sampleByAdjusting(const Vertex& x, std::size_t count,
                                      const std::vector<std::uint64_t>& excluding, bool adjoin) {
  const PeriodicSet pool = adjoin ? complement(x.set()) : x.set();
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::uint64_t n = 1; out.size() < count; ++n) {
    if (!pool.member(n)) continue;
    if (std::find(excluding.begin(), excluding.end(), n) != excluding.end()) continue;
    const PeriodicSet point = PeriodicSet::finite({n});
    out.push_back(Vertex::fromSet(adjoin ? unite(x.set(), point) : subtract(x.set(), point)));
  }
  return out;
}

}  // namespace

std::vector<Vertex> starSample(const Vertex& x, std::size_t count,
                               const std::vector<std::uint64_t>& excluding) {
  return sampleByAdjusting(x, count, excluding, true);
}

std::vector<Vertex> topSample(const Vertex& x, std::size_t count,
                              const std::vector<std::uint64_t>& excluding) {
  return sampleByAdjusting(x, count, excluding, false);
}

CliqueKind classifyClique(const std::vector<Vertex>& members) {
  if (members.size() < 2) throw DomainError("clique classification needs >= 2 vertices");
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) throw DuplicateVertices();
      if (!adjacentJohnson(members[i], members[j])) return NotCliqueKind{i, j};
    }
  }
  if (members.size() == 2) {
    return PairAmbiguousKind{Vertex::fromSet(intersect(members[0].set(), members[1].set())),
                             Vertex::fromSet(unite(members[0].set(), members[1].set()))};
  }
  const PeriodicSet inter01 = intersect(members[0].set(), members[1].set());
  bool star = true;
  for (std::size_t i = 0; i < members.size() && star; ++i) {
    for (std::size_t j = i + 1; j < members.size() && star; ++j) {
      star = (intersect(members[i].set(), members[j].set()) == inter01);
    }
  }
  if (star) return StarKind{Vertex::fromSet(inter01)};
  const PeriodicSet union01 = unite(members[0].set(), members[1].set());
  bool top = true;
  for (std::size_t i = 0; i < members.size() && top; ++i) {
    for (std::size_t j = i + 1; j < members.size() && top; ++j) {
      top = (unite(members[i].set(), members[j].set()) == union01);
    }
  }
  if (top) return TopKind{Vertex::fromSet(union01)};
  // Pairwise-adjacent triples always share either their intersection or
  // their union, so reaching this line means the input was not a clique
  // after all and the adjacency screen above had to catch it.
  throw std::logic_error("pairwise-adjacent family is neither star nor top");
}

bool incident(const Vertex& x, const Vertex& y) {
  return subsetOf(x.set(), y.set()) || subsetOf(y.set(), x.set());
}

bool adjacentKneser(const Vertex& x, const Vertex& y) {
  return intersect(x.set(), y.set()).isEmpty();
}

KneserPath kneserDistance(const Vertex& x, const Vertex& y) {
  if (x == y) return {0, {x}};
  if (adjacentKneser(x, y)) return {1, {x, y}};
  const PeriodicSet gap = complement(unite(x.set(), y.set()));
  if (!gap.isFinite()) {
    // The leftover ground is itself a vertex disjoint from both.
    return {2, {x, Vertex::fromSet(gap), y}};
  }
  // x and y intersect and jointly cover all but finitely much, so no common
  // neighbor exists: a middle vertex would be an infinite subset of the
  // finite leftover. x \ y is infinite here (otherwise y would be cofinite)
  // and the complement of x is balanced, giving a path of length 3.
  const Vertex hop1 = Vertex::fromSet(complement(x.set()));
  const Vertex hop2 = Vertex::fromSet(subtract(x.set(), y.set()));
  return {3, {x, hop1, hop2, y}};
}

Vertex kneserSeparationWitness(const Vertex& x, const Vertex& y) {
  const PeriodicSet xOnly = subtract(x.set(), y.set());
  if (xOnly.isEmpty()) throw IsSubset();
  const std::uint64_t z = xOnly.minElement();
  const PeriodicSet gap = complement(unite(x.set(), y.set()));
  if (!gap.isFinite()) {
    const auto halves = splitInfinite(gap);
    return Vertex::fromSet(unite(PeriodicSet::finite({z}), halves.first));
  }
  // Joint cover case: x \ y is infinite (y is not cofinite), so half of it
  // keeps the witness co-infinite.
  const auto halves = splitInfinite(subtract(xOnly, PeriodicSet::finite({z})));
  return Vertex::fromSet(unite(PeriodicSet::finite({z}), halves.first));
}

}  // namespace jinf
