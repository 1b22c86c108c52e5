#include "jinf/automorphism.hpp"

namespace jinf {

Vertex applyAuto(const RegularAutomorphism& f, const Vertex& x) {
  PeriodicSet image = pushforward(f.perm, x.set());
  if (f.flip) image = complement(image);
  return Vertex::fromSet(std::move(image));
}

PiecewiseAutomorphism::PiecewiseAutomorphism(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (sameComponent(pieces_[i].rep, pieces_[j].rep)) throw OverlappingPieces();
    }
  }
  for (const Piece& piece : pieces_) {
    const Vertex image = Vertex::fromSet(pushforward(piece.perm, piece.rep.set()));
    if (!sameComponent(image, piece.rep)) throw ComponentNotPreserved();
  }
}

Vertex applyAuto(const PiecewiseAutomorphism& f, const Vertex& x) {
  for (const auto& piece : f.pieces()) {
    if (sameComponent(x, piece.rep)) {
      return Vertex::fromSet(pushforward(piece.perm, x.set()));
    }
  }
  return x;
}

Vertex AutomorphismOracle::operator()(const Vertex& x) const {
  PeriodicSet image = fn_(x);
  if (!image.isBalanced()) {
    OrbitType orbit{OrbitType::Kind::Balanced, 0};
    try {
      orbit = classifyOrbit(image);
    } catch (const NotProperSubset& e) {
      orbit = e.isEmpty ? OrbitType{OrbitType::Kind::FiniteOfSize, 0}
                        : OrbitType{OrbitType::Kind::CofiniteOfCodim, 0};
    }
    throw OracleFailure(orbit);
  }
  return Vertex::fromSet(std::move(image));
}

AutomorphismOracle makeOracle(RegularAutomorphism f) {
  return AutomorphismOracle(
      [f = std::move(f)](const Vertex& x) { return applyAuto(f, x).set(); });
}

AutomorphismOracle makeOracle(PiecewiseAutomorphism f) {
  return AutomorphismOracle(
      [f = std::move(f)](const Vertex& x) { return applyAuto(f, x).set(); });
}

ExampleOneResult buildExampleOne(const Vertex& a, const Vertex& b) {
  if (a == b) throw EqualVertices();
  if (!sameComponent(a, b)) throw NotSameComponent();

  // Finite swap realizing a -> b: pair the displaced elements both ways.
  const auto out = *subtract(a.set(), b.set()).finiteElements();
  const auto in = *subtract(b.set(), a.set()).finiteElements();
  std::map<std::uint64_t, std::uint64_t> patch;
  for (std::size_t i = 0; i < out.size(); ++i) {
    patch[out[i]] = in[i];
    patch[in[i]] = out[i];
  }
  const ComputablePermutation s = ComputablePermutation::fromPatch(patch);
  PiecewiseAutomorphism f({{a, s}});

  // y keeps the least displaced element of a plus half of the common part:
  // a proper subvertex of a in a different component, hence fixed by f, but
  // not a subset of b. Images under f: a moves, y stays, incidence breaks.
  const std::uint64_t anchor = out.front();
  const auto halves = splitInfinite(intersect(a.set(), b.set()));
  const Vertex y =
      Vertex::fromSet(unite(PeriodicSet::finite({anchor}), halves.first));

  const AutomorphismOracle oracle = makeOracle(f);
  NonRegularityCertificate cert{a, y, oracle(a), oracle(y)};
  return {std::move(f), std::move(cert)};
}

bool verifyCertificate(const AutomorphismOracle& f, const NonRegularityCertificate& cert) {
  if (!incident(cert.a, cert.y)) return false;
  const Vertex fa = f(cert.a);
  const Vertex fy = f(cert.y);
  if (fa != cert.fa || fy != cert.fy) return false;
  return !incident(fa, fy);
}

}  // namespace jinf
