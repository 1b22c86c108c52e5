#include "jinf/reconstruction.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace jinf {

std::ostream& operator<<(std::ostream& os, CaseTag tag) {
  return os << (tag == CaseTag::StarsToStars ? "stars-to-stars" : "stars-to-tops");
}

CaseTag classifyCase(const AutomorphismOracle& f, const Vertex& base) {
  // Three members of the star around base \ {min}: base itself plus the two
  // smallest fresh replacements.
  const std::uint64_t anchor = base.set().minElement();
  const PeriodicSet hub = subtract(base.set(), PeriodicSet::finite({anchor}));
  const auto fresh = complement(base.set()).firstElements(2);
  std::vector<Vertex> probes{base,
                             Vertex::fromSet(unite(hub, PeriodicSet::finite({fresh[0]}))),
                             Vertex::fromSet(unite(hub, PeriodicSet::finite({fresh[1]})))};
  std::vector<Vertex> images;
  images.reserve(probes.size());
  for (const Vertex& probe : probes) images.push_back(f(probe));

  try {
    const CliqueKind kind = classifyClique(images);
    if (std::holds_alternative<StarKind>(kind)) return CaseTag::StarsToStars;
    if (std::holds_alternative<TopKind>(kind)) return CaseTag::StarsToTops;
    const auto& bad = std::get<NotCliqueKind>(kind);
    std::ostringstream os;
    os << "images " << images[bad.i] << " and " << images[bad.j] << " are not adjacent";
    throw NotCliquePreserving(os.str());
  } catch (const DuplicateVertices&) {
    throw NotCliquePreserving("images of distinct star members collide");
  }
}

std::uint64_t reconstructSigma(const AutomorphismOracle& f, const Vertex& base, std::uint64_t n) {
  if (n < 1) throw DomainError("points are >= 1");
  const PeriodicSet point = PeriodicSet::finite({n});
  const Vertex fBase = f(base);
  PeriodicSet difference;
  if (!base.set().member(n)) {
    // Probe = base with n adjoined and the least element dropped; its image
    // exceeds f(base) exactly at sigma(n).
    const std::uint64_t dropped = base.set().minElement();
    const Vertex probe = Vertex::fromSet(
        subtract(unite(base.set(), point), PeriodicSet::finite({dropped})));
    difference = subtract(f(probe).set(), fBase.set());
  } else {
    // Probe = base with n dropped and the least absent element adjoined;
    // f(base) exceeds its image exactly at sigma(n).
    const std::uint64_t added = complement(base.set()).minElement();
    const Vertex probe = Vertex::fromSet(
        unite(subtract(base.set(), point), PeriodicSet::finite({added})));
    difference = subtract(fBase.set(), f(probe).set());
  }
  const auto elems = difference.finiteElements();
  if (!elems || elems->size() != 1) {
    std::ostringstream os;
    os << "at point " << n << " the difference is " << difference;
    throw NotSingleton(os.str());
  }
  return elems->front();
}

ComponentReconstruction reconstructComponentMap(const AutomorphismOracle& f, const Vertex& base) {
  const CaseTag tag = classifyCase(f, base);
  AutomorphismOracle adjusted =
      tag == CaseTag::StarsToStars
          ? f
          : AutomorphismOracle([f](const Vertex& x) { return complement(f(x).set()); });
  QueryBackedPermutation sigma(
      [adjusted, base](std::uint64_t n) { return reconstructSigma(adjusted, base, n); });
  return {std::move(sigma), tag == CaseTag::StarsToTops, tag};
}

bool baseIndependenceCheck(const AutomorphismOracle& f, const Vertex& a, const Vertex& x,
                           const std::vector<std::uint64_t>& points) {
  if (!sameComponent(a, x)) throw NotSameComponent();
  for (std::uint64_t n : points) {
    if (reconstructSigma(f, a, n) != reconstructSigma(f, x, n)) return false;
  }
  return true;
}

bool RestrictionReport::allOk() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.ok; });
}

RestrictionReport verifyRestriction(const AutomorphismOracle& f, const QueryBackedPermutation& sigma,
                                    bool flip, const std::vector<Vertex>& samples,
                                    std::uint64_t window) {
  RestrictionReport report;
  for (const Vertex& u : samples) {
    RestrictionReport::Entry entry{u, true, {}};
    try {
      const Vertex image = f(u);
      std::uint64_t bound = window;
      if (bound == 0) {
        bound = std::max<std::uint64_t>(
            64, 3 * (u.set().prefixLength() + u.set().periodLength() +
                     image.set().prefixLength() + image.set().periodLength()));
      }
      for (std::uint64_t n = 1; n <= bound; ++n) {
        const bool inSource = u.set().member(n);
        const bool inImage = image.set().member(sigma.apply(n));
        const bool expected = flip ? !inSource : inSource;
        if (inImage != expected) {
          std::ostringstream os;
          os << "point " << n << " maps to " << sigma.apply(n) << " but membership "
             << (inImage ? "holds" : "fails") << " in the image " << image;
          entry.ok = false;
          entry.detail = os.str();
          break;
        }
      }
    } catch (const Error& e) {
      entry.ok = false;
      entry.detail = e.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::uint64_t orderSigma(const AutomorphismOracle& f, std::uint64_t n) {
  if (n < 1) throw DomainError("points are >= 1");
  // Probes: {n} plus every later multiple of 3, resp. every later point that
  // is 1 mod 3. They meet exactly at n, and their union still misses the
  // 2 mod 3 tail, so both sides stay balanced.
  auto tail = [n](std::uint64_t residue) {
    Bits prefix(n, false);
    prefix[n - 1] = true;
    Bits period(3);
    for (std::uint64_t j = 0; j < 3; ++j) period[j] = ((n + 1 + j) % 3 == residue);
    return PeriodicSet::fromBits(std::move(prefix), std::move(period));
  };
  const Vertex y1 = Vertex::fromSet(tail(0));
  const Vertex y2 = Vertex::fromSet(tail(1));
  const PeriodicSet meet = intersect(f(y1).set(), f(y2).set());
  const auto elems = meet.finiteElements();
  if (!elems || elems->size() != 1) {
    std::ostringstream os;
    os << "at point " << n << " the probe images meet in " << meet;
    throw NotSingletonIntersection(os.str());
  }
  return elems->front();
}

QueryBackedPermutation reconstructOrderPreserving(const AutomorphismOracle& f,
                                                  std::uint64_t window) {
  QueryBackedPermutation sigma([f](std::uint64_t n) { return orderSigma(f, n); });
  // The sweep warms the memo and trips InconsistentOracle early if the map
  // repeats a value; queries beyond the window stay allowed.
  for (std::uint64_t n = 1; n <= window; ++n) sigma.apply(n);
  return sigma;
}

bool checkIntersectionPreservation(const AutomorphismOracle& f, const std::vector<Vertex>& family) {
  if (family.empty()) throw DomainError("family must be nonempty");
  PeriodicSet meet = family.front().set();
  for (std::size_t i = 1; i < family.size(); ++i) meet = intersect(meet, family[i].set());
  if (!meet.isBalanced()) {
    OrbitType orbit{OrbitType::Kind::Balanced, 0};
    try {
      orbit = classifyOrbit(meet);
    } catch (const NotProperSubset& e) {
      orbit = e.isEmpty ? OrbitType{OrbitType::Kind::FiniteOfSize, 0}
                        : OrbitType{OrbitType::Kind::CofiniteOfCodim, 0};
    }
    throw IntersectionNotVertex(orbit);
  }
  PeriodicSet imageMeet = f(family.front()).set();
  for (std::size_t i = 1; i < family.size(); ++i) {
    imageMeet = intersect(imageMeet, f(family[i]).set());
  }
  return f(Vertex::fromSet(meet)).set() == imageMeet;
}

bool checkCoveringPreservation(const AutomorphismOracle& f, const Vertex& x, const Vertex& y) {
  const auto gap = subtract(x.set(), y.set()).finiteElements();
  if (!subsetOf(y.set(), x.set()) || !gap || gap->size() != 1) {
    throw PreconditionViolated("need y contained in x with exactly one element between");
  }
  const Vertex fx = f(x);
  const Vertex fy = f(y);
  const auto imageGap = subtract(fx.set(), fy.set()).finiteElements();
  return subsetOf(fy.set(), fx.set()) && imageGap && imageGap->size() == 1;
}

OrderCheckVerdict checkOrderPreservingOnSamples(
    const AutomorphismOracle& f, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  for (const auto& [x, y] : pairs) {
    const Vertex fx = f(x);
    const Vertex fy = f(y);
    if (subsetOf(x.set(), y.set()) != subsetOf(fx.set(), fy.set()) ||
        subsetOf(y.set(), x.set()) != subsetOf(fy.set(), fx.set())) {
      return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

std::optional<ComputablePermutation> exactifyPermutation(const QueryBackedPermutation& q,
                                                         const ExactifySearch& search) {
  for (std::uint64_t p = 1; p <= search.maxModulus; ++p) {
    for (std::uint64_t threshold = 0; threshold <= search.maxThreshold; ++threshold) {
      // One sample per residue class just beyond the threshold fixes the
      // candidate shifts; a second immediately screens most mismatches.
      std::vector<std::int64_t> shifts(p, 0);
      bool consistent = true;
      for (std::uint64_t r = 0; r < p && consistent; ++r) {
        std::optional<std::int64_t> shift;
        for (std::uint64_t n = threshold + 1; n <= threshold + 2 * p; ++n) {
          if (n % p != r) continue;
          const std::int64_t delta =
              static_cast<std::int64_t>(q.apply(n)) - static_cast<std::int64_t>(n);
          if (!shift) {
            shift = delta;
          } else if (*shift != delta) {
            consistent = false;
            break;
          }
        }
        if (consistent) shifts[r] = *shift;
      }
      if (!consistent) continue;

      std::int64_t maxJump = 0;
      std::vector<ComputablePermutation::ClassMap> classes;
      bool residuesOk = true;
      {
        std::vector<bool> hit(p, false);
        for (std::uint64_t r = 0; r < p; ++r) {
          const std::int64_t raw = static_cast<std::int64_t>(r) + shifts[r];
          std::int64_t rem = raw % static_cast<std::int64_t>(p);
          if (rem < 0) rem += static_cast<std::int64_t>(p);
          const std::uint64_t to = static_cast<std::uint64_t>(rem);
          if (hit[to]) {
            residuesOk = false;
            break;
          }
          hit[to] = true;
          const std::int64_t offset =
              (shifts[r] - (static_cast<std::int64_t>(to) - static_cast<std::int64_t>(r))) /
              static_cast<std::int64_t>(p);
          maxJump = std::max(maxJump, std::abs(offset));
          classes.push_back({r, to, offset});
        }
      }
      if (!residuesOk) continue;

      const std::uint64_t fitWindow =
          threshold + 4 * p * (static_cast<std::uint64_t>(maxJump) + 1);
      bool fits = true;
      for (std::uint64_t n = threshold + 1; n <= fitWindow && fits; ++n) {
        fits = (static_cast<std::int64_t>(q.apply(n)) ==
                static_cast<std::int64_t>(n) + shifts[n % p]);
      }
      if (!fits) continue;

      std::map<std::uint64_t, std::uint64_t> patch;
      for (std::uint64_t n = 1; n <= threshold; ++n) patch.emplace(n, q.apply(n));
      try {
        const ComputablePermutation candidate =
            ComputablePermutation::fromSpec(threshold, p, classes, patch);
        bool matches = true;
        for (std::uint64_t n = 1; n <= 2 * fitWindow && matches; ++n) {
          matches = (candidate.apply(n) == q.apply(n));
        }
        if (matches) return candidate;
      } catch (const InconsistentOracle&) {
        throw;
      } catch (const Error&) {
        // candidate not a bijection; keep searching
      }
    }
  }
  return std::nullopt;
}

}  // namespace jinf
