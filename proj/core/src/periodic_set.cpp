#include "jinf/periodic_set.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace jinf {

namespace {

bool allOf(const Bits& bits, bool value) {
  return std::all_of(bits.begin(), bits.end(), [value](bool b) { return b == value; });
}

}  // namespace

PeriodicSet PeriodicSet::fromBits(Bits prefix, Bits period) {
  if (period.empty()) {
    throw MalformedRepresentation("period block must be nonempty");
  }
  return PeriodicSet(std::move(prefix), std::move(period));
}

PeriodicSet PeriodicSet::finite(const std::vector<std::uint64_t>& elements) {
  std::uint64_t top = 0;
  for (std::uint64_t e : elements) {
    if (e < 1) throw DomainError("set elements must be >= 1");
    top = std::max(top, e);
  }
  Bits prefix(top, false);
  for (std::uint64_t e : elements) prefix[e - 1] = true;
  return PeriodicSet(std::move(prefix), Bits{false});
}

PeriodicSet PeriodicSet::emptySet() { return PeriodicSet({}, Bits{false}); }
PeriodicSet PeriodicSet::naturals() { return PeriodicSet({}, Bits{true}); }
PeriodicSet PeriodicSet::evens() { return residueClass(2, 0); }
PeriodicSet PeriodicSet::odds() { return residueClass(2, 1); }

PeriodicSet PeriodicSet::residueClass(std::uint64_t modulus, std::uint64_t residue) {
  if (modulus < 1) throw DomainError("modulus must be >= 1");
  if (residue >= modulus) throw DomainError("residue must lie in [0, modulus)");
  Bits period(modulus, false);
  // Position j of the block holds bit of n = j+1.
  for (std::uint64_t j = 0; j < modulus; ++j) period[j] = ((j + 1) % modulus == residue);
  return PeriodicSet({}, std::move(period));
}

PeriodicSet PeriodicSet::multiples(std::uint64_t modulus) { return residueClass(modulus, 0); }

bool PeriodicSet::member(std::uint64_t n) const {
  if (n < 1) throw DomainError("membership is defined for n >= 1");
  const std::uint64_t L = prefix_.size();
  if (n <= L) return prefix_[n - 1];
  return period_[(n - L - 1) % period_.size()];
}

void PeriodicSet::canonicalize() {
  // Shortest generating block. The minimal eventual period divides every
  // other period of the tail, so scanning divisors is exhaustive.
  const std::uint64_t p = period_.size();
  for (std::uint64_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::uint64_t j = d; j < p && repeats; ++j) repeats = (period_[j] == period_[j % d]);
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  // Shortest prefix. Dropping the last prefix bit shifts the period's phase
  // back by one, so the block rotates right as the bit is absorbed.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
  }
}

bool PeriodicSet::isEmpty() const { return prefix_.empty() && !period_[0] && period_.size() == 1; }
bool PeriodicSet::isAll() const { return prefix_.empty() && period_[0] && period_.size() == 1; }
bool PeriodicSet::isFinite() const { return allOf(period_, false); }
bool PeriodicSet::isCofinite() const { return allOf(period_, true); }

bool PeriodicSet::isBalanced() const {
  bool hasOne = false, hasZero = false;
  for (bool b : period_) (b ? hasOne : hasZero) = true;
  return hasOne && hasZero;
}

std::optional<std::vector<std::uint64_t>> PeriodicSet::finiteElements() const {
  if (!isFinite()) return std::nullopt;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) out.push_back(i + 1);
  }
  return out;
}

std::uint64_t PeriodicSet::minElement() const {
  if (isEmpty()) throw DomainError("empty set has no least element");
  for (std::uint64_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) return i + 1;
  }
  const std::uint64_t L = prefix_.size();
  for (std::uint64_t j = 0; j < period_.size(); ++j) {
    if (period_[j]) return L + j + 1;
  }
  throw DomainError("empty set has no least element");  // unreachable
}

std::vector<std::uint64_t> PeriodicSet::firstElements(std::size_t count) const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  const std::uint64_t stop = prefix_.size() + period_.size() * (count + 1) + 1;
  for (std::uint64_t n = 1; out.size() < count && n <= stop; ++n) {
    if (member(n)) out.push_back(n);
  }
  if (out.size() < count) throw DomainError("set has fewer elements than requested");
  return out;
}

std::string PeriodicSet::toText() const {
  if (auto elems = finiteElements()) {
    if (elems->empty()) return "per(;0)";
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems->size(); ++i) {
      if (i) os << ',';
      os << (*elems)[i];
    }
    os << '}';
    return os.str();
  }
  std::ostringstream os;
  os << "per(";
  for (bool b : prefix_) os << (b ? '1' : '0');
  os << ';';
  for (bool b : period_) os << (b ? '1' : '0');
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PeriodicSet& s) { return os << s.toText(); }

namespace {

template <typename Op>
PeriodicSet combine(const PeriodicSet& a, const PeriodicSet& b, Op op) {
  const std::uint64_t pa = a.periodLength(), pb = b.periodLength();
  const std::uint64_t g = std::gcd(pa, pb);
  const std::uint64_t p = pa / g * pb;
  if (p > kPeriodLimit) throw PeriodLimitExceeded(pa, pb);
  const std::uint64_t L = std::max(a.prefixLength(), b.prefixLength());
  Bits prefix(L), period(p);
  for (std::uint64_t n = 1; n <= L; ++n) prefix[n - 1] = op(a.member(n), b.member(n));
  for (std::uint64_t j = 0; j < p; ++j) {
    const std::uint64_t n = L + 1 + j;
    period[j] = op(a.member(n), b.member(n));
  }
  return PeriodicSet::fromBits(std::move(prefix), std::move(period));
}

}  // namespace

PeriodicSet complement(const PeriodicSet& s) {
  Bits prefix = s.prefixBits(), period = s.periodBits();
  prefix.flip();
  period.flip();
  return PeriodicSet::fromBits(std::move(prefix), std::move(period));
}

PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

PeriodicSet subtract(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

PeriodicSet symmetricDiff(const PeriodicSet& a, const PeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

bool subsetOf(const PeriodicSet& a, const PeriodicSet& b) { return subtract(a, b).isEmpty(); }

OrbitType classifyOrbit(const PeriodicSet& s) {
  if (s.isEmpty()) throw NotProperSubset(true);
  if (s.isAll()) throw NotProperSubset(false);
  if (auto elems = s.finiteElements()) {
    return {OrbitType::Kind::FiniteOfSize, elems->size()};
  }
  if (s.isCofinite()) {
    const auto gaps = complement(s).finiteElements();
    return {OrbitType::Kind::CofiniteOfCodim, gaps->size()};
  }
  return {OrbitType::Kind::Balanced, 0};
}

std::ostream& operator<<(std::ostream& os, const OrbitType& t) {
  switch (t.kind) {
    case OrbitType::Kind::FiniteOfSize:
      return os << "finite(" << t.size << ")";
    case OrbitType::Kind::CofiniteOfCodim:
      return os << "cofinite(" << t.size << ")";
    default:
      return os << "balanced";
  }
}

std::pair<PeriodicSet, PeriodicSet> splitInfinite(const PeriodicSet& s) {
  if (s.isFinite()) throw NotInfinite();
  const std::uint64_t L = s.prefixLength();
  const std::uint64_t p = s.periodLength();
  // Element index parity repeats after two blocks (one block may hold an odd
  // number of elements), so both halves are periodic with period 2p past L.
  Bits pre1(L), pre2(L), per1(2 * p), per2(2 * p);
  bool takeFirst = true;
  for (std::uint64_t n = 1; n <= L + 2 * p; ++n) {
    if (!s.member(n)) continue;
    Bits& pre = takeFirst ? pre1 : pre2;
    Bits& per = takeFirst ? per1 : per2;
    if (n <= L) {
      pre[n - 1] = true;
    } else {
      per[n - L - 1] = true;
    }
    takeFirst = !takeFirst;
  }
  return {PeriodicSet::fromBits(std::move(pre1), std::move(per1)),
          PeriodicSet::fromBits(std::move(pre2), std::move(per2))};
}

}  // namespace jinf
