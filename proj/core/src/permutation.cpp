#include "jinf/permutation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace jinf {

namespace {

std::int64_t toSigned(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t floorMod(std::int64_t value, std::uint64_t modulus) {
  const std::int64_t p = toSigned(modulus);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

struct RawPerm {
  std::uint64_t threshold = 0;
  std::uint64_t modulus = 1;
  std::vector<std::int64_t> shifts;
  std::map<std::uint64_t, std::uint64_t> patch;

  std::int64_t at(std::uint64_t n) const {
    if (n <= threshold) {
      auto it = patch.find(n);
      if (it != patch.end()) return toSigned(it->second);
    }
    return toSigned(n) + shifts[n % modulus];
  }

  std::int64_t maxAbsShift() const {
    std::int64_t m = 0;
    for (std::int64_t s : shifts) m = std::max(m, std::abs(s));
    return m;
  }
};

// Exact bijectivity decision on finite windows. All values a class map can
// fail to cover sit below threshold + maxAbsShift + 2p, and every collision
// involves a patch value or an image below 1, both reachable from arguments
// below the scan bound. docs/permutation-validation.md spells the bound out.
void validateRaw(const RawPerm& raw) {
  const std::uint64_t p = raw.modulus;
  if (p < 1 || raw.shifts.size() != p) {
    throw MalformedRepresentation("need one class map per residue");
  }
  std::vector<bool> hit(p, false);
  for (std::uint64_t r = 0; r < p; ++r) {
    const std::uint64_t target = floorMod(toSigned(r) + raw.shifts[r], p);
    if (hit[target]) throw ResidueMapNotBijective();
    hit[target] = true;
  }
  std::uint64_t maxPatchValue = 0;
  for (const auto& [key, value] : raw.patch) {
    if (key < 1 || value < 1) throw MalformedRepresentation("patch points must be >= 1");
    if (key > raw.threshold) throw MalformedRepresentation("patch key above threshold");
    maxPatchValue = std::max(maxPatchValue, value);
  }
  const std::uint64_t drift = static_cast<std::uint64_t>(raw.maxAbsShift());
  const std::uint64_t surjBound = raw.threshold + drift + 2 * p;
  const std::uint64_t scanBound = std::max(surjBound, maxPatchValue) + drift + p;

  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  seen.reserve(scanBound);
  for (std::uint64_t n = 1; n <= scanBound; ++n) {
    const std::int64_t value = raw.at(n);
    if (value < 1) {
      throw MalformedRepresentation("point " + std::to_string(n) + " maps below 1");
    }
    auto [it, fresh] = seen.try_emplace(static_cast<std::uint64_t>(value), n);
    if (!fresh) throw NotInjective(it->second, n);
  }
  for (std::uint64_t m = 1; m <= surjBound; ++m) {
    if (!seen.count(m)) throw NotSurjective(m);
  }
}

}  // namespace

ComputablePermutation ComputablePermutation::fromSpec(
    std::uint64_t threshold, std::uint64_t modulus, const std::vector<ClassMap>& classes,
    const std::map<std::uint64_t, std::uint64_t>& patch) {
  if (modulus < 1) throw MalformedRepresentation("modulus must be >= 1");
  if (classes.size() != modulus) {
    throw MalformedRepresentation("need exactly one class map per residue");
  }
  std::vector<std::int64_t> shifts(modulus, 0);
  std::vector<bool> defined(modulus, false);
  for (const ClassMap& c : classes) {
    if (c.from >= modulus || c.to >= modulus) {
      throw MalformedRepresentation("class residue out of range");
    }
    if (defined[c.from]) throw MalformedRepresentation("duplicate class map");
    defined[c.from] = true;
    shifts[c.from] = toSigned(c.to) - toSigned(c.from) + toSigned(modulus) * c.offset;
  }
  RawPerm raw{threshold, modulus, std::move(shifts), patch};
  validateRaw(raw);

  ComputablePermutation result;
  result.threshold_ = raw.threshold;
  result.modulus_ = raw.modulus;
  result.shifts_ = std::move(raw.shifts);
  result.patch_ = std::move(raw.patch);
  result.normalize();
  return result;
}

ComputablePermutation ComputablePermutation::identity() {
  return fromSpec(0, 1, {{0, 0, 0}}, {});
}

ComputablePermutation ComputablePermutation::fromPatch(
    const std::map<std::uint64_t, std::uint64_t>& patch) {
  std::uint64_t top = 0;
  for (const auto& [key, value] : patch) top = std::max({top, key, value});
  return fromSpec(top, 1, {{0, 0, 0}}, patch);
}

ComputablePermutation ComputablePermutation::transposition(std::uint64_t a, std::uint64_t b) {
  if (a == b) return identity();
  return fromPatch({{a, b}, {b, a}});
}

void ComputablePermutation::normalize() {
  // Minimal modulus: the shift vector's shortest repeating block, provided
  // the residues still permute under it.
  for (std::uint64_t d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool repeats = true;
    for (std::uint64_t r = d; r < modulus_ && repeats; ++r) {
      repeats = (shifts_[r] == shifts_[r % d]);
    }
    if (!repeats) continue;
    std::vector<bool> hit(d, false);
    bool bijective = true;
    for (std::uint64_t r = 0; r < d && bijective; ++r) {
      const std::uint64_t target = floorMod(toSigned(r) + shifts_[r], d);
      if (hit[target]) bijective = false;
      hit[target] = true;
    }
    if (!bijective) continue;
    shifts_.resize(d);
    modulus_ = d;
    break;
  }
  // Minimal threshold: keep only genuine exceptions to the class formula.
  std::map<std::uint64_t, std::uint64_t> exceptions;
  for (const auto& [key, value] : patch_) {
    const std::int64_t classValue = toSigned(key) + shifts_[key % modulus_];
    if (toSigned(value) != classValue) exceptions.emplace(key, value);
  }
  patch_ = std::move(exceptions);
  threshold_ = patch_.empty() ? 0 : patch_.rbegin()->first;
  buildInverseTables();
}

void ComputablePermutation::buildInverseTables() {
  residueInverse_.assign(modulus_, 0);
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    residueInverse_[floorMod(toSigned(r) + shifts_[r], modulus_)] = r;
  }
  patchInverse_.clear();
  for (const auto& [key, value] : patch_) patchInverse_.emplace(value, key);
}

std::uint64_t ComputablePermutation::apply(std::uint64_t n) const {
  if (n < 1) throw DomainError("permutations act on n >= 1");
  if (n <= threshold_) {
    auto it = patch_.find(n);
    if (it != patch_.end()) return it->second;
  }
  return static_cast<std::uint64_t>(toSigned(n) + shiftAt(n));
}

std::uint64_t ComputablePermutation::applyInverse(std::uint64_t m) const {
  if (m < 1) throw DomainError("permutations act on m >= 1");
  auto it = patchInverse_.find(m);
  if (it != patchInverse_.end()) return it->second;
  const std::uint64_t source = residueInverse_[m % modulus_];
  const std::int64_t n = toSigned(m) - shifts_[source];
  if (n < 1 || (static_cast<std::uint64_t>(n) <= threshold_ &&
                patch_.count(static_cast<std::uint64_t>(n)))) {
    throw std::logic_error("inverse lookup inconsistent with validated state");
  }
  return static_cast<std::uint64_t>(n);
}

std::vector<ComputablePermutation::ClassMap> ComputablePermutation::classMaps() const {
  std::vector<ClassMap> out;
  out.reserve(modulus_);
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    const std::uint64_t to = floorMod(toSigned(r) + shifts_[r], modulus_);
    const std::int64_t offset =
        (shifts_[r] - (toSigned(to) - toSigned(r))) / toSigned(modulus_);
    out.push_back({r, to, offset});
  }
  return out;
}

ComputablePermutation ComputablePermutation::inverse() const {
  std::vector<ClassMap> classes;
  classes.reserve(modulus_);
  std::int64_t topClassValue = 0;
  std::uint64_t maxPatchValue = 0;
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    const std::uint64_t to = floorMod(toSigned(r) + shifts_[r], modulus_);
    const std::int64_t offset =
        (-shifts_[r] - (toSigned(r) - toSigned(to))) / toSigned(modulus_);
    classes.push_back({to, r, offset});
    topClassValue = std::max(topClassValue, toSigned(threshold_) + shifts_[r]);
  }
  for (const auto& [key, value] : patch_) maxPatchValue = std::max(maxPatchValue, value);
  const std::uint64_t invThreshold =
      std::max<std::uint64_t>(topClassValue > 0 ? static_cast<std::uint64_t>(topClassValue) : 0,
                              maxPatchValue);
  std::map<std::uint64_t, std::uint64_t> invPatch;
  std::int64_t maxAbs = 0;
  for (std::int64_t s : shifts_) maxAbs = std::max(maxAbs, std::abs(s));
  // Every preimage of a value <= invThreshold sits within this range.
  const std::uint64_t scanBound =
      std::max(threshold_, invThreshold + static_cast<std::uint64_t>(maxAbs)) + modulus_;
  for (std::uint64_t n = 1; n <= scanBound; ++n) {
    const std::uint64_t v = apply(n);
    if (v <= invThreshold) invPatch.emplace(v, n);
  }
  std::sort(classes.begin(), classes.end(),
            [](const ClassMap& a, const ClassMap& b) { return a.from < b.from; });
  return fromSpec(invThreshold, modulus_, classes, invPatch);
}

ComputablePermutation compose(const ComputablePermutation& s, const ComputablePermutation& t) {
  const std::uint64_t g = std::gcd(s.modulus_, t.modulus_);
  const std::uint64_t p = s.modulus_ / g * t.modulus_;
  if (p > kPeriodLimit) throw PeriodLimitExceeded(s.modulus_, t.modulus_);

  std::int64_t tMaxAbs = 0;
  for (std::int64_t v : t.shifts_) tMaxAbs = std::max(tMaxAbs, std::abs(v));
  const std::uint64_t threshold =
      std::max(t.threshold_, s.threshold_ + static_cast<std::uint64_t>(tMaxAbs));

  std::vector<ComputablePermutation::ClassMap> classes;
  classes.reserve(p);
  for (std::uint64_t r = 0; r < p; ++r) {
    const std::int64_t dt = t.shifts_[r % t.modulus_];
    const std::uint64_t mid = floorMod(toSigned(r) + dt, s.modulus_);
    const std::int64_t total = dt + s.shifts_[mid];
    const std::uint64_t to = floorMod(toSigned(r) + total, p);
    const std::int64_t offset = (total - (toSigned(to) - toSigned(r))) / toSigned(p);
    classes.push_back({r, to, offset});
  }
  std::map<std::uint64_t, std::uint64_t> patch;
  for (std::uint64_t n = 1; n <= threshold; ++n) patch.emplace(n, s.apply(t.apply(n)));
  return ComputablePermutation::fromSpec(threshold, p, classes, patch);
}

PeriodicSet pushforward(const ComputablePermutation& s, const PeriodicSet& S) {
  const std::uint64_t ps = s.modulus();
  const std::uint64_t pS = S.periodLength();
  const std::uint64_t g = std::gcd(ps, pS);
  const std::uint64_t p = ps / g * pS;
  if (p > kPeriodLimit) throw PeriodLimitExceeded(ps, pS);

  std::int64_t maxAbs = 0;
  for (const auto& c : s.classMaps()) {
    const std::int64_t shift =
        toSigned(c.to) - toSigned(c.from) + toSigned(s.modulus()) * c.offset;
    maxAbs = std::max(maxAbs, std::abs(shift));
  }
  std::uint64_t maxPatchValue = 0;
  for (const auto& [key, value] : s.patch()) maxPatchValue = std::max(maxPatchValue, value);

  // Past this point the inverse is pure class arithmetic landing beyond both
  // the permutation threshold and the set prefix, so membership of the image
  // is p-periodic.
  const std::uint64_t L = std::max(
      {std::max(s.threshold(), S.prefixLength()) + static_cast<std::uint64_t>(maxAbs),
       maxPatchValue});
  Bits prefix(L), period(p);
  for (std::uint64_t m = 1; m <= L + p; ++m) {
    const bool in = S.member(s.applyInverse(m));
    if (m <= L) {
      prefix[m - 1] = in;
    } else {
      period[m - L - 1] = in;
    }
  }
  return PeriodicSet::fromBits(std::move(prefix), std::move(period));
}

std::ostream& operator<<(std::ostream& os, const ComputablePermutation& s) {
  os << "perm(p=" << s.modulus() << ",N=" << s.threshold() << ",shifts=[";
  const auto classes = s.classMaps();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) os << ',';
    os << (toSigned(classes[i].to) - toSigned(classes[i].from) +
           toSigned(s.modulus()) * classes[i].offset);
  }
  os << "],patch={";
  bool first = true;
  for (const auto& [k, v] : s.patch()) {
    if (!first) os << ',';
    first = false;
    os << k << ">" << v;
  }
  return os << "})";
}

ComputablePermutation randomPermutation(const RandomPermutationConfig& config) {
  if (config.maxModulus < 1) throw MalformedRepresentation("maxModulus must be >= 1");
  std::mt19937_64 rng(config.seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t p = 1 + rng() % config.maxModulus;
    std::vector<std::uint64_t> rho(p);
    std::iota(rho.begin(), rho.end(), 0);
    std::shuffle(rho.begin(), rho.end(), rng);

    const std::int64_t maxOff = static_cast<std::int64_t>(config.maxOffset);
    std::vector<std::int64_t> jumps(p, 0);
    std::int64_t sum = 0;
    for (auto& j : jumps) {
      j = static_cast<std::int64_t>(rng() % (2 * config.maxOffset + 1)) - maxOff;
      sum += j;
    }
    // Zero total block drift is what makes the class part fixable by a
    // finite patch: the displaced bottom then has exactly as many holes as
    // spare arguments.
    for (std::uint64_t guard = 0; sum != 0 && guard < 64 * (p + 1) * (config.maxOffset + 1);
         ++guard) {
      auto& j = jumps[rng() % p];
      if (sum > 0 && j > -maxOff) {
        --j;
        --sum;
      } else if (sum < 0 && j < maxOff) {
        ++j;
        ++sum;
      }
    }
    if (sum != 0) continue;

    std::vector<std::int64_t> shifts(p);
    std::int64_t maxAbs = 0;
    std::int64_t maxJump = 0;
    for (std::uint64_t r = 0; r < p; ++r) {
      shifts[r] = toSigned(rho[r]) - toSigned(r) + toSigned(p) * jumps[r];
      maxAbs = std::max(maxAbs, std::abs(shifts[r]));
      maxJump = std::max(maxJump, std::abs(jumps[r]));
    }
    const std::uint64_t bottom = p * (static_cast<std::uint64_t>(maxJump) + 1);
    const std::uint64_t missBound = bottom + static_cast<std::uint64_t>(maxAbs) + 2 * p;
    std::vector<bool> covered(missBound + 1, false);
    for (std::uint64_t n = bottom + 1; n <= missBound + static_cast<std::uint64_t>(maxAbs) + p;
         ++n) {
      const std::int64_t v = toSigned(n) + shifts[n % p];
      if (v >= 1 && static_cast<std::uint64_t>(v) <= missBound) {
        covered[static_cast<std::uint64_t>(v)] = true;
      }
    }
    std::vector<std::uint64_t> missing;
    for (std::uint64_t m = 1; m <= missBound; ++m) {
      if (!covered[m]) missing.push_back(m);
    }
    if (missing.size() != bottom) continue;
    std::shuffle(missing.begin(), missing.end(), rng);

    const std::uint64_t top = bottom + 2 * p;
    std::vector<std::uint64_t> table(top + 1, 0);
    for (std::uint64_t n = 1; n <= bottom; ++n) table[n] = missing[n - 1];
    for (std::uint64_t n = bottom + 1; n <= top; ++n) {
      table[n] = static_cast<std::uint64_t>(toSigned(n) + shifts[n % p]);
    }
    const std::uint64_t extraSwaps = config.maxPatch ? rng() % (config.maxPatch + 1) : 0;
    for (std::uint64_t i = 0; i < extraSwaps; ++i) {
      const std::uint64_t a = 1 + rng() % top;
      const std::uint64_t b = 1 + rng() % top;
      std::swap(table[a], table[b]);
    }
    std::map<std::uint64_t, std::uint64_t> patch;
    for (std::uint64_t n = 1; n <= top; ++n) patch.emplace(n, table[n]);

    std::vector<ComputablePermutation::ClassMap> classes;
    for (std::uint64_t r = 0; r < p; ++r) {
      classes.push_back({r, rho[r], jumps[r]});
    }
    try {
      return ComputablePermutation::fromSpec(top, p, classes, patch);
    } catch (const Error&) {
      continue;
    }
  }
  throw GenerationFailed();
}

struct QueryBackedPermutation::State {
  std::mutex mu;
  std::map<std::uint64_t, std::uint64_t> memo;
  std::map<std::uint64_t, std::uint64_t> seenValues;  // value -> argument
};

QueryBackedPermutation::QueryBackedPermutation(PointFn forward, PointFn inverse)
    : forward_(std::move(forward)),
      inverse_(std::move(inverse)),
      state_(std::make_shared<State>()) {}

std::uint64_t QueryBackedPermutation::apply(std::uint64_t n) const {
  if (n < 1) throw DomainError("permutations act on n >= 1");
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(n);
    if (it != state_->memo.end()) return it->second;
  }
  const std::uint64_t value = forward_(n);
  if (value < 1) throw DomainError("oracle mapped " + std::to_string(n) + " below 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  auto mit = state_->memo.find(n);
  if (mit != state_->memo.end()) return mit->second;  // racing query resolved first
  auto [it, fresh] = state_->seenValues.try_emplace(value, n);
  if (!fresh && it->second != n) throw InconsistentOracle(
      "oracle sends " + std::to_string(it->second) + " and " + std::to_string(n) +
      " to the same value " + std::to_string(value));
  state_->memo.emplace(n, value);
  return value;
}

std::uint64_t QueryBackedPermutation::applyInverse(std::uint64_t m,
                                                   std::uint64_t searchLimit) const {
  if (m < 1) throw DomainError("permutations act on m >= 1");
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->seenValues.find(m);
    if (it != state_->seenValues.end()) return it->second;
  }
  if (inverse_) {
    const std::uint64_t n = inverse_(m);
    if (n < 1) throw InconsistentOracle("inverse oracle returned a point below 1");
    if (apply(n) != m) {
      throw InconsistentOracle("inverse oracle disagrees with the forward direction at " +
                               std::to_string(m));
    }
    return n;
  }
  for (std::uint64_t n = 1; n <= searchLimit; ++n) {
    if (apply(n) == m) return n;
  }
  throw InconsistentOracle("no preimage of " + std::to_string(m) + " within search limit");
}

std::map<std::uint64_t, std::uint64_t> QueryBackedPermutation::memoSnapshot() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->memo;
}

}  // namespace jinf
