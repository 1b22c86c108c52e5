#include "jinf/finite_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace jinf {
namespace {

constexpr std::uint64_t kVertexCap = 20000;
constexpr std::uint64_t kLevelCap = 200000;

// Exact as long as the running value stays at or below cap; returns cap + 1
// once the count provably exceeds it.
std::uint64_t binomialCapped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // C(n-k+i, i), an integer at every step
    if (result > cap) return cap + 1;
  }
  return result;
}

// k-subsets of [1, n] as sorted point lists, lexicographic order.
std::vector<std::vector<std::uint64_t>> combinations(std::uint64_t n, std::uint64_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  if (k > n) return out;
  std::vector<std::uint64_t> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - (k - i)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t maskOf(const std::vector<std::uint64_t>& label) {
  std::uint64_t mask = 0;
  for (std::uint64_t p : label) mask |= 1ull << (p - 1);
  return mask;
}

std::uint64_t fullMask(std::uint64_t groundSize) {
  return groundSize == 64 ? ~0ull : (1ull << groundSize) - 1;
}

void fillMasksAndAdjacency(FiniteGraph& g) {
  g.masks.clear();
  g.masks.reserve(g.labels.size());
  for (const auto& label : g.labels) g.masks.push_back(maskOf(label));
  const std::size_t m = g.size();
  g.adjacency.assign(m, {});
  const bool kneser = g.family == FiniteGraph::Family::Kneser;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool edge = kneser ? (g.masks[i] & g.masks[j]) == 0
                               : std::popcount(g.masks[i] ^ g.masks[j]) == 2;
      if (edge) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  }
}

}  // namespace

std::optional<std::size_t> FiniteGraph::indexOf(const std::vector<std::uint64_t>& label) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::string FiniteGraph::labelText(std::size_t v) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels[v].size(); ++i) {
    if (i) os << ',';
    os << labels[v][i];
  }
  return os.str();
}

FiniteGraph buildJohnsonFinite(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || n > 64) throw BadParameters("ground set size must lie in [1, 64]");
  if (k < 1 || k > n) throw BadParameters("subset size must lie in [1, n]");
  if (binomialCapped(n, k, kVertexCap) > kVertexCap)
    throw BadParameters("more than " + std::to_string(kVertexCap) + " vertices");
  FiniteGraph g{FiniteGraph::Family::Johnson, n, k, 0, false, {}, {}, {}};
  g.labels = combinations(n, k);
  fillMasksAndAdjacency(g);
  return g;
}

FiniteGraph buildKneserFinite(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || n > 64) throw BadParameters("ground set size must lie in [1, 64]");
  if (k < 1) throw BadParameters("subset size must be at least 1");
  if (2 * k > n) throw BadParameters("need 2k <= n for disjoint pairs to exist");
  if (binomialCapped(n, k, kVertexCap) > kVertexCap)
    throw BadParameters("more than " + std::to_string(kVertexCap) + " vertices");
  FiniteGraph g{FiniteGraph::Family::Kneser, n, k, 0, 2 * k == n, {}, {}, {}};
  g.labels = combinations(n, k);
  fillMasksAndAdjacency(g);
  return g;
}

FiniteGraph buildTruncatedComponent(const Vertex& base, std::uint64_t window,
                                    std::uint64_t radius) {
  if (window < 1 || window > 64) throw BadParameters("window must lie in [1, 64]");
  std::vector<std::uint64_t> inside;
  std::vector<std::uint64_t> outside;
  for (std::uint64_t p = 1; p <= window; ++p) {
    (base.set().member(p) ? inside : outside).push_back(p);
  }
  if (radius > inside.size() || radius > outside.size()) throw WindowTooSmall(window, radius);
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= radius; ++i) {
    const std::uint64_t a = binomialCapped(inside.size(), i, kVertexCap);
    const std::uint64_t b = binomialCapped(outside.size(), i, kVertexCap);
    total += a * b;
    if (a > kVertexCap || b > kVertexCap || total > kVertexCap)
      throw BadParameters("more than " + std::to_string(kVertexCap) + " vertices");
  }

  FiniteGraph g{FiniteGraph::Family::TruncatedComponent, window, inside.size(), radius,
                false,   {},       {},     {}};
  for (std::uint64_t i = 0; i <= radius; ++i) {
    for (const auto& removal : combinations(inside.size(), i)) {
      for (const auto& addition : combinations(outside.size(), i)) {
        std::vector<std::uint64_t> label;
        label.reserve(inside.size());
        std::size_t r = 0;
        for (std::size_t t = 0; t < inside.size(); ++t) {
          if (r < removal.size() && removal[r] == t + 1) {
            ++r;
            continue;
          }
          label.push_back(inside[t]);
        }
        for (std::uint64_t s : addition) label.push_back(outside[s - 1]);
        std::sort(label.begin(), label.end());
        g.labels.push_back(std::move(label));
      }
    }
  }
  std::sort(g.labels.begin(), g.labels.end());
  fillMasksAndAdjacency(g);
  return g;
}

std::vector<std::int64_t> bfsAll(const FiniteGraph& g, std::size_t from) {
  if (from >= g.size()) throw UnknownVertex("index " + std::to_string(from));
  std::vector<std::int64_t> dist(g.size(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : g.adjacency[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::optional<std::uint64_t> bfsDistance(const FiniteGraph& g, std::size_t from, std::size_t to) {
  if (to >= g.size()) throw UnknownVertex("index " + std::to_string(to));
  const auto dist = bfsAll(g, from);
  if (dist[to] < 0) return std::nullopt;
  return static_cast<std::uint64_t>(dist[to]);
}

namespace {

using Words = std::vector<std::uint64_t>;

bool anyBit(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
}

Words andWords(const Words& a, const Words& b) {
  Words out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

std::size_t countAnd(const Words& a, const Words& b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::vector<std::size_t> bitsOf(const Words& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint64_t x = w[i]; x; x &= x - 1) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }
  return out;
}

}  // namespace

std::vector<MaximalClique> maximalCliques(const FiniteGraph& g) {
  if (g.family == FiniteGraph::Family::Kneser)
    throw UnsupportedFamily("Kneser cliques are disjoint families, not stars or tops");
  const std::size_t m = g.size();
  if (m == 0) return {};
  if (m > 4096) throw BudgetExceeded("clique search handles at most 4096 vertices");
  const std::size_t words = (m + 63) / 64;
  std::vector<Words> nbr(m, Words(words, 0));
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t u : g.adjacency[v]) nbr[v][u / 64] |= 1ull << (u % 64);
  }

  std::vector<MaximalClique> out;
  std::vector<std::size_t> current;
  const std::uint64_t ground = fullMask(g.groundSize);
  std::function<void(Words, Words)> expand = [&](Words p, Words x) {
    if (!anyBit(p) && !anyBit(x)) {
      MaximalClique clique{current, false, false};
      std::sort(clique.members.begin(), clique.members.end());
      std::uint64_t inter = ground;
      std::uint64_t uni = 0;
      for (std::size_t v : clique.members) {
        inter &= g.masks[v];
        uni |= g.masks[v];
      }
      clique.isStar = static_cast<std::uint64_t>(std::popcount(inter)) + 1 == g.subsetSize;
      clique.isTop = static_cast<std::uint64_t>(std::popcount(uni)) == g.subsetSize + 1;
      out.push_back(std::move(clique));
      return;
    }
    std::size_t pivot = m;
    std::size_t best = 0;
    for (std::size_t i = 0; i < words; ++i) {
      for (std::uint64_t word = p[i] | x[i]; word; word &= word - 1) {
        const std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
        const std::size_t c = countAnd(p, nbr[v]);
        if (pivot == m || c > best) {
          pivot = v;
          best = c;
        }
      }
    }
    Words cand(words);
    for (std::size_t i = 0; i < words; ++i) cand[i] = p[i] & ~nbr[pivot][i];
    for (std::size_t v : bitsOf(cand)) {
      current.push_back(v);
      expand(andWords(p, nbr[v]), andWords(x, nbr[v]));
      current.pop_back();
      p[v / 64] &= ~(1ull << (v % 64));
      x[v / 64] |= 1ull << (v % 64);
    }
  };

  Words p(words, 0);
  for (std::size_t v = 0; v < m; ++v) p[v / 64] |= 1ull << (v % 64);
  expand(std::move(p), Words(words, 0));
  std::sort(out.begin(), out.end(),
            [](const MaximalClique& a, const MaximalClique& b) { return a.members < b.members; });
  return out;
}

std::uint64_t autGroupOrder(const FiniteGraph& g, std::uint64_t vertexBudget) {
  const std::size_t m = g.size();
  if (m == 0) throw BadParameters("empty graph");
  const std::uint64_t limit = std::min<std::uint64_t>(vertexBudget, 64);
  if (m > limit)
    throw BudgetExceeded("automorphism counting handles at most " + std::to_string(limit) +
                         " vertices");
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t u : g.adjacency[v]) adj[v] |= 1ull << u;
  }

  // Color refinement. Automorphisms preserve the resulting classes, so the
  // backtracking below may restrict candidate images to same-colored vertices.
  std::vector<std::uint32_t> color(m, 0);
  std::size_t distinct = 1;
  for (;;) {
    std::vector<std::vector<std::uint32_t>> sig(m);
    for (std::size_t v = 0; v < m; ++v) {
      sig[v].push_back(color[v]);
      for (std::size_t u : g.adjacency[v]) sig[v].push_back(color[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<std::uint32_t>> keys(sig);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < m; ++v) {
      color[v] = static_cast<std::uint32_t>(
          std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    }
    if (keys.size() == distinct) break;
    distinct = keys.size();
  }

  std::vector<std::size_t> classSize(distinct, 0);
  for (std::size_t v = 0; v < m; ++v) ++classSize[color[v]];

  // Assignment order: most assigned neighbors first, then rarest color.
  std::vector<std::size_t> order;
  order.reserve(m);
  std::uint64_t chosen = 0;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t bestV = m;
    std::size_t bestLinks = 0;
    std::size_t bestClass = 0;
    for (std::size_t v = 0; v < m; ++v) {
      if (chosen >> v & 1) continue;
      const auto links = static_cast<std::size_t>(std::popcount(adj[v] & chosen));
      const std::size_t cls = classSize[color[v]];
      if (bestV == m || links > bestLinks || (links == bestLinks && cls < bestClass)) {
        bestV = v;
        bestLinks = links;
        bestClass = cls;
      }
    }
    order.push_back(bestV);
    chosen |= 1ull << bestV;
  }

  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> image(m, 0);
  std::uint64_t usedMask = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (++nodes > 50'000'000) throw BudgetExceeded("automorphism search node budget");
    if (depth == m) {
      ++count;
      return;
    }
    const std::size_t s = order[depth];
    std::uint64_t req = 0;
    for (std::size_t j = 0; j < depth; ++j) {
      if (adj[s] >> order[j] & 1) req |= 1ull << image[order[j]];
    }
    for (std::size_t w = 0; w < m; ++w) {
      if (usedMask >> w & 1) continue;
      if (color[w] != color[s]) continue;
      if ((adj[w] & usedMask) != req) continue;
      image[s] = w;
      usedMask |= 1ull << w;
      assign(depth + 1);
      usedMask &= ~(1ull << w);
    }
  };
  assign(0);
  return count;
}

InducedPointMap inducedPermutationFinite(const FiniteGraph& g,
                                         const std::vector<std::size_t>& vertexMap) {
  if (g.family != FiniteGraph::Family::Johnson)
    throw UnsupportedFamily("point map recovery works on Johnson graphs");
  const std::size_t m = g.size();
  const std::uint64_t n = g.groundSize;
  const std::uint64_t k = g.subsetSize;
  if (vertexMap.size() != m) throw NotAutomorphism("vertex map has the wrong size");
  {
    std::vector<bool> seen(m, false);
    for (std::size_t img : vertexMap) {
      if (img >= m || seen[img]) throw NotAutomorphism("vertex map is not a bijection");
      seen[img] = true;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    const auto& src = g.adjacency[v];
    const auto& dst = g.adjacency[vertexMap[v]];
    if (src.size() != dst.size())
      throw NotAutomorphism("degree changes at vertex " + g.labelText(v));
    for (std::size_t u : src) {
      if (!std::binary_search(dst.begin(), dst.end(), vertexMap[u]))
        throw NotAutomorphism("edge " + g.labelText(v) + " ~ " + g.labelText(u) +
                              " is not preserved");
    }
  }

  const std::uint64_t full = fullMask(n);
  std::unordered_map<std::uint64_t, std::uint64_t> cur;
  cur.reserve(m);
  for (std::size_t v = 0; v < m; ++v) cur.emplace(g.masks[v], g.masks[vertexMap[v]]);
  bool usedComplement = false;

  // Walk star images down one level at a time: the image of the star around a
  // (j-1)-subset determines the image of that subset as the common core.
  for (std::uint64_t level = k; level >= 2; --level) {
    if (binomialCapped(n, level - 1, kLevelCap) > kLevelCap)
      throw BudgetExceeded("too many subsets at level " + std::to_string(level - 1));
    const auto bases = combinations(n, level - 1);
    bool retried = false;
    for (;;) {
      std::unordered_map<std::uint64_t, std::uint64_t> next;
      next.reserve(bases.size());
      bool sawTop = false;
      for (const auto& base : bases) {
        const std::uint64_t baseMask = maskOf(base);
        std::uint64_t inter = full;
        std::uint64_t uni = 0;
        for (std::uint64_t p = 1; p <= n; ++p) {
          if (baseMask >> (p - 1) & 1) continue;
          const std::uint64_t img = cur.at(baseMask | (1ull << (p - 1)));
          inter &= img;
          uni |= img;
        }
        if (static_cast<std::uint64_t>(std::popcount(inter)) + 1 == level) {
          next.emplace(baseMask, inter);
        } else if (level == k &&
                   static_cast<std::uint64_t>(std::popcount(uni)) == level + 1) {
          sawTop = true;
          break;
        } else if (level == k) {
          throw NotAutomorphism("the star around a " + std::to_string(level - 1) +
                                "-subset has no coherent image");
        } else {
          throw NotInducedByPermutation("level " + std::to_string(level - 1) +
                                        " loses the star structure");
        }
      }
      if (!sawTop) {
        cur = std::move(next);
        break;
      }
      if (retried || n != 2 * k) throw NotAutomorphism("star images mix stars and tops");
      // Stars land on tops: peel one complementation off the output side.
      for (auto& [mask, img] : cur) img = full ^ img;
      usedComplement = true;
      retried = true;
    }
  }

  std::vector<std::uint64_t> images(n, 0);
  {
    std::vector<bool> hit(n, false);
    for (std::uint64_t p = 1; p <= n; ++p) {
      const std::uint64_t img = cur.at(1ull << (p - 1));
      if (std::popcount(img) != 1) throw NotInducedByPermutation("point images are not points");
      const auto q = static_cast<std::uint64_t>(std::countr_zero(img)) + 1;
      if (hit[q - 1]) throw NotInducedByPermutation("two points share an image");
      images[p - 1] = q;
      hit[q - 1] = true;
    }
  }

  std::unordered_map<std::uint64_t, std::size_t> byMask;
  byMask.reserve(m);
  for (std::size_t v = 0; v < m; ++v) byMask.emplace(g.masks[v], v);
  for (std::size_t v = 0; v < m; ++v) {
    std::uint64_t img = 0;
    for (std::uint64_t p : g.labels[v]) img |= 1ull << (images[p - 1] - 1);
    if (usedComplement) img = full ^ img;
    const auto it = byMask.find(img);
    if (it == byMask.end() || it->second != vertexMap[v])
      throw NotInducedByPermutation("recovered point map disagrees at " + g.labelText(v));
  }
  return {std::move(images), usedComplement};
}

std::vector<std::size_t> applyPointMapToVertices(const FiniteGraph& g,
                                                 const std::vector<std::uint64_t>& images,
                                                 bool complementAfter) {
  const std::uint64_t n = g.groundSize;
  if (images.size() != n) throw BadParameters("point map has the wrong size");
  {
    std::vector<bool> hit(n, false);
    for (std::uint64_t q : images) {
      if (q < 1 || q > n || hit[q - 1]) throw BadParameters("point map is not a bijection");
      hit[q - 1] = true;
    }
  }
  const std::uint64_t full = fullMask(n);
  std::unordered_map<std::uint64_t, std::size_t> byMask;
  byMask.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) byMask.emplace(g.masks[v], v);
  std::vector<std::size_t> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::uint64_t img = 0;
    for (std::uint64_t p : g.labels[v]) img |= 1ull << (images[p - 1] - 1);
    if (complementAfter) img = full ^ img;
    const auto it = byMask.find(img);
    if (it == byMask.end())
      throw UnknownVertex("image of " + g.labelText(v) + " leaves the graph");
    out[v] = it->second;
  }
  return out;
}

std::string renderAdjacencyText(const FiniteGraph& g) {
  std::ostringstream os;
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << g.labelText(v) << ':';
    for (std::size_t u : g.adjacency[v]) os << ' ' << g.labelText(u);
    os << '\n';
  }
  return os.str();
}

}  // namespace jinf
