#pragma once

// Brute-force reference computations. These work from raw edge lists and
// plain bitmasks so they share no code with the library under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/set_family.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbor_masks(const ekr::Graph& g) {
  std::vector<Mask> nb(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  return nb;
}

inline bool independent(const std::vector<Mask>& nb, Mask s) {
  for (Mask t = s; t; t &= t - 1)
    if (nb[std::countr_zero(t)] & s) return false;
  return true;
}

// All independent r-subsets, by scanning every subset of V (|V| <= 24).
inline std::vector<Mask> independent_sets(const ekr::Graph& g, int r) {
  const auto nb = neighbor_masks(g);
  const Mask full = Mask{1} << g.vertex_count();
  std::vector<Mask> out;
  for (Mask s = 0; s < full; ++s)
    if (std::popcount(s) == r && independent(nb, s)) out.push_back(s);
  return out;
}

inline std::size_t alpha(const ekr::Graph& g) {
  const auto nb = neighbor_masks(g);
  const Mask full = Mask{1} << g.vertex_count();
  int best = 0;
  for (Mask s = 0; s < full; ++s)
    if (std::popcount(s) > best && independent(nb, s)) best = std::popcount(s);
  return static_cast<std::size_t>(best);
}

// Independence polynomial by I(G) = I(G - v) + x I(G - N[v]).
class IndependencePolynomial {
 public:
  explicit IndependencePolynomial(const ekr::Graph& g) : nb_(neighbor_masks(g)) {}

  std::vector<std::uint64_t> operator()() {
    return eval((Mask{1} << nb_.size()) - 1);
  }

 private:
  std::vector<std::uint64_t> eval(Mask alive) {
    if (alive == 0) return {1};
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const int v = std::countr_zero(alive);
    auto without = eval(alive & ~(Mask{1} << v));
    const auto with = eval(alive & ~(Mask{1} << v) & ~nb_[v]);
    if (without.size() < with.size() + 1) without.resize(with.size() + 1, 0);
    for (std::size_t i = 0; i < with.size(); ++i) without[i + 1] += with[i];
    memo_.emplace(alive, without);
    return without;
  }

  std::vector<Mask> nb_;
  std::map<Mask, std::vector<std::uint64_t>> memo_;
};

// Subsets of {1..n} with no two consecutive elements.
inline std::uint64_t no_two_consecutive(int n) {
  std::uint64_t a = 1, b = 2;  // n = 0, n = 1
  if (n == 0) return a;
  for (int i = 2; i <= n; ++i) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline Mask to_mask(const ekr::VertexSet& s) {
  Mask m = 0;
  s.for_each([&](ekr::Vertex v) { m |= Mask{1} << v; });
  return m;
}

// Largest pairwise-intersecting subfamily by checking all 2^|f| subsets.
inline std::size_t max_intersecting(const std::vector<Mask>& members) {
  const std::size_t k = members.size();
  std::vector<std::uint32_t> clash(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && (members[i] & members[j]) == 0) clash[i] |= 1u << j;
  std::size_t best = 0;
  for (std::uint32_t sub = 0; sub < (1u << k); ++sub) {
    const auto size = static_cast<std::size_t>(std::popcount(sub));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t t = sub; t && ok; t &= t - 1)
      ok = (clash[std::countr_zero(t)] & sub) == 0;
    if (ok) best = size;
  }
  return best;
}

// Size of the s-shadow by listing s-subsets of each member.
inline std::size_t shadow_size(const std::vector<Mask>& members, int s) {
  std::vector<Mask> seen;
  for (Mask m : members)
    for (Mask sub = m;; sub = (sub - 1) & m) {
      if (std::popcount(sub) == s) seen.push_back(sub);
      if (sub == 0) break;
    }
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(
      std::unique(seen.begin(), seen.end()) - seen.begin());
}

inline ekr::VertexSet from_mask(Mask m) {
  ekr::VertexSet s;
  for (; m; m &= m - 1) s.insert(static_cast<ekr::Vertex>(std::countr_zero(m)));
  return s;
}

inline ekr::SetFamily family_from_masks(std::size_t universe, std::size_t r,
                                        const std::vector<Mask>& masks) {
  std::vector<ekr::VertexSet> members;
  for (Mask m : masks) members.push_back(from_mask(m));
  return ekr::SetFamily(universe, r, std::move(members));
}

// Random intersecting subfamily: shuffle the pool, keep each set that meets
// everything kept so far, then drop a random number of the kept sets.
template <class Rng>
std::vector<Mask> random_intersecting(std::vector<Mask> pool, Rng& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Mask> kept;
  for (Mask m : pool) {
    bool ok = true;
    for (Mask k : kept) ok = ok && (k & m);
    if (ok) kept.push_back(m);
  }
  if (kept.empty()) return kept;
  std::uniform_int_distribution<std::size_t> keep(1, kept.size());
  kept.resize(keep(rng));
  return kept;
}

}  // namespace oracle
