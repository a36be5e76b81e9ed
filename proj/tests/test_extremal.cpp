#include "doctest.h"

#include <random>

#include "ekr/error.hpp"
#include "ekr/extremal.hpp"
#include "ekr/theorems.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

Graph pendant_complete(std::uint32_t n) {
  return attach_pendants(make_complete(n), std::vector<std::uint32_t>(n, 1));
}

std::vector<mis::Bitset> random_adjacency(std::mt19937_64& rng, std::size_t n,
                                          double p) {
  std::bernoulli_distribution coin(p);
  std::vector<mis::Bitset> adj(n, mis::Bitset(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) adj[u].set(v), adj[v].set(u);
  return adj;
}

std::size_t brute_mis(const std::vector<mis::Bitset>& adj) {
  const std::size_t n = adj.size();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      if (s >> u & 1)
        for (std::size_t v = u + 1; v < n && ok; ++v)
          if ((s >> v & 1) && adj[u].test(v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

bool independent_in(const std::vector<mis::Bitset>& adj,
                    const std::vector<std::size_t>& vs) {
  for (auto u : vs)
    for (auto v : vs)
      if (adj[u].test(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("exact independent set against brute force") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 18;
    const auto adj = random_adjacency(rng, n, 0.1 + 0.08 * (trial % 10));
    const std::size_t expected = brute_mis(adj);
    for (auto mode : {mis::SearchMode::Canonical, mis::SearchMode::Parallel}) {
      mis::SearchOptions opts;
      opts.mode = mode;
      opts.threads = 3;
      const auto res = mis::maximum_independent_set(adj, opts);
      CHECK(res.vertices.size() == expected);
      CHECK(independent_in(adj, res.vertices));
      CHECK(res.stats.certified);
    }
    const auto greedy = mis::greedy_independent_set(adj);
    CHECK(greedy.size() <= expected);
    CHECK(independent_in(adj, greedy));
  }
}

TEST_CASE("canonical search is deterministic") {
  std::mt19937_64 rng(2);
  const auto adj = random_adjacency(rng, 40, 0.3);
  const auto a = mis::maximum_independent_set(adj, {});
  const auto b = mis::maximum_independent_set(adj, {});
  CHECK(a.vertices == b.vertices);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("node limit leaves the result uncertified") {
  std::mt19937_64 rng(4);
  const auto adj = random_adjacency(rng, 60, 0.2);
  mis::SearchOptions opts;
  opts.node_limit = 3;
  const auto res = mis::maximum_independent_set(adj, opts);
  CHECK_FALSE(res.stats.certified);
  CHECK(independent_in(adj, res.vertices));
}

TEST_CASE("malformed adjacency is rejected") {
  std::vector<mis::Bitset> adj(2, mis::Bitset(2));
  adj[0].set(1);
  CHECK_THROWS_AS(mis::maximum_independent_set(adj, {}), Error);
  adj[1].set(1);
  CHECK_THROWS_AS(mis::maximum_independent_set(adj, {}), Error);
}

TEST_CASE("all maximum independent sets") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 12;
    const auto adj = random_adjacency(rng, n, 0.35);
    const std::size_t omega = brute_mis(adj);
    std::size_t expected = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) != omega) continue;
      std::vector<std::size_t> vs;
      for (std::size_t v = 0; v < n; ++v)
        if (s >> v & 1) vs.push_back(v);
      if (independent_in(adj, vs)) ++expected;
    }
    const auto res = mis::all_maximum_independent_sets(adj, 100000, {});
    CHECK(res.maximum == omega);
    CHECK(res.sets.size() == expected);
    CHECK_FALSE(res.cap_hit);
  }
}

TEST_CASE("disjointness graph") {
  const Graph p4 = pendant_path(4);
  const SetFamily pair(8, 4, {witness_A(4).set, witness_Ac(4).set});
  const DisjointnessGraph d = build_disjointness_graph(pair);
  CHECK(d.member_count() == 2);
  CHECK(d.edge_count() == 1);
  CHECK(build_disjointness_graph(star(p4, 3, 5)).edge_count() == 0);
  CHECK(build_disjointness_graph(enumerate_independent(p4, 4)).edge_count() == 1);
}

TEST_CASE("maximum intersecting families") {
  CHECK(max_intersecting(pendant_complete(4), 2).size == 6);
  CHECK(max_intersecting(pendant_path(4), 4).size == 7);
  CHECK(max_intersecting(make_cycle(7), 1).size == 1);
  CHECK(max_intersecting(make_disjoint_cliques(4, 2), 2).size == 6);
  CHECK(max_intersecting(make_complete(4), 2).size == 0);

  const MaxFamilyResult res = max_intersecting(pendant_complete(6), 3);
  CHECK(res.size == 30);
  CHECK(res.witness.size() == 30);
  CHECK(is_intersecting(res.witness).intersecting);
  CHECK(res.certified());
}

TEST_CASE("solver against exhaustive subset search") {
  std::mt19937_64 rng(9);
  const std::vector<Graph> graphs = {pendant_path(5), pendant_complete(5),
                                     make_power(make_cycle(8), 2),
                                     attach_pendants(make_cycle(4), {1, 2, 1, 2})};
  for (int trial = 0; trial < 60; ++trial) {
    const Graph& g = graphs[trial % graphs.size()];
    const int r = 2 + trial % 3;
    auto pool = oracle::independent_sets(g, r);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min<std::size_t>(pool.size(), 4 + trial % 15));
    const SetFamily f = oracle::family_from_masks(g.vertex_count(), r, pool);
    const MaxFamilyResult res = max_intersecting(f);
    CHECK(res.size == oracle::max_intersecting(pool));
    CHECK(is_intersecting(res.witness).intersecting);
    for (const auto& m : res.witness) CHECK(f.contains(m));
  }
}

TEST_CASE("member cap") {
  SolverOptions opts;
  opts.member_cap = 100;
  try {
    max_intersecting(pendant_complete(8), 4, opts);
    FAIL("expected the member cap to trip");
  } catch (const ResourceLimitError& e) {
    CHECK(e.member_count() == 350);
    CHECK(e.lower_bound() > 0);
    CHECK(e.lower_bound() <= 140);
  }
}

TEST_CASE("all maximum intersecting families") {
  const AllMaximumResult k6 = all_maximum_intersecting(pendant_complete(6), 2, 100);
  CHECK(k6.size == 10);
  REQUIRE(k6.families.size() == 6);
  const Graph g6 = pendant_complete(6);
  for (const auto& f : k6.families) {
    CHECK(f.is_star());
    CHECK(g6.role(f.common_vertices().first()).is_pendant());
  }

  // Every pair of 2-sets from a triangle intersects.
  const Graph tri = make_disjoint_cliques(3, 1);
  const AllMaximumResult whole = all_maximum_intersecting(tri, 2, 10);
  REQUIRE(whole.families.size() == 1);
  CHECK(whole.families[0] == enumerate_independent(tri, 2));

  const Graph p4 = pendant_path(4);
  const SetFamily all4 = enumerate_independent(p4, 4);
  const AllMaximumResult p = all_maximum_intersecting(p4, 4, 10);
  CHECK(p.size == 7);
  std::vector<VertexSet> without_ac, without_a;
  for (const auto& m : all4) {
    if (m != witness_Ac(4).set) without_ac.push_back(m);
    if (m != witness_A(4).set) without_a.push_back(m);
  }
  const SetFamily fa(8, 4, without_ac), fb(8, 4, without_a);
  CHECK(std::find(p.families.begin(), p.families.end(), fa) != p.families.end());
  CHECK(std::find(p.families.begin(), p.families.end(), fb) != p.families.end());

  const AllMaximumResult capped = all_maximum_intersecting(pendant_complete(6), 2, 3);
  CHECK(capped.cap_hit);
  CHECK(capped.families.size() == 3);
}

TEST_CASE("greedy lower bound") {
  const Graph k4 = pendant_complete(4);
  CHECK(greedy_lower_bound(build_disjointness_graph(star(k4, 2, 4))) == 6);
  const SetFamily pair(8, 4, {witness_A(4).set, witness_Ac(4).set});
  CHECK(greedy_lower_bound(build_disjointness_graph(pair)) == 1);
  const std::size_t g = greedy_lower_bound(
      build_disjointness_graph(enumerate_independent(k4, 2)));
  CHECK(g <= 6);
  CHECK(g >= 1);
}
