#include "doctest.h"

#include <random>

#include "ekr/error.hpp"
#include "ekr/theorems.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

Graph pendant_complete(std::uint32_t n) {
  return attach_pendants(make_complete(n), std::vector<std::uint32_t>(n, 1));
}

VertexSet vs(std::initializer_list<Vertex> xs) {
  return VertexSet::from_range(xs);
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));
}

TEST_CASE("pendant complete star size") {
  CHECK(star_size_pendant_complete(4, 2) == 6);
  CHECK(star_size_pendant_complete(9, 1) == 1);
  CHECK(star_size_pendant_complete(5, 2) == 8);
  const Graph k5 = pendant_complete(5);
  CHECK(star(k5, 2, k5.pendant_vertex(1, 1)).size() == 8);
}

TEST_CASE("uniform star size") {
  CHECK(star_size_uniform(4, 2, 2) == 9);
  CHECK(star_size_uniform(7, 3, 1) == 1);
  CHECK(star_size_uniform(5, 3, 2) == 16);
  const Graph k53 = attach_pendants(make_complete(5), {3, 3, 3, 3, 3});
  CHECK(star(k53, 2, k53.pendant_vertex(1, 1)).size() == 16);
  // Closed form m^{r-2}(m+r-1)C(n-1,r-1) agrees with the two-term form.
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t m = 1; m <= 5; ++m)
      for (std::size_t r = 2; r <= n; ++r) {
        Count mp = 1;
        for (std::size_t i = 2; i < r; ++i) mp *= m;
        CHECK(star_size_uniform(n, m, r) == mp * (m + r - 1) * binomial(n - 1, r - 1));
      }
  // Large values stay exact.
  CHECK(star_size_uniform(60, 50, 30) > Count(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("general star size") {
  CHECK(star_size_general({1, 1, 1, 1}, 2) == star_size_pendant_complete(4, 2));
  CHECK(star_size_general({2, 2, 2, 2}, 2) == star_size_uniform(4, 2, 2));
  CHECK(star_size_general({1, 1, 2, 2}, 2) == 8);
  CHECK(star_size_general({1, 2}, 3) == 0);

  // Formula against enumerated stars centered at a vertex of a minimum clique.
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::uint32_t> clique(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint32_t> s(2 + trial % 4);
    for (auto& x : s) x = clique(rng);
    for (const auto& row : star_size_table(s, 1, s.size()))
      CHECK_MESSAGE(row.agrees(), row.graph << " r=" << row.r);
  }
}

TEST_CASE("classical and disjoint-clique bounds") {
  CHECK(ekr_bound_classical(5, 2) == 4);
  for (std::size_t r = 1; r <= 8; ++r)
    CHECK(ekr_bound_classical(2 * r, r) == binomial(2 * r - 1, r - 1));
  CHECK(ekr_bound_classical(8, 3) == 21);
  CHECK_THROWS_AS(ekr_bound_classical(5, 3), Error);

  // Random intersecting 3-sets of an 8-set never beat C(7,2).
  std::vector<oracle::Mask> pool;
  for (oracle::Mask m = 0; m < 256; ++m)
    if (std::popcount(m) == 3) pool.push_back(m);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial)
    CHECK(oracle::random_intersecting(pool, rng).size() <= 21);

  CHECK(bollobas_leader_bound(4, 2, 2) == 6);
  CHECK(bollobas_leader_bound(5, 3, 1) == 1);
  CHECK(max_intersecting(make_disjoint_cliques(4, 2), 2).size == 6);
  for (const auto& row : star_size_table_cliques(5, 2, 1, 5)) CHECK(row.agrees());
}

TEST_CASE("katona check") {
  const SetFamily f(5, 3, {vs({0, 1, 2}), vs({0, 1, 3}), vs({0, 1, 4})});
  const KatonaReport rep = katona_check(f, 2);
  CHECK(rep.applicable);
  CHECK(rep.family_size == 3);
  CHECK(rep.shadow_size == 5);
  CHECK(rep.bound_holds == true);

  const KatonaReport single = katona_check(SetFamily(5, 3, {vs({0, 1, 2})}), 3);
  CHECK(single.applicable);
  CHECK(single.shadow_size == 1);
  CHECK(single.bound_holds == true);

  const KatonaReport bad = katona_check(f, 3);
  CHECK_FALSE(bad.applicable);
  CHECK_FALSE(bad.bound_holds.has_value());
}

TEST_CASE("katona on pendant complement families") {
  const std::uint32_t n = 8, r = 3;
  const Graph k8 = pendant_complete(n);
  std::vector<oracle::Mask> pool;
  VertexSet ground;
  for (std::uint32_t i = 2; i <= n; ++i) {
    ground.insert(k8.pendant_vertex(i, 1));
    for (std::uint32_t j = i + 1; j <= n; ++j)
      pool.push_back((oracle::Mask{1} << k8.pendant_vertex(i, 1)) |
                     (oracle::Mask{1} << k8.pendant_vertex(j, 1)));
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto fam = oracle::random_intersecting(pool, rng);
    const SetFamily comp =
        complement_in(oracle::family_from_masks(16, r - 1, fam), ground);
    const KatonaReport rep = katona_check(comp, n - 2 * r + 2);
    CHECK(rep.applicable);
    CHECK(rep.bound_holds == true);
  }
}

TEST_CASE("largest star centers") {
  const StarCenters p5 = largest_star_centers(pendant_path(5), 3);
  // p_3 ties with p_2 and p_4 at r = 3; all three stars have 22 members.
  CHECK(p5.size == 22);
  CHECK(p5.centers == std::vector<Vertex>{path_pendant(5, 2), path_pendant(5, 3),
                                          path_pendant(5, 4)});
  const StarCenters p5r4 = largest_star_centers(pendant_path(5), 4);
  CHECK(p5r4.centers == std::vector<Vertex>{path_pendant(5, 2), path_pendant(5, 4)});
  const StarCenters k4 = largest_star_centers(pendant_complete(4), 2);
  CHECK(k4.size == 6);
  CHECK(k4.centers == std::vector<Vertex>{4, 5, 6, 7});
  CHECK(largest_star_centers(make_cycle(7), 3).centers.size() == 7);
}

TEST_CASE("verify") {
  const EkrVerdict k6 = verify_ekr(pendant_complete(6), 2, true);
  CHECK(k6.classification == EkrClass::StrictlyEkr);
  CHECK(k6.best_star_centers == std::vector<Vertex>{6, 7, 8, 9, 10, 11});

  const EkrVerdict p4 = verify_ekr(pendant_path(4), 4, false);
  CHECK(p4.classification == EkrClass::NotEkr);
  CHECK(p4.max_size == 7);
  CHECK(p4.best_star_size == 6);
  REQUIRE(p4.witness.has_value());
  CHECK(p4.witness->size() == 7);
  CHECK(is_intersecting(*p4.witness).intersecting);

  const EkrVerdict k4 = verify_ekr(pendant_complete(4), 2, true);
  CHECK(k4.max_size == 6);
  CHECK(k4.best_star_size == 6);
  CHECK(k4.classification != EkrClass::NotEkr);
  CHECK(k4.maxima_found.has_value());

  const EkrVerdict gen = verify_ekr(attach_pendants(make_complete(4), {1, 1, 2, 2}), 2, false);
  CHECK(gen.classification == EkrClass::Ekr);
  CHECK(gen.max_size == 8);

  VerifyOptions tight;
  tight.solver.member_cap = 10;
  const EkrVerdict capped = verify_ekr(pendant_complete(6), 3, false, tight);
  CHECK_FALSE(capped.certified);
}

TEST_CASE("theorem range flags") {
  CHECK(theorem_range_flag("pendant-complete", 6, 0, 3) == "ekr-theorem");
  CHECK(theorem_range_flag("pendant-complete", 5, 0, 3) == "none");
  CHECK(theorem_range_flag("pendant-path", 8, 0, 6) == "non-ekr-theorem");
  CHECK(theorem_range_flag("pendant-path", 6, 0, 5) == "non-ekr-theorem");
  CHECK(theorem_range_flag("pendant-path", 4, 0, 4) == "non-ekr-theorem");
  CHECK(theorem_range_flag("pendant-path", 6, 0, 3) == "none");
  CHECK(theorem_range_flag("cycle", 6, 0, 2) == "none");
}

TEST_CASE("path witnesses") {
  CHECK(witness_Tk(8, 2).set ==
        vs({path_pendant(8, 3), path_pendant(8, 4), path_pendant(8, 5),
            path_pendant(8, 6), path_pendant(8, 7), path_pendant(8, 8)}));
  CHECK(witness_Tk(8, 2).in_range);
  CHECK(witness_Tk(11, 3).in_range);
  CHECK_FALSE(witness_Tk(10, 3).in_range);
  CHECK_THROWS_AS(witness_Tk(3, 3), Error);

  CHECK(witness_A(4).set == vs({path_base(4, 1), path_base(4, 3),
                                path_pendant(4, 2), path_pendant(4, 4)}));
  for (std::size_t n = 1; n <= 12; ++n)
    CHECK_FALSE(witness_A(n).set.intersects(witness_Ac(n).set));
  const Witness c5 = witness_C(5);
  CHECK(c5.set == vs({path_base(5, 2), path_base(5, 4), path_pendant(5, 1),
                      path_pendant(5, 3), path_pendant(5, 5)}));
  CHECK(pendant_path(5).is_independent(c5.set));

  for (std::size_t n = 3; n <= 9; ++n) {
    const Graph g = pendant_path(n);
    CHECK(g.is_independent(witness_Tprime(n).set));
    CHECK(g.is_independent(witness_A(n).set));
    CHECK(g.is_independent(witness_Ac(n).set));
  }
}

TEST_CASE("family without the pairwise complement") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const ConstructedFamily cf = family_not_nEKR(n);
    const auto all = oracle::independent_sets(pendant_path(n), static_cast<int>(n));
    CHECK(all.size() == oracle::no_two_consecutive(static_cast<int>(n)));
    CHECK(cf.family.size() == all.size() - 1);
    CHECK(is_intersecting(cf.family).intersecting);
    CHECK(cf.family.contains(witness_A(n).set));
    CHECK_FALSE(cf.family.contains(witness_Ac(n).set));
    CHECK(cf.in_range);
  }
  CHECK(family_not_nEKR(4).family.size() == 7);
  CHECK(family_not_nEKR(5).family.size() == 12);
}

TEST_CASE("counterexamples") {
  const CounterexampleReport t = counterexample(8, 2);
  CHECK(t.r == 6);
  CHECK(t.intersecting);
  CHECK(t.in_range);
  CHECK(t.constructed_size == t.p2_star_size + 1);

  const CounterexampleReport tp = counterexample(6, 1);
  CHECK(tp.intersecting);
  CHECK(tp.constructed_size == tp.p2_star_size + 1);

  const CounterexampleReport f = counterexample(4, 0);
  CHECK(f.constructed_size == 7);
  CHECK(f.best_star.size == 6);
  CHECK(f.beats_every_star());
}
