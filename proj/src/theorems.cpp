#include "ekr/theorems.hpp"

#include <algorithm>
#include <map>

#include "ekr/error.hpp"

namespace ekr {

Count binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

namespace {

Count power(std::size_t base, std::size_t exp) {
  Count out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

long long as_ll(std::size_t x) { return static_cast<long long>(x); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::Precondition, what);
}

}  // namespace

Count star_size_pendant_complete(std::size_t n, std::size_t r) {
  require(r >= 1 && r <= n, "star_size_pendant_complete needs 1 <= r <= n");
  return Count(r) * binomial(as_ll(n) - 1, as_ll(r) - 1);
}

Count star_size_uniform(std::size_t n, std::size_t m, std::size_t r) {
  require(n >= 1 && m >= 1 && r >= 1 && r <= n,
          "star_size_uniform needs n, m >= 1 and 1 <= r <= n");
  Count total = power(m, r - 1) * binomial(as_ll(n) - 1, as_ll(r) - 1);
  if (r >= 2)
    total += Count(n - 1) * power(m, r - 2) *
             binomial(as_ll(n) - 2, as_ll(r) - 2);
  return total;
}

namespace {

// Star at a vertex of the center clique. `others` holds the clique sizes at
// the remaining base vertices (0 = bare base vertex), sorted ascending.
// Sets containing a vertex y of the largest other clique lose that whole
// base; sets avoiding y see the clique shrink by one.
class GeneralStarCounter {
 public:
  explicit GeneralStarCounter(std::uint32_t center) : center_(center) {}

  Count count(const std::vector<std::uint32_t>& others, std::size_t r) {
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r > others.size() + 1) return 0;
    const bool uniform =
        std::all_of(others.begin(), others.end(),
                    [&](auto x) { return x == center_; });
    if (uniform) return star_size_uniform(others.size() + 1, center_, r);
    if (others.empty() || others.back() == 0) {
      // Only bare bases remain; they form a clique, so one of them at most.
      return r == 2 ? Count(others.size()) : Count(0);
    }
    const auto key = std::make_pair(others, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<std::uint32_t> shrunk = others;
    --shrunk.back();
    std::sort(shrunk.begin(), shrunk.end());
    std::vector<std::uint32_t> dropped(others.begin(), others.end() - 1);

    Count value = count(shrunk, r) + count(dropped, r - 1);
    memo_.emplace(key, value);
    return value;
  }

 private:
  std::uint32_t center_;
  std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, Count> memo_;
};

}  // namespace

Count star_size_general(std::vector<std::uint32_t> s, std::size_t r) {
  if (s.empty())
    throw Error(ErrorKind::InvalidParameter, "clique-size sequence is empty");
  if (std::any_of(s.begin(), s.end(), [](auto x) { return x == 0; }))
    throw Error(ErrorKind::InvalidParameter, "clique sizes must be >= 1");
  require(r >= 1, "star_size_general needs r >= 1");
  if (r > s.size()) return 0;
  std::sort(s.begin(), s.end());
  GeneralStarCounter counter(s.front());
  return counter.count(std::vector<std::uint32_t>(s.begin() + 1, s.end()), r);
}

Count ekr_bound_classical(std::size_t n, std::size_t r) {
  require(r >= 1 && n >= 2 * r, "classical EKR bound needs n >= 2r, r >= 1");
  return binomial(as_ll(n) - 1, as_ll(r) - 1);
}

Count bollobas_leader_bound(std::size_t n, std::size_t m, std::size_t r) {
  require(m >= 2 && r >= 1 && r <= n,
          "Bollobas-Leader bound needs m >= 2 and 1 <= r <= n");
  return power(m, r - 1) * binomial(as_ll(n) - 1, as_ll(r) - 1);
}

KatonaReport katona_check(const SetFamily& f, std::size_t b) {
  KatonaReport rep;
  rep.a = f.r();
  rep.b = b;
  rep.family_size = f.size();
  if (b > rep.a) {
    rep.reason = "b exceeds the member size";
    return rep;
  }
  if (f.size() >= 2 && min_pairwise_intersection(f) < b) {
    rep.reason = "some pair intersects in fewer than b elements";
    return rep;
  }
  rep.applicable = true;
  rep.shadow_size = shadow(f, rep.a - b).size();
  rep.bound_holds = rep.family_size <= rep.shadow_size;
  return rep;
}

StarCenters largest_star_centers(const Graph& g, std::size_t r) {
  require(r >= 1, "largest_star_centers needs r >= 1");
  const SetFamily all = enumerate_independent(g, r);
  std::vector<std::size_t> counts(g.vertex_count(), 0);
  for (const auto& m : all) m.for_each([&](Vertex v) { ++counts[v]; });
  StarCenters out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (counts[v] > out.size) {
      out.size = counts[v];
      out.centers.clear();
    }
    if (counts[v] == out.size && out.size > 0) out.centers.push_back(v);
  }
  return out;
}

std::string to_string(EkrClass c) {
  switch (c) {
    case EkrClass::Ekr: return "EKR";
    case EkrClass::StrictlyEkr: return "StrictlyEKR";
    case EkrClass::NotEkr: return "NotEKR";
  }
  return "?";
}

EkrVerdict verify_ekr(const Graph& g, std::size_t r, bool strict_check,
                      const VerifyOptions& options) {
  require(r >= 1, "verify_ekr needs r >= 1");
  EkrVerdict v;
  v.graph_name = g.name();
  v.r = r;

  const SetFamily all = enumerate_independent(g, r);
  v.family_size = all.size();
  const StarCenters stars = largest_star_centers(g, r);
  v.best_star_size = stars.size;
  v.best_star_centers = stars.centers;

  std::optional<MaxFamilyResult> exact;
  try {
    exact = max_intersecting(all, options.solver);
  } catch (const ResourceLimitError& e) {
    v.certified = false;
    v.max_size = std::max(e.lower_bound(), stars.size);
    v.note = e.what();
    v.classification =
        v.max_size > v.best_star_size ? EkrClass::NotEkr : EkrClass::Ekr;
    return v;
  }

  v.max_size = exact->size;
  v.certified = exact->certified();
  v.stats = exact->stats;
  if (v.max_size > v.best_star_size) {
    v.classification = EkrClass::NotEkr;
    v.witness = exact->witness;
    return v;
  }
  v.classification = EkrClass::Ekr;
  if (!v.certified) {
    v.note = "search stopped at the node limit; maximum is a lower bound";
    return v;
  }

  if (strict_check) {
    const AllMaximumResult maxima =
        all_maximum_intersecting(all, options.strict_cap, options.solver);
    std::size_t non_star = 0;
    for (const auto& fam : maxima.families)
      if (!fam.is_star()) ++non_star;
    v.maxima_found = maxima.families.size();
    v.non_star_maxima = non_star;
    v.strict_cap_hit = maxima.cap_hit;
    if (!maxima.cap_hit && non_star == 0 && maxima.stats.certified)
      v.classification = EkrClass::StrictlyEkr;
  }
  return v;
}

std::string theorem_range_flag(const std::string& family, std::size_t n,
                               std::size_t m, std::size_t r) {
  if (family == "pendant-complete" || family == "pendant-uniform" ||
      family == "pendant-general")
    return (r >= 1 && n >= 2 * r) ? "ekr-theorem" : "none";
  if (family == "disjoint-cliques")
    return (m >= 2 && r >= 1 && r <= n) ? "ekr-theorem" : "none";
  if (family == "pendant-path" && r >= 1 && r <= n) {
    const std::size_t k = n - r;
    if (k == 0 && n >= 4) return "non-ekr-theorem";
    if (k == 1 && n >= 6) return "non-ekr-theorem";
    if (k >= 2 && n >= 3 * k + 2) return "non-ekr-theorem";
  }
  return "none";
}

Vertex path_base(std::size_t n, std::size_t i) {
  if (i < 1 || i > n)
    throw Error(ErrorKind::InvalidParameter, "path index out of range");
  return static_cast<Vertex>(i - 1);
}

Vertex path_pendant(std::size_t n, std::size_t i) {
  if (i < 1 || i > n)
    throw Error(ErrorKind::InvalidParameter, "path index out of range");
  return static_cast<Vertex>(n + i - 1);
}

Graph pendant_path(std::size_t n) {
  return attach_pendants(make_path(static_cast<std::uint32_t>(n)),
                         std::vector<std::uint32_t>(n, 1));
}

Witness witness_Tk(std::size_t n, std::size_t k) {
  if (k >= n)
    throw Error(ErrorKind::InvalidParameter, "T_k needs k < n");
  Witness w;
  for (std::size_t i = k + 1; i <= n; ++i) w.set.insert(path_pendant(n, i));
  w.in_range = k >= 2 && n >= 3 * k + 2;
  return w;
}

Witness witness_Tprime(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "T' needs n >= 3");
  Witness w;
  w.set.insert(path_pendant(n, 1));
  for (std::size_t i = 3; i <= n; ++i) w.set.insert(path_pendant(n, i));
  w.in_range = n >= 6;
  return w;
}

Witness witness_A(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "A needs n >= 1");
  Witness w;
  for (std::size_t i = 1; i <= n; ++i)
    w.set.insert(i % 2 ? path_base(n, i) : path_pendant(n, i));
  w.in_range = n >= 4;
  return w;
}

Witness witness_Ac(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "A^c needs n >= 1");
  Witness w;
  for (std::size_t i = 1; i <= n; ++i)
    w.set.insert(i % 2 ? path_pendant(n, i) : path_base(n, i));
  w.in_range = n >= 4;
  return w;
}

Witness witness_C(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::InvalidParameter, "C needs n >= 4");
  Witness w;
  for (std::size_t i = 1; i <= n; ++i)
    w.set.insert(i == 2 || i == 4 ? path_base(n, i) : path_pendant(n, i));
  w.in_range = true;
  return w;
}

ConstructedFamily family_not_nEKR(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "needs n >= 1");
  const SetFamily all = enumerate_independent(pendant_path(n), n);
  const VertexSet ac = witness_Ac(n).set;
  std::vector<VertexSet> members;
  for (const auto& m : all)
    if (!(m == ac)) members.push_back(m);
  return {SetFamily(all.universe_size(), n, std::move(members)), n >= 4};
}

CounterexampleReport counterexample(std::size_t n, std::size_t k) {
  if (n < 1 || k >= n)
    throw Error(ErrorKind::InvalidParameter,
                "counterexample needs n >= 1 and 0 <= k < n");
  CounterexampleReport rep;
  rep.n = n;
  rep.k = k;
  rep.r = n - k;
  const Graph g = pendant_path(n);
  const SetFamily all = enumerate_independent(g, rep.r);
  rep.family_size = all.size();
  rep.best_star = largest_star_centers(g, rep.r);
  const SetFamily l2 = n >= 2 ? star_of(all, path_pendant(n, 2))
                              : SetFamily(g.vertex_count(), rep.r);
  rep.p2_star_size = l2.size();

  SetFamily built(g.vertex_count(), rep.r);
  if (k == 0) {
    auto c = family_not_nEKR(n);
    rep.construction = "I^(n) minus A^c";
    rep.in_range = c.in_range;
    built = std::move(c.family);
  } else {
    const Witness extra = k == 1 ? witness_Tprime(n) : witness_Tk(n, k);
    rep.construction = k == 1 ? "T'" : "T_k";
    rep.in_range = extra.in_range;
    std::vector<VertexSet> members = l2.members();
    members.push_back(extra.set);
    built = SetFamily(g.vertex_count(), rep.r, std::move(members));
  }
  rep.constructed_size = built.size();
  rep.intersecting = is_intersecting(built).intersecting;
  return rep;
}

std::vector<StarSizeRow> star_size_table(const std::vector<std::uint32_t>& s,
                                         std::size_t r_min,
                                         std::size_t r_max) {
  const Graph g = attach_pendants(
      make_complete(static_cast<std::uint32_t>(s.size())), s);
  const auto smallest = std::min_element(s.begin(), s.end());
  const Vertex center = g.pendant_vertex(
      static_cast<std::uint32_t>(smallest - s.begin()) + 1, 1);
  std::vector<StarSizeRow> rows;
  for (std::size_t r = std::max<std::size_t>(r_min, 1); r <= r_max; ++r)
    rows.push_back({g.name(), r, star_size_general(s, r),
                    star(g, r, center).size()});
  return rows;
}

std::vector<StarSizeRow> star_size_table_cliques(std::size_t n, std::size_t m,
                                                 std::size_t r_min,
                                                 std::size_t r_max) {
  const Graph g = make_disjoint_cliques(static_cast<std::uint32_t>(n),
                                        static_cast<std::uint32_t>(m));
  std::vector<StarSizeRow> rows;
  for (std::size_t r = std::max<std::size_t>(r_min, 1);
       r <= std::min(r_max, n); ++r)
    rows.push_back({g.name(), r,
                    power(m, r - 1) * binomial(as_ll(n) - 1, as_ll(r) - 1),
                    star(g, r, 0).size()});
  return rows;
}

}  // namespace ekr
