#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/extremal.hpp"
#include "ekr/graph.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

// Arbitrary-precision count. Values that fit in a machine word are stored
// inline, so small results cost no allocation.
using Count = boost::multiprecision::cpp_int;

Count binomial(long long n, long long k);

// r * C(n-1, r-1): star size at a pendant of K_n*.
Count star_size_pendant_complete(std::size_t n, std::size_t r);
// m^{r-1} C(n-1,r-1) + (n-1) m^{r-2} C(n-2,r-2): star size at a clique
// vertex of K_n^m. Equals m^{r-2} (m+r-1) C(n-1,r-1) for r >= 2.
Count star_size_uniform(std::size_t n, std::size_t m, std::size_t r);
// Star size at a vertex of a minimum-size clique of K_n^s, by the
// add/remove-one-clique-vertex recursion. Returns 0 when r > n.
Count star_size_general(std::vector<std::uint32_t> s, std::size_t r);
// C(n-1, r-1); requires n >= 2r.
Count ekr_bound_classical(std::size_t n, std::size_t r);
// m^{r-1} C(n-1, r-1) for intersecting independent r-sets of nK_m.
Count bollobas_leader_bound(std::size_t n, std::size_t m, std::size_t r);

struct KatonaReport {
  bool applicable = false;
  std::size_t a = 0;  // member size
  std::size_t b = 0;  // required pairwise intersection
  std::size_t family_size = 0;
  std::size_t shadow_size = 0;
  std::optional<bool> bound_holds;  // empty when not applicable
  std::string reason;
};

// |f| <= |shadow(f, a-b)| for an a-uniform family with pairwise
// intersections >= b.
KatonaReport katona_check(const SetFamily& f, std::size_t b);

struct StarCenters {
  std::size_t size = 0;
  std::vector<Vertex> centers;
};

StarCenters largest_star_centers(const Graph& g, std::size_t r);

enum class EkrClass { Ekr, StrictlyEkr, NotEkr };
std::string to_string(EkrClass c);

struct EkrVerdict {
  std::string graph_name;
  std::size_t r = 0;
  std::size_t family_size = 0;
  std::size_t max_size = 0;
  std::size_t best_star_size = 0;
  std::vector<Vertex> best_star_centers;
  EkrClass classification = EkrClass::Ekr;
  std::optional<SetFamily> witness;  // present for NotEkr
  bool certified = true;
  mis::SearchStats stats;
  // Strictness probe, filled when requested on an EKR instance.
  std::optional<std::size_t> maxima_found;
  std::optional<std::size_t> non_star_maxima;
  bool strict_cap_hit = false;
  std::string range_flag = "none";
  std::string note;
};

struct VerifyOptions {
  SolverOptions solver;
  std::size_t strict_cap = 1000;
};

EkrVerdict verify_ekr(const Graph& g, std::size_t r, bool strict_check,
                      const VerifyOptions& options = {});

// "ekr-theorem", "non-ekr-theorem", or "none" for a CLI family name.
std::string theorem_range_flag(const std::string& family, std::size_t n,
                               std::size_t m, std::size_t r);

// Explicit sets in P_n*, with x_i = base i and p_i its pendant.
struct Witness {
  VertexSet set;
  bool in_range = false;
};

Vertex path_base(std::size_t n, std::size_t i);
Vertex path_pendant(std::size_t n, std::size_t i);
Graph pendant_path(std::size_t n);

Witness witness_Tk(std::size_t n, std::size_t k);
Witness witness_Tprime(std::size_t n);
Witness witness_A(std::size_t n);
Witness witness_Ac(std::size_t n);
Witness witness_C(std::size_t n);

struct ConstructedFamily {
  SetFamily family;
  bool in_range = false;
};

// I^(n)(P_n*) with A^c removed.
ConstructedFamily family_not_nEKR(std::size_t n);

struct CounterexampleReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::string construction;  // "T_k", "T'", or "I^(n) minus A^c"
  std::size_t family_size = 0;       // |I^(r)(P_n*)|
  std::size_t p2_star_size = 0;
  StarCenters best_star;
  std::size_t constructed_size = 0;
  bool intersecting = false;
  bool in_range = false;

  bool beats_every_star() const noexcept {
    return intersecting && constructed_size > best_star.size;
  }
};

CounterexampleReport counterexample(std::size_t n, std::size_t k);

struct StarSizeRow {
  std::string graph;
  std::size_t r = 0;
  Count formula;
  std::size_t enumerated = 0;

  bool agrees() const { return formula == enumerated; }
};

// Rows for K_n^s (s all ones, uniform, or mixed) comparing star_size_general
// with the enumerated star at a vertex of a minimum clique.
std::vector<StarSizeRow> star_size_table(const std::vector<std::uint32_t>& s,
                                         std::size_t r_min, std::size_t r_max);
// Rows for nK_m comparing m^{r-1} C(n-1,r-1) with an enumerated star.
std::vector<StarSizeRow> star_size_table_cliques(std::size_t n, std::size_t m,
                                                 std::size_t r_min,
                                                 std::size_t r_max);

}  // namespace ekr
