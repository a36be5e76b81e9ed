#pragma once

#include <vector>

#include "ekr/mis.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

// Graph on family members; an edge joins two disjoint members, so the
// intersecting subfamilies are exactly its independent sets.
struct DisjointnessGraph {
  SetFamily source;
  std::vector<mis::Bitset> adjacency;

  std::size_t member_count() const noexcept { return adjacency.size(); }
  std::size_t edge_count() const;
};

DisjointnessGraph build_disjointness_graph(const SetFamily& f);

struct SolverOptions {
  mis::SearchMode mode = mis::SearchMode::Canonical;
  std::size_t member_cap = 20000;
  std::uint64_t node_limit = 0;
  unsigned threads = 0;
};

struct MaxFamilyResult {
  std::size_t size = 0;
  SetFamily witness{0, 0};
  mis::SearchStats stats;
  std::size_t family_size = 0;  // |I^(r)(G)|

  bool certified() const noexcept { return stats.certified; }
};

// Exact maximum intersecting subfamily of a given family.
MaxFamilyResult max_intersecting(const SetFamily& f,
                                 const SolverOptions& options = {});
// Same, over all independent r-sets of g.
MaxFamilyResult max_intersecting(const Graph& g, std::size_t r,
                                 const SolverOptions& options = {});

struct AllMaximumResult {
  std::size_t size = 0;
  std::vector<SetFamily> families;
  bool cap_hit = false;
  mis::SearchStats stats;
};

AllMaximumResult all_maximum_intersecting(const Graph& g, std::size_t r,
                                          std::size_t cap,
                                          const SolverOptions& options = {});
AllMaximumResult all_maximum_intersecting(const SetFamily& f, std::size_t cap,
                                          const SolverOptions& options = {});

std::size_t greedy_lower_bound(const DisjointnessGraph& d);

}  // namespace ekr
