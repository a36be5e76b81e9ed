#include "ekr/extremal.hpp"

#include "ekr/error.hpp"

namespace ekr {

std::size_t DisjointnessGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

DisjointnessGraph build_disjointness_graph(const SetFamily& f) {
  const std::size_t n = f.size();
  DisjointnessGraph d{f, std::vector<mis::Bitset>(n, mis::Bitset(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!f[i].intersects(f[j])) {
        d.adjacency[i].set(j);
        d.adjacency[j].set(i);
      }
  return d;
}

std::size_t greedy_lower_bound(const DisjointnessGraph& d) {
  return mis::greedy_independent_set(d.adjacency).size();
}

namespace {

mis::SearchOptions search_options(const SolverOptions& o) {
  return {o.mode, o.node_limit, o.threads};
}

SetFamily pick(const SetFamily& f, const std::vector<std::size_t>& idx) {
  std::vector<VertexSet> members;
  members.reserve(idx.size());
  for (auto i : idx) members.push_back(f[i]);
  return SetFamily(f.universe_size(), f.r(), std::move(members));
}

void enforce_cap(const SetFamily& f, const SolverOptions& options) {
  if (f.size() <= options.member_cap) return;
  // Past this size even the disjointness graph is too expensive; fall back
  // to the largest star, which is always intersecting.
  constexpr std::size_t kGreedyLimit = 60000;
  std::size_t lower = 0;
  if (f.size() <= kGreedyLimit) {
    lower = greedy_lower_bound(build_disjointness_graph(f));
  } else {
    for (Vertex v = 0; v < f.universe_size(); ++v)
      lower = std::max(lower, star_of(f, v).size());
  }
  throw ResourceLimitError("family has " + std::to_string(f.size()) +
                               " members; the cap is " +
                               std::to_string(options.member_cap),
                           f.size(), lower);
}

}  // namespace

MaxFamilyResult max_intersecting(const SetFamily& f,
                                 const SolverOptions& options) {
  enforce_cap(f, options);
  const DisjointnessGraph d = build_disjointness_graph(f);
  const mis::SearchResult found =
      mis::maximum_independent_set(d.adjacency, search_options(options));
  MaxFamilyResult out;
  out.size = found.vertices.size();
  out.witness = pick(f, found.vertices);
  out.stats = found.stats;
  out.family_size = f.size();
  return out;
}

MaxFamilyResult max_intersecting(const Graph& g, std::size_t r,
                                 const SolverOptions& options) {
  if (r == 0)
    throw Error(ErrorKind::Precondition, "max_intersecting needs r >= 1");
  return max_intersecting(enumerate_independent(g, r), options);
}

AllMaximumResult all_maximum_intersecting(const SetFamily& f, std::size_t cap,
                                          const SolverOptions& options) {
  enforce_cap(f, options);
  const DisjointnessGraph d = build_disjointness_graph(f);
  const mis::EnumerationResult found = mis::all_maximum_independent_sets(
      d.adjacency, cap, search_options(options));
  AllMaximumResult out;
  out.size = found.maximum;
  out.cap_hit = found.cap_hit;
  out.stats = found.stats;
  for (const auto& s : found.sets) out.families.push_back(pick(f, s));
  return out;
}

AllMaximumResult all_maximum_intersecting(const Graph& g, std::size_t r,
                                          std::size_t cap,
                                          const SolverOptions& options) {
  if (r == 0)
    throw Error(ErrorKind::Precondition, "all_maximum_intersecting needs r >= 1");
  return all_maximum_intersecting(enumerate_independent(g, r), cap, options);
}

}  // namespace ekr
