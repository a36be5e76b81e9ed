#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ekr/graph.hpp"
#include "ekr/vertex_set.hpp"

namespace ekr {

// Canonically ordered collection of distinct vertex sets of one cardinality.
class SetFamily {
 public:
  SetFamily(std::size_t universe_size, std::size_t r)
      : universe_size_(universe_size), r_(r) {}

  // Sorts and deduplicates; throws unless every member has cardinality r and
  // lies inside the universe.
  SetFamily(std::size_t universe_size, std::size_t r,
            std::vector<VertexSet> members);

  std::size_t universe_size() const noexcept { return universe_size_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const std::vector<VertexSet>& members() const noexcept { return members_; }
  const VertexSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const VertexSet& s) const;
  // Vertices common to all members (empty for the empty family).
  VertexSet common_vertices() const;
  bool is_star() const { return !empty() && !common_vertices().empty(); }

  bool operator==(const SetFamily&) const = default;

 private:
  std::size_t universe_size_ = 0;
  std::size_t r_ = 0;
  std::vector<VertexSet> members_;
};

// Partition of a family by its base-vertex content.
struct BasePartition {
  SetFamily a0;           // members with no base vertex
  SetFamily a1;           // members with exactly one base vertex
  SetFamily a1_reduced;   // a1 with the base vertex removed, deduplicated
  std::size_t a1_reduced_raw = 0;  // size before deduplication
};

SetFamily enumerate_independent(const Graph& g, std::size_t r);
SetFamily star(const Graph& g, std::size_t r, Vertex v);
// Members of `f` containing v.
SetFamily star_of(const SetFamily& f, Vertex v);

struct IntersectionCheck {
  bool intersecting = true;
  std::optional<std::pair<VertexSet, VertexSet>> disjoint_pair;

  explicit operator bool() const noexcept { return intersecting; }
};

IntersectionCheck is_intersecting(const SetFamily& f);

// All s-subsets of members. The 0-shadow of a nonempty family is {{}}.
SetFamily shadow(const SetFamily& f, std::size_t s);

std::size_t min_pairwise_intersection(const SetFamily& f);

// S_i: replaces base v_i by its unique pendant when the image is absent.
SetFamily shift_base_pendant(const SetFamily& f, const Graph& g,
                             std::uint32_t i);
// T: replaces clique member u by its sibling w when the image is absent.
SetFamily shift_local(const SetFamily& f, Vertex u, Vertex w, const Graph& g);

struct BasePendantShift {
  std::uint32_t base;  // 1-based
};
struct LocalShift {
  Vertex from;
  Vertex to;
};
using ShiftDescriptor = std::variant<BasePendantShift, LocalShift>;

struct StabilizeResult {
  SetFamily family;
  std::size_t passes = 0;  // includes the final pass that changed nothing
};

StabilizeResult stabilize(const SetFamily& f,
                          std::span<const ShiftDescriptor> shifts,
                          const Graph& g);
// S_1..S_n for a pendant graph with every s_i = 1.
std::vector<ShiftDescriptor> base_pendant_shifts(const Graph& g);

BasePartition partition_by_base(const SetFamily& f, const Graph& g);

SetFamily complement_in(const SetFamily& f, const VertexSet& ground);

}  // namespace ekr
