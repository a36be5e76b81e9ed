#include "ekr/set_family.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <unordered_set>

#include "ekr/error.hpp"

namespace ekr {

SetFamily::SetFamily(std::size_t universe_size, std::size_t r,
                     std::vector<VertexSet> members)
    : universe_size_(universe_size), r_(r), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.size() != r_)
      throw Error(ErrorKind::InvalidParameter,
                  "family member of size " + std::to_string(m.size()) +
                      " in a family of " + std::to_string(r_) + "-sets");
    if (!m.empty() && m.next_from(static_cast<Vertex>(universe_size_)) !=
                          kMaxVertices)
      throw Error(ErrorKind::InvalidParameter,
                  "family member outside the universe");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(const VertexSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

VertexSet SetFamily::common_vertices() const {
  if (members_.empty()) return {};
  VertexSet common = members_.front();
  for (const auto& m : members_) common = common & m;
  return common;
}

namespace {

void collect(const Graph& g, std::size_t r, VertexSet available,
             VertexSet& current, std::vector<VertexSet>& out) {
  if (current.size() == r) {
    out.push_back(current);
    return;
  }
  while (current.size() + available.size() >= r && !available.empty()) {
    const Vertex v = available.first();
    available.erase(v);
    current.insert(v);
    collect(g, r, available - g.neighbors(v), current, out);
    current.erase(v);
  }
}

}  // namespace

SetFamily enumerate_independent(const Graph& g, std::size_t r) {
  std::vector<VertexSet> out;
  if (r <= g.vertex_count()) {
    VertexSet current;
    collect(g, r, g.all_vertices(), current, out);
  }
  return SetFamily(g.vertex_count(), r, std::move(out));
}

SetFamily star_of(const SetFamily& f, Vertex v) {
  std::vector<VertexSet> out;
  for (const auto& m : f)
    if (m.contains(v)) out.push_back(m);
  return SetFamily(f.universe_size(), f.r(), std::move(out));
}

SetFamily star(const Graph& g, std::size_t r, Vertex v) {
  if (v >= g.vertex_count())
    throw Error(ErrorKind::InvalidParameter, "star center out of range");
  std::vector<VertexSet> out;
  if (r >= 1 && r <= g.vertex_count()) {
    VertexSet current{v};
    VertexSet available = g.all_vertices() - g.neighbors(v);
    available.erase(v);
    collect(g, r, available, current, out);
  }
  return SetFamily(g.vertex_count(), r, std::move(out));
}

IntersectionCheck is_intersecting(const SetFamily& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].intersects(ms[j])) return {false, std::pair{ms[i], ms[j]}};
  return {true, std::nullopt};
}

SetFamily shadow(const SetFamily& f, std::size_t s) {
  if (s > f.r())
    throw Error(ErrorKind::Precondition,
                "shadow level exceeds the member cardinality");
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> out;
  for (const auto& m : f) {
    const std::vector<Vertex> elems = m.to_vector();
    // Walk all s-combinations of the member's elements.
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      VertexSet sub;
      for (auto i : idx) sub.insert(elems[i]);
      if (seen.insert(sub).second) out.push_back(sub);
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == elems.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return SetFamily(f.universe_size(), s, std::move(out));
}

std::size_t min_pairwise_intersection(const SetFamily& f) {
  if (f.size() < 2)
    throw Error(ErrorKind::UndefinedStatistic,
                "minimum pairwise intersection needs at least two members");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      best = std::min(best, ms[i].intersection_size(ms[j]));
  return best;
}

namespace {

// Simultaneous replacement of `from` by `to` in every member whose image is
// not already a member of the input family.
SetFamily apply_shift(const SetFamily& f, Vertex from, Vertex to) {
  std::vector<VertexSet> out;
  out.reserve(f.size());
  for (const auto& m : f) {
    if (!m.contains(from)) {
      out.push_back(m);
      continue;
    }
    VertexSet image = m;
    image.erase(from);
    image.insert(to);
    out.push_back(f.contains(image) ? m : image);
  }
  return SetFamily(f.universe_size(), f.r(), std::move(out));
}

std::pair<Vertex, Vertex> resolve_base_pendant(const Graph& g,
                                               std::uint32_t i) {
  if (i < 1 || i > g.base_count())
    throw Error(ErrorKind::InvalidShift,
                "S_" + std::to_string(i) + ": no such base vertex");
  if (g.clique_sizes()[i - 1] != 1)
    throw Error(ErrorKind::InvalidShift,
                "S_" + std::to_string(i) +
                    " needs a single pendant at the base vertex");
  return {g.base_vertex(i), g.pendant_vertex(i, 1)};
}

void check_local(const Graph& g, Vertex u, Vertex w) {
  if (u >= g.vertex_count() || w >= g.vertex_count() || u == w)
    throw Error(ErrorKind::InvalidShift, "local shift needs two distinct vertices");
  const auto& ru = g.role(u);
  const auto& rw = g.role(w);
  if (!ru.is_pendant() || !rw.is_pendant() || ru.base != rw.base)
    throw Error(ErrorKind::InvalidShift,
                "local shift endpoints must lie in the same pendant clique");
}

}  // namespace

SetFamily shift_base_pendant(const SetFamily& f, const Graph& g,
                             std::uint32_t i) {
  const auto [base, pendant] = resolve_base_pendant(g, i);
  return apply_shift(f, base, pendant);
}

SetFamily shift_local(const SetFamily& f, Vertex u, Vertex w, const Graph& g) {
  check_local(g, u, w);
  return apply_shift(f, u, w);
}

std::vector<ShiftDescriptor> base_pendant_shifts(const Graph& g) {
  std::vector<ShiftDescriptor> out;
  for (std::uint32_t i = 1; i <= g.base_count(); ++i)
    out.push_back(BasePendantShift{i});
  return out;
}

StabilizeResult stabilize(const SetFamily& f,
                          std::span<const ShiftDescriptor> shifts,
                          const Graph& g) {
  // Resolve every descriptor to a (from, to) move up front.
  std::vector<std::pair<Vertex, Vertex>> moves;
  for (const auto& d : shifts) {
    if (const auto* bp = std::get_if<BasePendantShift>(&d)) {
      moves.push_back(resolve_base_pendant(g, bp->base));
    } else {
      const auto& ls = std::get<LocalShift>(d);
      check_local(g, ls.from, ls.to);
      moves.emplace_back(ls.from, ls.to);
    }
  }
  // A cycle among the moves could shuttle a vertex back and forth forever.
  std::map<Vertex, std::vector<Vertex>> out_edges;
  for (auto [a, b] : moves) out_edges[a].push_back(b);
  std::map<Vertex, int> state;
  std::function<bool(Vertex)> cyclic = [&](Vertex v) {
    state[v] = 1;
    for (Vertex w : out_edges[v]) {
      if (state[w] == 1 || (state[w] == 0 && cyclic(w))) return true;
    }
    state[v] = 2;
    return false;
  };
  for (auto [a, b] : moves)
    if (state[a] == 0 && cyclic(a))
      throw Error(ErrorKind::InvalidShift, "shift sequence contains a cycle");

  StabilizeResult result{f, 0};
  while (true) {
    ++result.passes;
    SetFamily before = result.family;
    for (auto [from, to] : moves) result.family = apply_shift(result.family, from, to);
    if (result.family == before) break;
  }
  return result;
}

BasePartition partition_by_base(const SetFamily& f, const Graph& g) {
  const VertexSet bases = g.base_vertices();
  std::vector<VertexSet> a0, a1, reduced;
  for (const auto& m : f) {
    const VertexSet hit = m & bases;
    if (hit.empty()) {
      a0.push_back(m);
    } else if (hit.size() == 1) {
      a1.push_back(m);
      reduced.push_back(m - hit);
    } else {
      throw Error(ErrorKind::NotApplicable,
                  "member with two or more base vertices; the base is not "
                  "complete");
    }
  }
  const std::size_t raw = reduced.size();
  const std::size_t lower = f.r() == 0 ? 0 : f.r() - 1;
  return BasePartition{SetFamily(f.universe_size(), f.r(), std::move(a0)),
                       SetFamily(f.universe_size(), f.r(), std::move(a1)),
                       SetFamily(f.universe_size(), lower, std::move(reduced)),
                       raw};
}

SetFamily complement_in(const SetFamily& f, const VertexSet& ground) {
  if (f.r() > ground.size())
    throw Error(ErrorKind::InvalidGround, "ground set smaller than members");
  std::vector<VertexSet> out;
  out.reserve(f.size());
  for (const auto& m : f) {
    if (!m.is_subset_of(ground))
      throw Error(ErrorKind::InvalidGround, "member not contained in ground");
    out.push_back(ground - m);
  }
  return SetFamily(f.universe_size(), ground.size() - f.r(), std::move(out));
}

}  // namespace ekr
