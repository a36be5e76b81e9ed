#include "ekr/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "ekr/error.hpp"
#include "ekr/mis.hpp"

namespace ekr {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyGraph: return "empty-graph";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::UniverseTooLarge: return "universe-too-large";
    case ErrorKind::InvalidShift: return "invalid-shift";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::InvalidGround: return "invalid-ground";
    case ErrorKind::UndefinedStatistic: return "undefined-statistic";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

namespace {

void check_universe(std::size_t n) {
  if (n > kMaxVertices)
    throw Error(ErrorKind::UniverseTooLarge,
                "graph has " + std::to_string(n) + " vertices; the cap is " +
                    std::to_string(kMaxVertices));
}

std::vector<VertexRole> base_roles(std::size_t n) {
  std::vector<VertexRole> roles;
  roles.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    roles.push_back(VertexRole::make_base(static_cast<std::uint32_t>(i + 1)));
  return roles;
}

std::string join(const std::vector<std::uint32_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count,
                        const std::vector<Edge>& edges, std::string name,
                        std::vector<VertexRole> roles) {
  check_universe(vertex_count);
  if (roles.empty()) roles = base_roles(vertex_count);
  if (roles.size() != vertex_count)
    throw Error(ErrorKind::InvalidParameter,
                "role count does not match vertex count");
  Graph g;
  g.adjacency_.assign(vertex_count, VertexSet{});
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw Error(ErrorKind::InvalidParameter, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidParameter, "self-loop");
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
  }
  g.roles_ = std::move(roles);
  g.name_ = std::move(name);

  // Recover the clique-size vector from the roles. Graphs without pendant
  // roles report every vertex as a bare base.
  std::uint32_t bases = 0;
  for (const auto& r : g.roles_)
    if (r.is_base()) ++bases;
  g.clique_sizes_.assign(bases, 0);
  for (const auto& r : g.roles_) {
    if (r.base < 1 || r.base > bases)
      throw Error(ErrorKind::InvalidParameter, "role base index out of range");
    if (r.is_pendant())
      g.clique_sizes_[r.base - 1] =
          std::max(g.clique_sizes_[r.base - 1], r.position);
  }
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

VertexSet Graph::all_vertices() const {
  VertexSet s;
  for (Vertex v = 0; v < vertex_count(); ++v) s.insert(v);
  return s;
}

VertexSet Graph::base_vertices() const {
  VertexSet s;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (roles_[v].is_base()) s.insert(v);
  return s;
}

bool Graph::is_independent(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (v >= vertex_count() || adjacency_[v].intersects(s)) ok = false;
  });
  return ok;
}

Vertex Graph::base_vertex(std::uint32_t i) const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (roles_[v] == VertexRole::make_base(i)) return v;
  throw Error(ErrorKind::InvalidParameter,
              "no base vertex v_" + std::to_string(i));
}

Vertex Graph::pendant_vertex(std::uint32_t i, std::uint32_t t) const {
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (roles_[v] == VertexRole::make_pendant(i, t)) return v;
  throw Error(ErrorKind::InvalidParameter,
              "no clique vertex v^" + std::to_string(i) + "_" +
                  std::to_string(t));
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(vertex_count(), false);
  std::size_t comps = 0;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      adjacency_[v].for_each([&](Vertex u) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      });
    }
  }
  return comps;
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph make_complete(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph make_path(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

Graph make_cycle(std::uint32_t n) {
  if (n < 3)
    throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

Graph make_disjoint_cliques(std::uint32_t n, std::uint32_t m) {
  if (n == 0 || m == 0)
    throw Error(ErrorKind::InvalidParameter,
                "disjoint cliques need n >= 1 and m >= 1");
  check_universe(std::size_t{n} * m);
  std::vector<Edge> edges;
  for (Vertex c = 0; c < n; ++c)
    for (Vertex a = 0; a < m; ++a)
      for (Vertex b = a + 1; b < m; ++b)
        edges.emplace_back(c * m + a, c * m + b);
  return Graph::from_edges(std::size_t{n} * m, edges,
                           std::to_string(n) + "K" + std::to_string(m));
}

Graph make_power(const Graph& g, std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidParameter, "power needs k >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::uint32_t> dist(n, UINT32_MAX);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      if (dist[v] == k) continue;
      g.neighbors(v).for_each([&](Vertex u) {
        if (dist[u] == UINT32_MAX) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      });
    }
    for (Vertex t = s + 1; t < n; ++t)
      if (dist[t] != UINT32_MAX && dist[t] > 0) edges.emplace_back(s, t);
  }
  Graph out = Graph::from_edges(n, edges, g.name() + "^" + std::to_string(k),
                                g.roles());
  return out;
}

Graph attach_pendants(const Graph& g, const std::vector<std::uint32_t>& s) {
  const std::size_t n = g.vertex_count();
  if (s.size() != n)
    throw Error(ErrorKind::InvalidParameter,
                "clique-size sequence has length " + std::to_string(s.size()) +
                    " but the base graph has " + std::to_string(n) +
                    " vertices");
  if (std::any_of(s.begin(), s.end(), [](auto x) { return x == 0; }))
    throw Error(ErrorKind::InvalidParameter, "clique sizes must be >= 1");
  const std::size_t total =
      n + std::accumulate(s.begin(), s.end(), std::size_t{0});
  check_universe(total);

  std::vector<Edge> edges = g.edges();
  std::vector<VertexRole> roles = base_roles(n);
  Vertex next = static_cast<Vertex>(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Vertex first = next;
    for (std::uint32_t t = 1; t <= s[i]; ++t) {
      roles.push_back(VertexRole::make_pendant(i + 1, t));
      edges.emplace_back(i, next);
      for (Vertex w = first; w < next; ++w) edges.emplace_back(w, next);
      ++next;
    }
  }

  std::string name = g.name();
  const bool uniform = std::all_of(s.begin(), s.end(),
                                   [&](auto x) { return x == s.front(); });
  if (uniform && !s.empty() && s.front() == 1) {
    name += "*";
  } else if (uniform && !s.empty()) {
    name += "^" + std::to_string(s.front());
  } else {
    name += "^(" + join(s) + ")";
  }
  return Graph::from_edges(total, edges, std::move(name), std::move(roles));
}

std::size_t independence_number(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<mis::Bitset> rows(n, mis::Bitset(n));
  for (Vertex v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](Vertex u) { rows[v].set(u); });
  return mis::maximum_independent_set(rows).vertices.size();
}

Graph build_base(const BaseKind& base) {
  return std::visit(
      [](const auto& k) -> Graph {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, BaseKind::Complete>) {
          return make_complete(k.n);
        } else if constexpr (std::is_same_v<T, BaseKind::Path>) {
          return make_path(k.n);
        } else if constexpr (std::is_same_v<T, BaseKind::Cycle>) {
          return make_cycle(k.n);
        } else if constexpr (std::is_same_v<T, BaseKind::DisjointCliques>) {
          return make_disjoint_cliques(k.n, k.m);
        } else if constexpr (std::is_same_v<T, BaseKind::Power>) {
          if (!k.base)
            throw Error(ErrorKind::InvalidParameter, "power without a base");
          return make_power(build_base(*k.base), k.k);
        } else {
          if (k.vertex_count == 0)
            throw Error(ErrorKind::EmptyGraph, "explicit graph has no vertices");
          return Graph::from_edges(k.vertex_count, k.edges, "G");
        }
      },
      base.kind);
}

Graph build(const PendantSpec& spec) {
  Graph g = build_base(spec.base);
  if (spec.s.empty()) return g;
  return attach_pendants(g, spec.s);
}

void write_dimacs(std::ostream& os, const Graph& g) {
  os << "c " << g.name() << "\n";
  os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& r = g.role(v);
    os << "c role " << v + 1;
    if (r.is_base())
      os << " base " << r.base << "\n";
    else
      os << " pendant " << r.base << " " << r.position << "\n";
  }
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs(std::istream& is, std::string name) {
  std::size_t n = 0;
  bool have_header = false;
  bool named = false;
  std::vector<Edge> edges;
  std::vector<VertexRole> roles;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::Parse,
                "DIMACS line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "p") {
      std::string fmt;
      std::size_t m = 0;
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        fail("malformed problem line");
      check_universe(n);
      have_header = true;
      roles = base_roles(n);
    } else if (tag == "e") {
      if (!have_header) fail("edge before problem line");
      std::size_t u = 0, v = 0;
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        fail("bad edge");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else if (tag == "c") {
      std::string kw;
      if (!(ls >> kw)) continue;
      if (kw != "role") {
        if (!have_header && !named) {
          name = line.substr(line.find(kw));
          named = true;
        }
        continue;
      }
      if (!have_header) fail("role before problem line");
      std::size_t v = 0;
      std::string kind;
      std::uint32_t i = 0, t = 0;
      if (!(ls >> v >> kind >> i) || v < 1 || v > n) fail("bad role line");
      if (kind == "base") {
        roles[v - 1] = VertexRole::make_base(i);
      } else if (kind == "pendant") {
        if (!(ls >> t) || t < 1) fail("bad pendant position");
        roles[v - 1] = VertexRole::make_pendant(i, t);
      } else {
        fail("unknown role '" + kind + "'");
      }
    }
  }
  if (!have_header) throw Error(ErrorKind::Parse, "missing 'p edge' line");
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "DIMACS graph has no vertices");
  return Graph::from_edges(n, edges, std::move(name), std::move(roles));
}

}  // namespace ekr
