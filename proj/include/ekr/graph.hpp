#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ekr/vertex_set.hpp"

namespace ekr {

// Base(i) or Pendant(i, t); both indices are 1-based as in the usual
// notation v_i and v^i_t.
struct VertexRole {
  enum class Kind { Base, Pendant };

  Kind kind = Kind::Base;
  std::uint32_t base = 1;
  std::uint32_t position = 0;  // 0 for base vertices

  static VertexRole make_base(std::uint32_t i) { return {Kind::Base, i, 0}; }
  static VertexRole make_pendant(std::uint32_t i, std::uint32_t t) {
    return {Kind::Pendant, i, t};
  }
  bool is_base() const noexcept { return kind == Kind::Base; }
  bool is_pendant() const noexcept { return kind == Kind::Pendant; }

  bool operator==(const VertexRole&) const = default;
};

using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph on at most kMaxVertices vertices. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates symmetry and irreflexivity of the edge list.
  static Graph from_edges(std::size_t vertex_count,
                          const std::vector<Edge>& edges, std::string name,
                          std::vector<VertexRole> roles = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  const std::string& name() const noexcept { return name_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_.at(u).contains(v);
  }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  const VertexRole& role(Vertex v) const { return roles_.at(v); }
  const std::vector<VertexRole>& roles() const noexcept { return roles_; }

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const;
  VertexSet base_vertices() const;
  bool is_independent(const VertexSet& s) const;

  // Number of base vertices, and clique sizes per base (zeros when the graph
  // carries no pendant cliques).
  std::size_t base_count() const noexcept { return clique_sizes_.size(); }
  const std::vector<std::uint32_t>& clique_sizes() const noexcept {
    return clique_sizes_;
  }
  // Vertex index of base v_i / clique member v^i_t (both 1-based).
  Vertex base_vertex(std::uint32_t i) const;
  Vertex pendant_vertex(std::uint32_t i, std::uint32_t t) const;

  std::size_t component_count() const;

  Graph renamed(std::string name) const;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<VertexRole> roles_;
  std::vector<std::uint32_t> clique_sizes_;
  std::string name_;
};

Graph make_complete(std::uint32_t n);
Graph make_path(std::uint32_t n);
Graph make_cycle(std::uint32_t n);
Graph make_disjoint_cliques(std::uint32_t n, std::uint32_t m);
Graph make_power(const Graph& g, std::uint32_t k);
Graph attach_pendants(const Graph& g, const std::vector<std::uint32_t>& s);

// Exact alpha(g) by branch-and-bound.
std::size_t independence_number(const Graph& g);

// Descriptor for the base graph of a pendant construction.
struct BaseKind {
  struct Complete { std::uint32_t n; };
  struct Path { std::uint32_t n; };
  struct Cycle { std::uint32_t n; };
  struct DisjointCliques { std::uint32_t n, m; };
  struct Power {
    std::shared_ptr<const BaseKind> base;
    std::uint32_t k;
  };
  struct Explicit {
    std::size_t vertex_count;
    std::vector<Edge> edges;
  };

  std::variant<Complete, Path, Cycle, DisjointCliques, Power, Explicit> kind;
};

Graph build_base(const BaseKind& base);

// Base descriptor plus clique sizes. An empty `s` means "no pendants";
// zero entries are allowed only as internal recursion states.
struct PendantSpec {
  BaseKind base;
  std::vector<std::uint32_t> s;
};

Graph build(const PendantSpec& spec);

// DIMACS edge format with role comments, 1-based indices.
void write_dimacs(std::ostream& os, const Graph& g);
Graph read_dimacs(std::istream& is, std::string name = "dimacs");

}  // namespace ekr
