#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rsub {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates
using ColorSet = std::vector<Color>;    // sorted, no duplicates
using Edge = std::pair<Vertex, Vertex>;  // first < second

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Throws InputError on self-loops, duplicate edges or ids >= n.
  SimpleGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  // Index of edge {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  // d(G) = 2e/v; 0 for the empty vertex set.
  double average_degree() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  bool operator==(const SimpleGraph& o) const { return edges_ == o.edges_ && adj_.size() == o.adj_.size(); }

 private:
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

struct ColoredNeighbor {
  Vertex vertex;
  Color color;
};

// Simple graph with an edge coloring; colors are ids 0..num_colors-1.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  // colors[i] is the color of the i-th input edge. Throws InputError if the
  // coloring is not proper unless require_proper is false.
  ColoredGraph(std::size_t n, const std::vector<Edge>& edges, const std::vector<Color>& colors,
               bool require_proper = true);
  // Unique color per edge (the trivially rainbow coloring).
  static ColoredGraph rainbow(const SimpleGraph& g);

  const SimpleGraph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t num_edges() const { return graph_.num_edges(); }
  std::size_t num_colors() const { return num_colors_; }
  // Color of graph().edges()[i].
  Color color(std::size_t edge_index) const { return colors_.at(edge_index); }
  const std::vector<Color>& colors() const { return colors_; }
  std::optional<Color> color_of(Vertex u, Vertex v) const;
  // Neighbors of v in increasing id order, each with the connecting color.
  const std::vector<ColoredNeighbor>& colored_neighbors(Vertex v) const { return cadj_.at(v); }

 private:
  SimpleGraph graph_;
  std::vector<Color> colors_;
  std::size_t num_colors_ = 0;
  std::vector<std::vector<ColoredNeighbor>> cadj_;
};

// Per-vertex forbidden vertices and colors.
class ForbiddenMap {
 public:
  ForbiddenMap() = default;
  explicit ForbiddenMap(std::size_t n) : vertices_(n), colors_(n) {}

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  void forbid_vertex(Vertex v, Vertex y);
  void forbid_color(Vertex v, Color c);
  bool forbids_vertex(Vertex v, Vertex y) const;
  bool forbids_color(Vertex v, Color c) const;
  const VertexSet& forbidden_vertices(Vertex v) const { return vertices_.at(v); }
  const ColorSet& forbidden_colors(Vertex v) const { return colors_.at(v); }
  // |phi(v)| counting vertices and colors together.
  std::size_t entry_count(Vertex v) const;
  // Throws InputError if any entry references a vertex >= n or color >= k.
  void validate(std::size_t n, std::size_t k) const;

 private:
  std::vector<VertexSet> vertices_;
  std::vector<ColorSet> colors_;
};

struct InducedSubgraph {
  SimpleGraph graph;
  VertexSet to_original;  // new id i corresponds to original vertex to_original[i]
};

struct InducedColoredSubgraph {
  ColoredGraph graph;
  VertexSet to_original;
};

// N(X) = { y not in X : xy in E for some x in X }.
VertexSet neighborhood(const SimpleGraph& g, const VertexSet& x);

// N_{Q,phi}(X) = { y not in X : exists x in X, xy in E, y not in phi(x),
//                  f(xy) in Q and f(xy) not in phi(x) }. An empty map means phi = 0.
VertexSet restricted_neighborhood(const ColoredGraph& g, const VertexSet& x, const ColorSet& q,
                                  const ForbiddenMap& phi);

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);
InducedColoredSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s);

// Number of edges with one endpoint in a and the other in b (a, b disjoint).
std::size_t edges_between(const SimpleGraph& g, const VertexSet& a, const VertexSet& b);

bool check_proper_coloring(std::size_t n, const std::vector<Edge>& edges, const std::vector<Color>& colors);
bool check_proper_coloring(const ColoredGraph& g);

// Sorts and deduplicates; throws InputError for ids >= n.
VertexSet make_vertex_set(std::vector<Vertex> v, std::size_t n);

}  // namespace rsub
