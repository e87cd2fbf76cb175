#include "rsub/graph.hpp"

#include <algorithm>
#include <string>

#include "rsub/errors.hpp"

namespace rsub {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

void check_id(Vertex v, std::size_t n) {
  if (v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
}

template <class T>
void insert_sorted(std::vector<T>& v, T x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

template <class T>
bool contains_sorted(const std::vector<T>& v, T x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges) : adj_(n) {
  for (auto& e : edges) {
    check_id(e.first, n);
    check_id(e.second, n);
    if (e.first == e.second) throw InputError("self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) throw InputError("duplicate edge " + edge_str(edges[i].first, edges[i].second));
  }
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  return contains_sorted(adj_[u], v);
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

double SimpleGraph::average_degree() const {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(adj_.size());
}

std::size_t SimpleGraph::min_degree() const {
  std::size_t best = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return best;
}

std::size_t SimpleGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

ColoredGraph::ColoredGraph(std::size_t n, const std::vector<Edge>& edges, const std::vector<Color>& colors,
                           bool require_proper) {
  if (edges.size() != colors.size()) throw InputError("edge and color counts differ");
  std::vector<std::pair<Edge, Color>> tagged;
  tagged.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge e = edges[i];
    if (e.first > e.second) std::swap(e.first, e.second);
    tagged.push_back({e, colors[i]});
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<Edge> sorted_edges;
  sorted_edges.reserve(tagged.size());
  for (const auto& t : tagged) sorted_edges.push_back(t.first);
  graph_ = SimpleGraph(n, std::move(sorted_edges));
  colors_.reserve(tagged.size());
  for (const auto& t : tagged) {
    colors_.push_back(t.second);
    num_colors_ = std::max<std::size_t>(num_colors_, static_cast<std::size_t>(t.second) + 1);
  }
  if (require_proper && !check_proper_coloring(n, graph_.edges(), colors_)) {
    throw InputError("edge coloring is not proper");
  }
  cadj_.assign(n, {});
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    const auto& [u, v] = graph_.edges()[i];
    cadj_[u].push_back({v, colors_[i]});
    cadj_[v].push_back({u, colors_[i]});
  }
  for (auto& a : cadj_) {
    std::sort(a.begin(), a.end(), [](const ColoredNeighbor& x, const ColoredNeighbor& y) { return x.vertex < y.vertex; });
  }
}

ColoredGraph ColoredGraph::rainbow(const SimpleGraph& g) {
  std::vector<Color> colors(g.num_edges());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i);
  return ColoredGraph(g.num_vertices(), g.edges(), colors);
}

std::optional<Color> ColoredGraph::color_of(Vertex u, Vertex v) const {
  auto idx = graph_.edge_index(u, v);
  if (!idx) return std::nullopt;
  return colors_[*idx];
}

void ForbiddenMap::forbid_vertex(Vertex v, Vertex y) { insert_sorted(vertices_.at(v), y); }

void ForbiddenMap::forbid_color(Vertex v, Color c) { insert_sorted(colors_.at(v), c); }

bool ForbiddenMap::forbids_vertex(Vertex v, Vertex y) const {
  return v < vertices_.size() && contains_sorted(vertices_[v], y);
}

bool ForbiddenMap::forbids_color(Vertex v, Color c) const {
  return v < colors_.size() && contains_sorted(colors_[v], c);
}

std::size_t ForbiddenMap::entry_count(Vertex v) const { return vertices_.at(v).size() + colors_.at(v).size(); }

void ForbiddenMap::validate(std::size_t n, std::size_t k) const {
  if (vertices_.size() > n) throw InputError("forbidden map has more entries than vertices");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].empty() && vertices_[v].back() >= n) throw InputError("forbidden vertex id out of range");
    if (!colors_[v].empty() && colors_[v].back() >= k) throw InputError("forbidden color id out of range");
  }
}

VertexSet make_vertex_set(std::vector<Vertex> v, std::size_t n) {
  for (Vertex x : v) check_id(x, n);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet neighborhood(const SimpleGraph& g, const VertexSet& x) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_x(n, 0), out(n, 0);
  for (Vertex v : x) {
    check_id(v, n);
    in_x[v] = 1;
  }
  for (Vertex v : x) {
    for (Vertex y : g.neighbors(v)) {
      if (!in_x[y]) out[y] = 1;
    }
  }
  VertexSet result;
  for (Vertex y = 0; y < n; ++y) {
    if (out[y]) result.push_back(y);
  }
  return result;
}

VertexSet restricted_neighborhood(const ColoredGraph& g, const VertexSet& x, const ColorSet& q,
                                  const ForbiddenMap& phi) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_x(n, 0), out(n, 0);
  std::vector<char> allowed(g.num_colors(), 0);
  for (Color c : q) {
    if (c < allowed.size()) allowed[c] = 1;
  }
  for (Vertex v : x) {
    check_id(v, n);
    in_x[v] = 1;
  }
  for (Vertex v : x) {
    for (const auto& [y, c] : g.colored_neighbors(v)) {
      if (in_x[y] || !allowed[c]) continue;
      if (phi.forbids_vertex(v, y) || phi.forbids_color(v, c)) continue;
      out[y] = 1;
    }
  }
  VertexSet result;
  for (Vertex y = 0; y < n; ++y) {
    if (out[y]) result.push_back(y);
  }
  return result;
}

namespace {

std::pair<std::vector<Edge>, std::vector<std::size_t>> induced_edges(const SimpleGraph& g, const VertexSet& s,
                                                                     std::vector<Vertex>& index) {
  const std::size_t n = g.num_vertices();
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  index.assign(n, kAbsent);
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_id(s[i], n);
    if (i > 0 && s[i] <= s[i - 1]) throw InputError("vertex set must be sorted and duplicate-free");
    index[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& [u, v] = g.edges()[i];
    if (index[u] != kAbsent && index[v] != kAbsent) {
      edges.push_back({index[u], index[v]});
      source.push_back(i);
    }
  }
  return {edges, source};
}

}  // namespace

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  std::vector<Vertex> index;
  auto [edges, source] = induced_edges(g, s, index);
  return {SimpleGraph(s.size(), std::move(edges)), s};
}

InducedColoredSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s) {
  std::vector<Vertex> index;
  auto [edges, source] = induced_edges(g.graph(), s, index);
  std::vector<Color> colors;
  colors.reserve(source.size());
  for (std::size_t i : source) colors.push_back(g.color(i));
  return {ColoredGraph(s.size(), edges, colors, false), s};
}

std::size_t edges_between(const SimpleGraph& g, const VertexSet& a, const VertexSet& b) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_b(n, 0);
  for (Vertex v : b) {
    check_id(v, n);
    in_b[v] = 1;
  }
  std::size_t count = 0;
  for (Vertex v : a) {
    check_id(v, n);
    for (Vertex y : g.neighbors(v)) count += in_b[y];
  }
  return count;
}

bool check_proper_coloring(std::size_t n, const std::vector<Edge>& edges, const std::vector<Color>& colors) {
  if (edges.size() != colors.size()) return false;
  std::vector<std::vector<Color>> seen(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    seen.at(edges[i].first).push_back(colors[i]);
    seen.at(edges[i].second).push_back(colors[i]);
  }
  for (auto& s : seen) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return true;
}

bool check_proper_coloring(const ColoredGraph& g) {
  return check_proper_coloring(g.num_vertices(), g.graph().edges(), g.colors());
}

}  // namespace rsub
