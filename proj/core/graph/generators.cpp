#include "rsub/generators.hpp"

#include <algorithm>

namespace rsub {

SimpleGraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return SimpleGraph(n, e);
}

SimpleGraph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return SimpleGraph(n, e);
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return SimpleGraph(n, e);
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.push_back({i, static_cast<Vertex>(a + j)});
  return SimpleGraph(a + b, e);
}

SimpleGraph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return SimpleGraph(10, e);
}

SimpleGraph random_gnp(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) e.push_back({i, j});
  return SimpleGraph(n, e);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<Edge> e = a.edges();
  const Vertex shift = static_cast<Vertex>(a.num_vertices());
  for (const auto& [u, v] : b.edges()) e.push_back({u + shift, v + shift});
  return SimpleGraph(a.num_vertices() + b.num_vertices(), e);
}

ColoredGraph latin_colored_bipartite(std::size_t m) {
  std::vector<Edge> e;
  std::vector<Color> c;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < m; ++j) {
      e.push_back({i, static_cast<Vertex>(m + j)});
      c.push_back(static_cast<Color>((i + j) % m));
    }
  }
  return ColoredGraph(2 * m, e, c);
}

ColoredGraph greedy_proper_coloring(const SimpleGraph& g) {
  std::vector<std::vector<Color>> used(g.num_vertices());
  std::vector<Color> colors;
  for (const auto& [u, v] : g.edges()) {
    Color c = 0;
    auto taken = [&](Color x) {
      return std::find(used[u].begin(), used[u].end(), x) != used[u].end() ||
             std::find(used[v].begin(), used[v].end(), x) != used[v].end();
    };
    while (taken(c)) ++c;
    used[u].push_back(c);
    used[v].push_back(c);
    colors.push_back(c);
  }
  return ColoredGraph(g.num_vertices(), g.edges(), colors);
}

}  // namespace rsub
