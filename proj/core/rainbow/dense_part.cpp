#include "dense_part.hpp"

#include <cmath>

#include "rsub/density.hpp"

namespace rsub::detail {

InducedColoredSubgraph dense_part(const ColoredGraph& g, bool enabled) {
  const std::size_t n = g.num_vertices();
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  if (!enabled || n < 3 || g.num_edges() == 0) return {g, all};
  const double alpha = 1.0 / std::log2(static_cast<double>(n));
  auto r = n <= 20 ? alpha_max_subgraph_exact(g.graph(), alpha) : alpha_max_subgraph_peel(g.graph(), alpha);
  if (r.vertices.size() < 2) return {g, all};
  return induced_subgraph(g, r.vertices);
}

}  // namespace rsub::detail
