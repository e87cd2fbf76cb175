#pragma once

#include "rsub/graph.hpp"
#include "rsub/rng.hpp"

namespace rsub {

SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);  // parts 0..a-1 and a..a+b-1
SimpleGraph petersen_graph();  // outer cycle 0..4, inner pentagram 5..9
SimpleGraph random_gnp(std::size_t n, double p, Rng& rng);
// Disjoint union; vertices of b are shifted by a.num_vertices().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Proper coloring of K_{m,m} with m colors: edge (i, m+j) gets (i+j) mod m.
ColoredGraph latin_colored_bipartite(std::size_t m);
// Greedy proper coloring (smallest free color per edge, edges in sorted order).
ColoredGraph greedy_proper_coloring(const SimpleGraph& g);

}  // namespace rsub
