#pragma once

#include <cstdint>
#include <optional>

#include "rsub/graph.hpp"

namespace rsub {

// score = e / v^{1+alpha}. With d = c * v^alpha the constant is c = 2 * score.
struct DensityScore {
  double alpha = 0.0;
  double score = 0.0;
  double c() const { return 2.0 * score; }
};

double density_score(std::size_t edges, std::size_t vertices, double alpha);

struct DensityResult {
  VertexSet vertices;
  DensityScore score;
};

inline constexpr std::size_t kExactVertexCap = 24;

// Nonempty vertex set maximizing e(G[S]) / |S|^{1+alpha}. Ties (relative
// tolerance 1e-12) go to the smallest |S|, then the lexicographically least
// set. Throws SizeError above `cap` vertices, InputError for alpha outside (0,1).
DensityResult alpha_max_subgraph_exact(const SimpleGraph& g, double alpha, std::size_t cap = kExactVertexCap);

// Heuristic: best min-degree peeling prefix plus greedy growth from edge
// seeds, each refined by single-vertex add/remove and swap moves until no
// move improves the score. Never exceeds the exact optimum.
DensityResult alpha_max_subgraph_peel(const SimpleGraph& g, double alpha);

struct MaximalityVerdict {
  bool maximal = true;
  VertexSet counterexample;  // best-scoring violating subset when !maximal
  double graph_score = 0.0;
  double best_score = 0.0;
  std::uint64_t subsets_checked = 0;
};

// Exact mode: all nonempty vertex subsets. Sampled mode: `samples` uniform
// random subsets plus every single-vertex deletion.
MaximalityVerdict verify_alpha_maximal_exact(const SimpleGraph& g, double alpha, std::size_t cap = kExactVertexCap);
MaximalityVerdict verify_alpha_maximal_sampled(const SimpleGraph& g, double alpha, std::size_t samples,
                                               std::uint64_t seed);

struct ExpansionReport {
  bool edge_bound_ok = false;
  bool vertex_bound_ok = false;
  double edge_slack = 0.0;    // e(X, N(X)) minus the edge lower bound
  double vertex_slack = 0.0;  // |N(X)| minus the vertex lower bound (must be > 0)
  std::size_t edges_out = 0;
  std::size_t neighborhood_size = 0;
};

// Evaluates the edge and vertex expansion bounds of an alpha-maximal graph for
// a set X with 0 < |X| <= n/2 and Y = V \ X. Throws PreconditionError otherwise.
ExpansionReport check_expansion_bounds(const SimpleGraph& g, double alpha, const VertexSet& x);

struct MaximalPropertiesReport {
  bool constant_ok = true;     // c > 1/2 for nonempty graphs
  bool min_degree_ok = true;   // min degree >= d/2
  bool edge_bounds_ok = true;  // for every X with |X| <= n/2
  bool vertex_bounds_ok = true;
  std::uint64_t sets_checked = 0;
  std::optional<VertexSet> first_failure;
};

// Checks all four properties, enumerating every X with |X| <= n/2 (n <= 20).
MaximalPropertiesReport check_maximal_properties(const SimpleGraph& g, double alpha);

}  // namespace rsub
