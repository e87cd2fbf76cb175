#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsub/graph.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/topo.hpp"

namespace rsub {

// Q_m on vertices 0..2^m-1 (bit i = coordinate i); the edge flipping
// coordinate i gets color i. InputError unless 1 <= m <= 20.
ColoredGraph hypercube_colored(std::size_t m);

// Length of a shortest cycle; 0 for a forest.
std::size_t girth(const SimpleGraph& g);

struct GraphDeletion {
  std::vector<Vertex> cycle;  // closed vertex sequence without repeating the start
  Edge deleted;
};

struct HighGirthResult {
  SimpleGraph graph;
  double p = 0;
  std::size_t cycle_bound = 0;  // every cycle of length <= cycle_bound is destroyed
  std::size_t sampled_edges = 0;
  std::vector<GraphDeletion> log;
};

// G(n, p) with p = min(1, n^{1/k - 1}), k = 3 ell + 3; edges are scanned in
// lexicographic order and deleted when they lie on a cycle of length <= k.
// Each deleted edge is the least edge of the logged cycle. Output girth > k.
HighGirthResult random_high_girth_graph(std::size_t n, std::size_t ell, std::uint64_t seed);

struct FaceDeletion {
  FaceWalk cycle;
  HyperEdge deleted;  // lexicographically least edge of the cycle's complex
};

struct ShortCycleFreeResult {
  RGraph graph;
  std::size_t n = 0;
  double alpha = 0;
  double p = 0;
  std::size_t vertex_cap = 0;  // floor(1/alpha)
  std::size_t sampled_edges = 0;
  double expected_edges = 0;   // p * C(n, 3); recorded, not asserted
  std::string detection;       // "subsets", "global" or "vacuous"
  std::vector<FaceDeletion> log;
};

// Binomial 3-graph on n vertices with p = min(1, 12 n^{alpha - 1}). Every
// higher-order cycle on at most floor(1/alpha) vertices whose complex is a
// cylinder or Moebius strip is destroyed by deleting its least edge. Vertex
// subsets are scanned in size then lexicographic order when there are at
// most `subset_cap` of them; otherwise whole-graph exact searches repeat until
// none remains. InputError unless 0 < alpha < 1 and n >= 3.
ShortCycleFreeResult random_short_cycle_free_3graph(std::size_t n, double alpha, std::uint64_t seed,
                                                    std::uint64_t subset_cap = 5'000'000);

// Exhaustive re-scan: a cylinder or Moebius cycle on at most `vertex_cap`
// vertices, if any.
std::optional<FaceWalk> find_short_surface_cycle(const RGraph& g, std::size_t vertex_cap);

struct HypercubeCycle {
  std::size_t m = 0;
  std::vector<std::uint64_t> vertices;  // chi(f_0), chi(e_1), chi(f_1), ..., chi(e_len)
};

// Characteristic vectors of the faces and edges of a 3-uniform cycle,
// alternating; consecutive vectors differ in one bit. InputError if the walk
// is not a cycle, r != 3, a vertex is >= m, m > 63, or the vectors repeat.
HypercubeCycle embed_cycle_in_hypercube(const FaceWalk& cycle, std::size_t m);

// Simple closed walk of length 2 len in Q_m, weights alternating 2 and 3,
// every Q_m edge's support an edge of the cycle's complex.
bool check_hypercube_embedding(const FaceWalk& cycle, const HypercubeCycle& embedding);

// {"format": "rsub-deletion-log", "version": 1, ...} documents.
std::string deletion_log_json(const HighGirthResult& result, std::size_t n, std::size_t ell, std::uint64_t seed);
std::string deletion_log_json(const ShortCycleFreeResult& result, std::uint64_t seed);

}  // namespace rsub
