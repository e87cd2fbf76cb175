#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsub/graph.hpp"
#include "rsub/rng.hpp"
#include "rsub/status.hpp"

namespace rsub {

struct SampleConfig {
  double p = 0.5;         // vertex sample probability (union over rounds)
  double p_c = 0.5;       // color sample probability (union over rounds)
  double lambda = 2.0;    // tail parameter, > 1
  std::size_t ell = 8;    // path-length budget
  double tau = 0.25;      // reach exponent, in (0, 1/2)
  std::size_t rounds = 1; // sprinkling rounds
  std::uint64_t seed = 1;
  std::size_t retries = 32;
  std::size_t parts = 0;          // vertex/color partition size; 0 picks max(2, ceil(1/p))
  double good_fraction = 1.0 / 6; // share of parts a pair needs to count as good
  std::size_t pair_threshold = 1; // parts required per half in the large-subdivision multigraph
  bool extract_max_subgraph = true;
  std::uint64_t node_budget = 50'000'000;

  // Throws InputError when a field is outside its documented range.
  void validate() const;
  std::size_t part_count() const;
  // Per-round probability q with 1 - (1 - q)^rounds = p.
  double vertex_round_probability() const;
  double color_round_probability() const;
};

// Probability q such that `rounds` independent q-samples have union probability p.
double sprinkle_probability(double p, std::size_t rounds);

// `rounds` independent Bernoulli(q) subsets of {0..universe-1}.
std::vector<std::vector<std::uint32_t>> sprinkle(std::size_t universe, std::size_t rounds, double per_round_prob,
                                                 Rng& rng);
std::vector<std::vector<std::uint32_t>> sprinkle(std::size_t universe, std::size_t rounds, double per_round_prob,
                                                 std::uint64_t seed);

// Vertices reachable from a source by rainbow (U,Q)-paths, one witness each.
class ReachSet {
 public:
  Vertex source() const { return source_; }
  std::size_t max_len() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  // Cumulative level sets B_0 = {source} within B_1 within ... within B_max_len.
  const VertexSet& level(std::size_t i) const { return levels_.at(i); }
  const VertexSet& reached() const { return levels_.back(); }
  bool contains(Vertex v) const { return v < depth_.size() && depth_[v] >= 0; }
  // Witness path source -> v (vertices) and its edge colors; empty if unreached.
  std::vector<Vertex> path_to(Vertex v) const;
  std::vector<Color> path_colors(Vertex v) const;

 private:
  friend ReachSet uq_reach(const ColoredGraph&, Vertex, const std::vector<VertexSet>&,
                           const std::vector<ColorSet>&, std::size_t);
  Vertex source_ = 0;
  std::vector<int> depth_;
  std::vector<Vertex> parent_;
  std::vector<Color> parent_color_;
  std::vector<VertexSet> levels_;
};

// Level iteration: step i extends from the source and from every vertex reached
// earlier that lies in the union of the first i-1 vertex rounds, using colors
// from the union of the first i color rounds. Each new vertex keeps the first
// witness found (sources and neighbors in increasing id order); a witness's
// vertices and colors are forbidden for its extensions. Round lists shorter
// than max_len are reused cumulatively.
ReachSet uq_reach(const ColoredGraph& g, Vertex v, const std::vector<VertexSet>& u_rounds,
                  const std::vector<ColorSet>& q_rounds, std::size_t max_len);

// Exact-length variant: one witness per (vertex, length) for rainbow
// (U,Q)-paths of exactly `len` edges. Returns, for each vertex, the witness
// path or an empty vector.
std::vector<std::vector<Vertex>> exact_length_paths(const ColoredGraph& g, Vertex v, const std::vector<char>& in_u,
                                                    const std::vector<char>& in_q, std::size_t len);

struct RainbowCycle {
  std::vector<Vertex> vertices;  // v_0 .. v_{k-1}; the cycle closes back to v_0
  std::vector<Color> colors;     // colors[i] is the color of v_i v_{i+1 mod k}
};

bool validate_rainbow_cycle(const ColoredGraph& g, const RainbowCycle& c);

// Closed walk given by vertices w_0..w_k with w_k = w_0 and k pairwise distinct
// edge colors. Returns the first simple cycle closed by a repeated vertex.
// Throws InputError if the walk is not closed or repeats a color.
RainbowCycle extract_cycle_from_circuit(const std::vector<Vertex>& walk, const std::vector<Color>& colors);

std::optional<RainbowCycle> find_rainbow_cycle(const ColoredGraph& g, const SampleConfig& config);

struct ExactCycleResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<RainbowCycle> cycle;
  std::uint64_t nodes = 0;
};

// Backtracking over rainbow cycles of length <= max_len whose smallest vertex
// is the start. kIndeterminate when the node budget runs out.
ExactCycleResult find_rainbow_cycle_exact(const ColoredGraph& g, std::size_t max_len,
                                          std::uint64_t node_budget = 50'000'000);

// Branch vertices of K_t and one path per pair (i < j, in lexicographic pair
// order) from branch[i] to branch[j].
struct SubdivisionCert {
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;
  std::optional<std::size_t> path_length;  // uniform number of edges per path, if declared
  bool rainbow = false;

  std::size_t t() const { return branch.size(); }
  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t t);  // i < j
};

bool validate_subdivision(const SimpleGraph& g, const SubdivisionCert& cert);
bool validate_subdivision(const ColoredGraph& g, const SubdivisionCert& cert, bool rainbow);

struct OneSubdivisionOptions {
  std::size_t candidate_limit = 40;       // branch candidates considered (highest degree first)
  std::uint64_t subset_budget = 2'000'000;
};

// 1-subdivision of K_t: t branch vertices and a distinct middle vertex for
// each pair, adjacent to both. Exhaustive when every vertex is a candidate.
std::optional<SubdivisionCert> find_one_subdivision(const SimpleGraph& g, std::size_t t,
                                                    const OneSubdivisionOptions& options = {});

std::optional<SubdivisionCert> find_rainbow_subdivision(const ColoredGraph& g, std::size_t t,
                                                        const SampleConfig& config);

// Subdivision of K_t in which every edge is subdivided exactly `internal`
// times (paths of internal+1 edges). Rainbow when `rainbow` is set; otherwise
// only vertices are sampled.
std::optional<SubdivisionCert> find_large_subdivision(const ColoredGraph& g, std::size_t t, std::size_t internal,
                                                      const SampleConfig& config, bool rainbow = true);
std::optional<SubdivisionCert> find_large_subdivision(const SimpleGraph& g, std::size_t t, std::size_t internal,
                                                      const SampleConfig& config);

// Certificate documents. A cycle document is {"format": "rsub-rainbow-cycle",
// "version": 1, "vertices", "colors", "host_digest", "seed"}; a subdivision
// document is {"format": "rsub-subdivision", "version": 1, "t", "rainbow",
// "branch", "paths", "path_length"?, "host_digest", "seed"}.
enum class GraphCertKind { kRainbowCycle, kSubdivision };

struct GraphCert {
  GraphCertKind kind = GraphCertKind::kRainbowCycle;
  RainbowCycle cycle;
  SubdivisionCert subdivision;
  std::string host_digest;  // empty when no host was recorded
  std::uint64_t seed = 0;
};

std::string rainbow_cycle_to_json(const RainbowCycle& cycle, const std::string& host_digest, std::uint64_t seed);
std::string subdivision_to_json(const SubdivisionCert& cert, const std::string& host_digest, std::uint64_t seed);
// Throws InputError for malformed documents or an unknown format.
GraphCert graph_cert_from_json(const std::string& text);

struct GraphCertCheck {
  bool digest_ok = false;     // recorded digest matches the host (true if none recorded)
  bool structure_ok = false;  // the validator for the certificate kind accepts it
  bool ok() const { return digest_ok && structure_ok; }
};

// Cycles need a colored host; subdivisions use the recorded rainbow flag.
GraphCertCheck validate_graph_cert(const GraphCert& cert, const ColoredGraph& host);
GraphCertCheck validate_graph_cert(const GraphCert& cert, const SimpleGraph& host);

}  // namespace rsub
