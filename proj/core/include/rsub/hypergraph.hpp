#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsub/graph.hpp"
#include "rsub/rng.hpp"

namespace rsub {

// Sorted vertex lists. A face has r-1 vertices, a hyperedge r.
using Face = std::vector<Vertex>;
using HyperEdge = std::vector<Vertex>;
// Sorted, duplicate-free list of faces.
using FaceSet = std::vector<Face>;
// Forbidden vertices per face.
using FaceForbidden = std::map<Face, VertexSet>;

// r-uniform hypergraph viewed as a pure simplicial complex. Immutable.
class RGraph {
 public:
  RGraph() = default;
  // Throws InputError for r < 2, wrong edge sizes, repeated vertices inside
  // an edge, or duplicate edges. Edges are stored sorted.
  RGraph(std::size_t r, std::vector<HyperEdge> edges);

  std::size_t r() const { return r_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  // P(G): all (r-1)-subsets of edges, sorted.
  const FaceSet& faces() const { return faces_; }
  std::size_t num_faces() const { return faces_.size(); }
  // V(G): vertices covered by edges, sorted.
  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  // d(G) = r e(G) / p(G); 0 for the empty hypergraph.
  double average_degree() const;

  std::optional<std::size_t> face_index(const Face& f) const;
  bool has_face(const Face& f) const { return face_index(f).has_value(); }
  std::optional<std::size_t> edge_index(const HyperEdge& e) const;
  bool has_edge(const HyperEdge& e) const { return edge_index(e).has_value(); }

  // Edge indices containing face i / face indices of edge j.
  const std::vector<std::size_t>& edges_of_face(std::size_t i) const { return face_edges_[i]; }
  const std::vector<std::size_t>& faces_of_edge(std::size_t j) const { return edge_faces_[j]; }
  std::size_t face_degree(std::size_t i) const { return face_edges_[i].size(); }
  std::size_t face_degree(const Face& f) const;
  std::size_t min_face_degree() const;
  // Number of faces containing v.
  std::size_t vertex_face_degree(Vertex v) const;

  // Subhypergraph on the given edge indices.
  RGraph sub(const std::vector<std::size_t>& edge_indices) const;

  bool operator==(const RGraph& o) const { return r_ == o.r_ && edges_ == o.edges_; }

 private:
  std::size_t r_ = 2;
  std::vector<HyperEdge> edges_;
  FaceSet faces_;
  VertexSet vertices_;
  std::vector<std::vector<std::size_t>> face_edges_;
  std::vector<std::vector<std::size_t>> edge_faces_;
  std::map<Face, std::size_t> face_lookup_;
  std::map<HyperEdge, std::size_t> edge_lookup_;
};

// Canonical (sorted) face; throws InputError on repeated vertices.
Face make_face(std::vector<Vertex> vertices);
FaceSet make_face_set(std::vector<Face> faces);
// The r faces of an edge, in lexicographic order.
FaceSet faces_of(const HyperEdge& e);

// {f in P(G) \ X : f u f' in E(G) for some f' in X}. Throws InputError when X
// is not inside P(G).
FaceSet face_neighborhood(const RGraph& g, const FaceSet& x);

// Faces f outside X with some f' in X such that f u f' is an edge, the vertex
// f' \ f lies in U, and (when phi is given) the vertex f \ f' avoids phi(f').
FaceSet conditional_neighborhood(const RGraph& g, const FaceSet& x, const VertexSet& u,
                                 const FaceForbidden* phi = nullptr);

// Edges whose every face lies in X.
RGraph induced_by_faces(const RGraph& g, const FaceSet& x);

// Repeatedly removes all edges through a face of degree < d(G)/r, with d(G)
// taken from the input. Throws PreconditionError on an empty input.
RGraph mindeg_subhypergraph(const RGraph& g);

struct VertexFaceDegreeRow {
  Vertex vertex = 0;
  std::size_t face_degree = 0;
  double slack = 0;  // bound - face_degree
};

struct VertexFaceDegreeReport {
  bool precondition_met = false;  // every face degree >= d
  double bound = 0;               // r p(G) / d
  bool all_pass = false;
  std::vector<VertexFaceDegreeRow> rows;
};

// deg_P(v) <= r p(G) / d for all v, given min face degree >= d. The check is
// skipped (precondition_met = false) otherwise.
VertexFaceDegreeReport vertex_face_degree_check(const RGraph& g, double d);

struct ShadowReport {
  double x = 0;      // real x >= r with binom(x, r) = e(G)
  double bound = 0;  // x - r + 1
  double average_degree = 0;
  bool holds = false;
};

// Real-valued binomial coefficient x(x-1)...(x-r+1)/r!.
double real_binomial(double x, std::size_t r);
ShadowReport shadow_bound_check(const RGraph& g);

enum class ExtractMode { kExact, kPeel };

struct RGraphMaxResult {
  std::vector<std::size_t> edge_indices;  // into g.edges(), sorted
  RGraph graph;
  double score = 0;  // d(H) / p(H)^alpha
};

inline constexpr std::size_t kExactEdgeCap = 20;

// d(H)/p(H)^alpha for an r-graph.
double rgraph_score(const RGraph& h, double alpha);
// Maximizes d(H)/p(H)^alpha over edge subsets. Requires 0 < alpha < 1/(r-1).
// Exact mode enumerates every subset (e(G) <= cap); ties prefer fewer edges,
// then the lexicographically smallest index list. Peel mode greedily removes
// the edge whose removal gives the best score and keeps the best prefix.
RGraphMaxResult alpha_max_rgraph(const RGraph& g, double alpha, ExtractMode mode,
                                 std::size_t exact_cap = kExactEdgeCap);

struct HypmaxOptions {
  std::size_t exhaustive_limit = 2'000'000;  // max sets enumerated before sampling
  std::size_t samples = 20'000;
  std::uint64_t seed = 1;
};

struct HypmaxReport {
  bool empty = false;
  double c = 0;  // d(G) / p(G)^alpha
  bool c_ok = true;
  std::size_t low_degree_faces = 0;
  bool mindeg_ok = true;
  std::size_t max_set_size = 0;  // largest |X| covered by (iii)
  std::size_t sets_checked = 0;
  bool exhaustive = true;
  std::size_t expansion_violations = 0;
  double worst_slack = 0;  // min over checked X of |N(X)| - bound
  bool expansion_ok = true;
  bool all_ok() const { return c_ok && mindeg_ok && expansion_ok; }
};

// Checks c > 1/2, deg(f) >= d/r, and the face-expansion bound for all
// X with |X| <= (1/2r)^{(1+alpha)/alpha} p(G).
HypmaxReport verify_hypmax(const RGraph& g, double alpha, const HypmaxOptions& options = {});

// All r-subsets of {0..n-1}.
RGraph complete_rgraph(std::size_t n, std::size_t r);
// Each r-subset of {0..n-1} independently with probability p.
RGraph random_rgraph(std::size_t n, std::size_t r, double p, Rng& rng);
// m distinct r-subsets of {0..n-1}, uniformly at random.
RGraph random_rgraph_edges(std::size_t n, std::size_t r, std::size_t m, Rng& rng);

// Hyperedge-list text: one edge per line, space separated vertex ids, '#'
// comments. An optional "# uniformity R" header fixes r for empty files.
RGraph read_hyperedge_list(std::istream& in);
void write_hyperedge_list(std::ostream& out, const RGraph& g);
// Structured document {"format": "rsub-hypergraph", "version": 1, "r", "edges"}.
std::string hypergraph_to_json(const RGraph& g);
RGraph hypergraph_from_json(const std::string& text);
// Auto-detects JSON by a leading '{'.
RGraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const RGraph& g, bool json = false);
// Digest of the canonical hyperedge-list text; identifies a host in certificates.
std::string rgraph_digest(const RGraph& g);

}  // namespace rsub
