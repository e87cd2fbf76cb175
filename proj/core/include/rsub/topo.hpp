#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsub/hypergraph.hpp"
#include "rsub/rng.hpp"
#include "rsub/status.hpp"

namespace rsub {

// Sequence of (r-1)-faces f_0..f_len; consecutive faces span an r-set.
struct FaceWalk {
  std::size_t r = 3;
  std::vector<Face> faces;

  std::size_t length() const { return faces.empty() ? 0 : faces.size() - 1; }
  // e_i = f_{i-1} u f_i for i = 1..len, in walk order (may repeat).
  std::vector<HyperEdge> edges() const;
  // The associated simplicial complex: the distinct edges e_i.
  RGraph complex() const;
  VertexSet vertex_union() const;
  bool operator==(const FaceWalk& o) const { return r == o.r && faces == o.faces; }
};

enum class WalkKind { kWalk, kPath, kProperPath, kCycle, kClosedWalk };
const char* to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

// Throws InputError when the walk is empty, a face has the wrong size or
// repeats a vertex, or two consecutive faces do not span exactly r vertices.
void check_walk_shape(const FaceWalk& w);
// Applies the path, proper-path and cycle tests. A closed walk is a cycle only
// when it covers exactly len vertices and two of f_1..f_len are disjoint.
WalkKind classify_walk(const FaceWalk& w);
// Every e_i is an edge of the host (and r matches).
bool walk_in_host(const FaceWalk& w, const RGraph& host);

// Vertices of a path outside both endpoints.
VertexSet internal_vertices(const FaceWalk& path);
// f_0's vertices by last occurrence, then the remaining vertices by first
// occurrence. Throws PreconditionError unless the walk is a proper path.
std::vector<Vertex> vertex_order(const FaceWalk& path);

// Faces {x_{i+1}..x_{i+r-1}} of a vertex sequence with consecutive r-windows.
FaceWalk tight_walk(const std::vector<Vertex>& sequence, std::size_t r);
// Closed tight walk on vertices 0..len-1 (edges {i, i+1, ..., i+r-1} mod len).
FaceWalk tight_cycle(std::size_t length, std::size_t r = 3);

// The two arcs between the most balanced disjoint pair f_i, f_j (1 <= i < j
// <= len; ties to the smallest i). Throws InputError for a non-cycle.
std::pair<FaceWalk, FaceWalk> split_cycle(const FaceWalk& cycle);

// Lexicographically smallest rotation or reversal of a cycle's face sequence.
FaceWalk canonical_cycle(const FaceWalk& cycle);

// e - p + v of a 3-graph viewed as a 2-complex. UnsupportedError for r != 3.
long euler_characteristic(const RGraph& g);
long euler_characteristic(const FaceWalk& w);

// Connected 2-complex with every 1-face in at most two triangles, at least
// one boundary 1-face, and every vertex link a path or a cycle.
bool is_surface_with_boundary(const RGraph& g);

enum class Surface { kCylinder, kMoebius };
const char* to_string(Surface s);
// Orientation propagation over triangles sharing 1-faces. Throws
// UnsupportedError for r != 3, InputError for a non-cycle, a 1-face in three
// or more triangles, or a complex that is not a surface with boundary of
// Euler characteristic 0.
Surface classify_surface(const FaceWalk& cycle);
// Even length: cylinder; odd: Moebius (valid for 3-partite cycles).
Surface parity_surface(std::size_t length);

// Vertex 3-coloring with every edge using all three classes, by exhaustive
// search. Classes are listed by their smallest vertex. UnsupportedError for r != 3.
std::optional<std::array<VertexSet, 3>> three_partition(const RGraph& g);

// Extends the ordered start face one vertex at a time so that every r-window
// is an edge and no vertex repeats; picks the lowest admissible id, or a
// uniformly random one when rng is given. Returns L + r - 1 vertices or none
// when blocked. Throws InputError if the start is not a face of g.
std::optional<std::vector<Vertex>> tight_path_greedy(const RGraph& g, const std::vector<Vertex>& start,
                                                     std::size_t length, Rng* rng = nullptr);

// Edges surviving repeated removal of every edge through a face of degree < k.
RGraph face_core(const RGraph& g, std::size_t k);

struct FacePathResult {
  std::optional<FaceWalk> path;
  bool within_guarantee = false;  // |F| >= 2 r len p(G) / d with d = min face degree
  double required_size = 0;
  std::string method;  // "case1", "case2", "search" or "none"
};

// Proper path of the given length (> r, r >= 3) with both endpoints in F.
// Follows the two constructive cases (edges with exactly one face in F vs
// at least two), then falls back to a budgeted depth-first search.
// PreconditionError for r < 3 or length <= r; InputError if F is not in P(G).
FacePathResult path_between_face_set(const RGraph& g, const FaceSet& f, std::size_t length,
                                     std::uint64_t search_budget = 2'000'000);

struct FanResult {
  FaceSet faces;                 // distinct endpoints
  std::vector<FaceWalk> paths;   // paths[i] ends at faces[i]; proper, length r-1
  std::size_t sequences = 0;     // d (d-1) ... (d-r+2)
  std::size_t required = 0;      // ceil((d/r)^{r-1})
  double degree_bound = 0;       // r d^{r-2}
  std::size_t max_vertex_degree = 0;
  bool size_ok = false;
  bool degree_ok = false;
};

// Sequence construction: from {v_{i+1}..v_{r-1}, y_1..y_i} choose the d-i
// lowest vertices y outside {v_1..v_i} completing an edge. PreconditionError
// unless d > r and every face of g has degree >= d; InputError if f0 is not
// a face.
FanResult fan_paths(const RGraph& g, const Face& f0, std::size_t d);

struct ReachLevel {
  FaceSet faces;
  std::vector<FaceWalk> witnesses;  // witnesses[i] runs from f0 to faces[i]
};

// Level 0 is the fan from f0 (fan_paths with d = min face degree when that
// exceeds r, else every proper path of length r-1). Level i is N_phi(B_{i-1},
// U_i) with phi(f) the vertex set of f's witness; each face keeps the witness
// through its first predecessor. Witnesses at level i are proper paths of
// length r-1+i whose internal vertices were dropped in rounds 1..i.
std::vector<ReachLevel> sampled_reach_faces(const RGraph& g, const Face& f0, const std::vector<VertexSet>& rounds);

enum class CycleMode { kExact, kPipeline };

struct FaceCycleOptions {
  CycleMode mode = CycleMode::kExact;
  std::uint64_t node_budget = 20'000'000;  // exact search
  bool require_surface = false;  // accept only cycles whose complex is a surface with boundary
  std::uint64_t seed = 1;
  std::size_t retries = 8;       // pipeline attempts per host
  double alpha = 0.25;           // pipeline extraction exponent, in (0, 1/(r-1))
  std::size_t parts = 3;         // pipeline vertex partition size, >= 2
  double good_fraction = 0.5;    // fraction of parts a good pair needs
  std::size_t root_limit = 32;   // start faces tried per attempt
  std::size_t threads = 0;       // 0: hardware concurrency
};

struct FaceCycleResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<FaceWalk> cycle;  // canonical
  std::uint64_t nodes = 0;
  std::size_t failed_attempts = 0;
  std::string method;  // "exact", "pipeline", "pipeline-host" or "exact-fallback"
};

// Exact mode: backtracking over closed face walks rooted at their smallest
// face; sound and complete within the node budget. Pipeline mode: alpha-
// maximal extraction, random vertex partition, good pairs by reach
// multiplicity, a middle path between good partners, and two connecting
// paths through distinct parts. Lengths whose half-paths would be shorter
// than r-1 use the exact search. Pipeline mode rejects length < r+2 with
// InputError.
FaceCycleResult find_face_cycle(const RGraph& g, std::size_t length, const FaceCycleOptions& options = {});

// Random proper path with identified endpoint faces, relabeled; retried until
// it is a cycle.
FaceWalk random_face_cycle(std::size_t r, std::size_t length, Rng& rng);

struct FaceCert {
  FaceWalk walk;
  WalkKind kind = WalkKind::kWalk;
  std::string host_digest;  // empty when no host was recorded
};

// {"format": "rsub-face-walk", "version": 1, "r", "kind", "faces", "host_digest"}
std::string face_cert_to_json(const FaceWalk& walk, const RGraph* host);
FaceCert face_cert_from_json(const std::string& text);
FaceCert load_face_cert(const std::string& path);

struct FaceCertCheck {
  bool shape_ok = false;
  bool kind_ok = false;    // classification equals the declared kind
  bool digest_ok = false;  // recorded digest equals the host's (true if none recorded)
  bool host_ok = false;    // every edge in the host
  bool ok() const { return shape_ok && kind_ok && digest_ok && host_ok; }
};

FaceCertCheck validate_face_cert(const FaceCert& cert, const RGraph& host);

}  // namespace rsub
