#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "rsub/errors.hpp"
#include "rsub/topo.hpp"

namespace rsub {

namespace {

bool acceptable(const FaceWalk& w, bool require_surface) {
  if (!require_surface) return true;
  if (w.r != 3) return false;
  RGraph c = w.complex();
  return is_surface_with_boundary(c) && euler_characteristic(c) == 0;
}

struct ExactFaceSearch {
  const RGraph& g;
  std::size_t len;
  std::uint64_t budget;
  bool require_surface;

  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::vector<std::size_t>> adj;           // face -> adjacent faces
  std::vector<std::vector<std::size_t>> face_verts;    // face -> compact vertex ids
  std::vector<std::size_t> count;                      // multiplicity per compact vertex
  std::size_t covered = 0;
  std::vector<std::size_t> seq;
  std::size_t root = 0;

  explicit ExactFaceSearch(const RGraph& host, std::size_t length, std::uint64_t node_budget, bool surface)
      : g(host), len(length), budget(node_budget), require_surface(surface) {
    const auto& verts = g.vertices();
    adj.resize(g.num_faces());
    face_verts.resize(g.num_faces());
    for (std::size_t i = 0; i < g.num_faces(); ++i) {
      for (Vertex v : g.faces()[i])
        face_verts[i].push_back(static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()));
      for (std::size_t ej : g.edges_of_face(i))
        for (std::size_t k : g.faces_of_edge(ej))
          if (k != i) adj[i].push_back(k);
      std::sort(adj[i].begin(), adj[i].end());
    }
    count.assign(verts.size(), 0);
  }

  void push(std::size_t f) {
    seq.push_back(f);
    for (std::size_t v : face_verts[f]) covered += count[v]++ == 0;
  }
  void pop() {
    for (std::size_t v : face_verts[seq.back()]) covered -= --count[v] == 0;
    seq.pop_back();
  }

  FaceWalk walk() const {
    FaceWalk w{g.r(), {}};
    for (std::size_t f : seq) w.faces.push_back(g.faces()[f]);
    w.faces.push_back(g.faces()[root]);
    return w;
  }

  bool closes() const {
    if (covered != len) return false;
    FaceWalk w = walk();
    return classify_walk(w) == WalkKind::kCycle && acceptable(w, require_surface);
  }

  // seq holds f_0..f_k.
  bool dfs() {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    const std::size_t k = seq.size() - 1;
    const std::size_t cur = seq.back();
    if (k + 1 == len) return std::binary_search(adj[cur].begin(), adj[cur].end(), root) && closes();
    for (std::size_t nf : adj[cur]) {
      if (nf < root) continue;
      push(nf);
      // f_0..f_{k+1} must already cover at least k+2 vertices and at most len.
      bool viable = covered <= len && covered >= k + 2;
      if (viable && dfs()) return true;
      pop();
      if (exhausted) return false;
    }
    return false;
  }

  FaceCycleResult run() {
    FaceCycleResult out;
    out.method = "exact";
    if (len >= 2) {
      for (root = 0; root < g.num_faces(); ++root) {
        push(root);
        bool found = dfs();
        if (found) {
          out.status = SearchStatus::kFound;
          out.cycle = canonical_cycle(walk());
          out.nodes = nodes;
          return out;
        }
        pop();
        if (exhausted) break;
      }
    }
    out.status = exhausted ? SearchStatus::kIndeterminate : SearchStatus::kNone;
    out.nodes = nodes;
    return out;
  }
};

// Proper paths of the given length from f0 whose dropped vertices lie in f0
// or in the allowed part (and outside `blocked`); one witness per endpoint.
// With a target, added vertices must lie in the part or in the target.
std::map<Face, FaceWalk> part_reach(const RGraph& g, const Face& f0, const std::vector<char>& in_part,
                                    const std::vector<char>& blocked, std::size_t length, const Face* target) {
  auto allowed = [&](Vertex v) { return v < in_part.size() && in_part[v] && !blocked[v]; };
  auto in_f0 = [&](Vertex v) { return std::binary_search(f0.begin(), f0.end(), v); };
  std::map<Face, FaceWalk> level{{f0, FaceWalk{g.r(), {f0}}}};
  for (std::size_t step = 1; step <= length; ++step) {
    std::map<Face, FaceWalk> next;
    for (const auto& [face, walk] : level) {
      VertexSet used = walk.vertex_union();
      for (std::size_t ej : g.edges_of_face(*g.face_index(face))) {
        const auto& e = g.edges()[ej];
        Vertex y = 0;
        for (Vertex v : e)
          if (!std::binary_search(face.begin(), face.end(), v)) y = v;
        if (std::binary_search(used.begin(), used.end(), y)) continue;
        if (target && !allowed(y) && !std::binary_search(target->begin(), target->end(), y)) continue;
        for (Vertex x : face) {
          if (!in_f0(x) && !allowed(x)) continue;
          Face nf;
          for (Vertex v : e)
            if (v != x) nf.push_back(v);
          std::size_t start_left = 0;
          for (Vertex v : nf) start_left += in_f0(v);
          if (start_left > length - step || next.count(nf)) continue;
          FaceWalk w = walk;
          w.faces.push_back(nf);
          next.emplace(std::move(nf), std::move(w));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

struct PipelineContext {
  const RGraph& host;
  std::size_t len;
  std::size_t half;
  const FaceCycleOptions& options;
};

std::optional<FaceWalk> pipeline_attempt(const PipelineContext& ctx, std::uint64_t stream) {
  const RGraph& g = ctx.host;
  const std::size_t s = ctx.options.parts;
  const std::size_t need = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ctx.options.good_fraction * static_cast<double>(s))));
  Rng rng = Rng::stream(ctx.options.seed, stream);
  const std::size_t width = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<std::size_t> part(width, s);
  for (Vertex v : g.vertices()) part[v] = static_cast<std::size_t>(rng.below(s));
  std::vector<std::vector<char>> in_part(s, std::vector<char>(width, 0));
  for (Vertex v : g.vertices()) in_part[part[v]][v] = 1;
  std::vector<std::size_t> roots(g.num_faces());
  for (std::size_t i = 0; i < roots.size(); ++i) roots[i] = i;
  rng.shuffle(roots);
  roots.resize(std::min(roots.size(), ctx.options.root_limit));
  const std::vector<char> none(width, 0);

  for (std::size_t ri : roots) {
    const Face& f0 = g.faces()[ri];
    std::vector<std::map<Face, FaceWalk>> reach(s);
    std::map<Face, std::size_t> multiplicity;
    for (std::size_t k = 0; k < s; ++k) {
      reach[k] = part_reach(g, f0, in_part[k], none, ctx.half, nullptr);
      for (const auto& [face, _] : reach[k]) ++multiplicity[face];
    }
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      bool touches = false;
      for (Vertex v : g.edges()[j]) touches = touches || std::binary_search(f0.begin(), f0.end(), v);
      if (!touches) rest.push_back(j);
    }
    RGraph outer = g.sub(rest);
    FaceSet partners;
    for (const auto& [face, m] : multiplicity)
      if (m >= need && outer.has_face(face)) partners.push_back(face);
    if (partners.size() < 2) continue;
    FacePathResult middle = path_between_face_set(outer, partners, ctx.len - 2 * ctx.half, 200'000);
    if (!middle.path) continue;
    const FaceWalk& mid = *middle.path;
    const Face& a = mid.faces.front();
    const Face& b = mid.faces.back();
    std::vector<char> blocked(width, 0);
    for (Vertex v : mid.vertex_union()) blocked[v] = 1;
    for (std::size_t k1 = 0; k1 < s; ++k1) {
      if (!reach[k1].count(a)) continue;
      auto to_a = part_reach(g, f0, in_part[k1], blocked, ctx.half, &a);
      auto pa = to_a.find(a);
      if (pa == to_a.end()) continue;
      for (std::size_t k2 = 0; k2 < s; ++k2) {
        if (k2 == k1 || !reach[k2].count(b)) continue;
        auto to_b = part_reach(g, f0, in_part[k2], blocked, ctx.half, &b);
        auto pb = to_b.find(b);
        if (pb == to_b.end()) continue;
        FaceWalk cycle{g.r(), pa->second.faces};
        cycle.faces.insert(cycle.faces.end(), mid.faces.begin() + 1, mid.faces.end());
        cycle.faces.insert(cycle.faces.end(), pb->second.faces.rbegin() + 1, pb->second.faces.rend());
        if (walk_in_host(cycle, g) && classify_walk(cycle) == WalkKind::kCycle &&
            acceptable(cycle, ctx.options.require_surface))
          return canonical_cycle(cycle);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FaceCycleResult find_face_cycle(const RGraph& g, std::size_t length, const FaceCycleOptions& options) {
  const std::size_t r = g.r();
  if (options.mode == CycleMode::kExact)
    return ExactFaceSearch(g, length, options.node_budget, options.require_surface).run();

  if (length < r + 2) throw InputError("pipeline mode needs length >= r + 2");
  if (options.parts < 2) throw InputError("pipeline mode needs at least two parts");
  const std::size_t half = (length - r - 1) / 2;
  if (half + 1 < r) {
    FaceCycleResult out = ExactFaceSearch(g, length, options.node_budget, options.require_surface).run();
    out.method = "exact-fallback";
    return out;
  }
  FaceCycleResult out;
  out.method = "pipeline";
  if (g.num_edges() == 0) return out;
  std::vector<RGraph> hosts;
  auto mode = g.num_edges() <= kExactEdgeCap ? ExtractMode::kExact : ExtractMode::kPeel;
  RGraph extracted = alpha_max_rgraph(g, options.alpha, mode).graph;
  hosts.push_back(extracted);
  if (!(extracted == g)) hosts.push_back(g);

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    PipelineContext ctx{hosts[h], length, half, options};
    for (std::size_t begin = 0; begin < options.retries; begin += threads) {
      std::size_t end = std::min(options.retries, begin + threads);
      std::vector<std::future<std::optional<FaceWalk>>> jobs;
      for (std::size_t a = begin; a < end; ++a)
        jobs.push_back(std::async(std::launch::async, pipeline_attempt, std::cref(ctx),
                                  static_cast<std::uint64_t>(h * options.retries + a)));
      for (std::size_t a = begin; a < end; ++a) {
        auto got = jobs[a - begin].get();
        if (got && !out.cycle) {
          out.cycle = got;
          out.status = SearchStatus::kFound;
          out.method = h == 0 ? "pipeline" : "pipeline-host";
        } else if (!out.cycle) {
          ++out.failed_attempts;
        }
      }
      if (out.cycle) return out;
    }
  }
  return out;
}

}  // namespace rsub
