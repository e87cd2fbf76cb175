#include "rsub/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include <json.hpp>

#include "rsub/errors.hpp"
#include "rsub/generators.hpp"

namespace rsub {

ColoredGraph hypercube_colored(std::size_t m) {
  if (m < 1 || m > 20) throw InputError("hypercube dimension must be in 1..20");
  std::vector<Edge> edges;
  std::vector<Color> colors;
  const std::uint32_t n = 1u << m;
  edges.reserve(m << (m - 1));
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint32_t v = u ^ (1u << i);
      if (u < v) {
        edges.emplace_back(u, v);
        colors.push_back(i);
      }
    }
  return ColoredGraph(n, edges, colors);
}

std::size_t girth(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    parent[s] = s;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (best && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

// Shortest u-v path avoiding the edge uv with at most max_edges edges.
std::optional<std::vector<Vertex>> short_detour(const std::vector<std::set<Vertex>>& adj, Vertex u, Vertex v,
                                                std::size_t max_edges) {
  std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
  std::vector<Vertex> parent(adj.size());
  dist[u] = 0;
  std::queue<Vertex> q;
  q.push(u);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (dist[x] == max_edges) continue;
    for (Vertex y : adj[x]) {
      if ((x == u && y == v) || dist[y] != SIZE_MAX) continue;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      if (y == v) {
        std::vector<Vertex> path{v};
        while (path.back() != u) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push(y);
    }
  }
  return std::nullopt;
}

}  // namespace

HighGirthResult random_high_girth_graph(std::size_t n, std::size_t ell, std::uint64_t seed) {
  if (n < 1) throw InputError("need at least one vertex");
  if (ell < 1) throw InputError("ell must be positive");
  HighGirthResult out;
  out.cycle_bound = 3 * ell + 3;
  out.p = std::min(1.0, std::pow(static_cast<double>(n), 1.0 / static_cast<double>(out.cycle_bound) - 1.0));
  Rng rng(seed);
  SimpleGraph sample = random_gnp(n, out.p, rng);
  out.sampled_edges = sample.num_edges();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [a, b] : sample.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<Edge> kept;
  for (auto [a, b] : sample.edges()) {
    auto detour = short_detour(adj, a, b, out.cycle_bound - 1);
    if (!detour) {
      kept.emplace_back(a, b);
      continue;
    }
    adj[a].erase(b);
    adj[b].erase(a);
    out.log.push_back({*detour, {a, b}});
  }
  out.graph = SimpleGraph(n, std::move(kept));
  return out;
}

namespace {

HyperEdge least_edge(const FaceWalk& c) { return c.complex().edges().front(); }

std::optional<FaceWalk> search_length(const RGraph& g, std::size_t len) {
  FaceCycleOptions opt;
  opt.require_surface = true;
  opt.node_budget = UINT64_MAX;
  return find_face_cycle(g, len, opt).cycle;
}

// Calls f on every k-subset of `items` in lexicographic order until f returns false.
template <class F>
bool for_each_combination(const VertexSet& items, std::size_t k, F&& f) {
  const std::size_t n = items.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VertexSet pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
    if (!f(pick)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RGraph without_edge(const RGraph& g, const HyperEdge& e) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.num_edges(); ++j)
    if (g.edges()[j] != e) keep.push_back(j);
  return g.sub(keep);
}

// Smallest length of a cylinder or Moebius cycle: the complex needs at least
// five vertices.
constexpr std::size_t kMinSurfaceLength = 5;

// Largest subset size handled by precomputed patterns.
constexpr std::size_t kMaxPatternSize = 7;

// Every labelled cylinder or Moebius cycle spanning {0..s-1}, as a bitmask
// over the lexicographically indexed triples, with one representative cycle
// per distinct complex.
struct SurfacePatterns {
  std::size_t s = 0;
  std::vector<HyperEdge> triples;
  std::vector<std::pair<std::uint64_t, FaceWalk>> patterns;  // sorted by mask
};

SurfacePatterns surface_patterns(std::size_t s) {
  SurfacePatterns out;
  out.s = s;
  VertexSet all(s);
  for (std::size_t v = 0; v < s; ++v) all[v] = static_cast<Vertex>(v);
  for_each_combination(all, 3, [&](const VertexSet& t) {
    out.triples.push_back(t);
    return true;
  });
  std::vector<Face> faces;
  for_each_combination(all, 2, [&](const VertexSet& f) {
    faces.push_back(f);
    return true;
  });
  auto triple_index = [&](const HyperEdge& e) {
    return static_cast<std::size_t>(std::lower_bound(out.triples.begin(), out.triples.end(), e) - out.triples.begin());
  };
  std::map<std::uint64_t, FaceWalk> found;
  FaceWalk walk{3, {}};
  std::function<void()> extend = [&]() {
    const Face cur = walk.faces.back();
    if (walk.faces.size() == s + 1) {
      if (cur != walk.faces.front() || walk.vertex_union().size() != s) return;
      if (classify_walk(walk) != WalkKind::kCycle) return;
      RGraph complex = walk.complex();
      if (!is_surface_with_boundary(complex) || euler_characteristic(complex) != 0) return;
      std::uint64_t mask = 0;
      for (const auto& e : complex.edges()) mask |= std::uint64_t{1} << triple_index(e);
      FaceWalk canon = canonical_cycle(walk);
      auto it = found.find(mask);
      if (it == found.end() || canon.faces < it->second.faces) found[mask] = canon;
      return;
    }
    for (const Face& nf : faces) {
      if (nf < walk.faces.front() && walk.faces.size() < s) continue;
      std::vector<Vertex> u;
      std::set_union(cur.begin(), cur.end(), nf.begin(), nf.end(), std::back_inserter(u));
      if (u.size() != 3) continue;
      if (walk.faces.size() == s && nf != walk.faces.front()) continue;
      walk.faces.push_back(nf);
      extend();
      walk.faces.pop_back();
    }
  };
  for (const Face& root : faces) {
    walk.faces = {root};
    extend();
  }
  out.patterns.assign(found.begin(), found.end());
  return out;
}

}  // namespace

std::optional<FaceWalk> find_short_surface_cycle(const RGraph& g, std::size_t vertex_cap) {
  if (g.r() != 3) throw UnsupportedError("surface cycles are defined for 3-graphs");
  for (std::size_t len = kMinSurfaceLength; len <= vertex_cap; ++len)
    if (auto c = search_length(g, len)) return c;
  return std::nullopt;
}

ShortCycleFreeResult random_short_cycle_free_3graph(std::size_t n, double alpha, std::uint64_t seed,
                                                    std::uint64_t subset_cap) {
  if (!(alpha > 0 && alpha < 1)) throw InputError("alpha must lie in (0, 1)");
  if (n < 3) throw InputError("need at least three vertices");
  ShortCycleFreeResult out;
  out.n = n;
  out.alpha = alpha;
  out.p = std::min(1.0, 12.0 * std::pow(static_cast<double>(n), alpha - 1.0));
  out.vertex_cap = static_cast<std::size_t>(std::floor(1.0 / alpha));
  Rng rng(seed);
  RGraph g = random_rgraph(n, 3, out.p, rng);
  out.sampled_edges = g.num_edges();
  out.expected_edges = out.p * static_cast<double>(n) * static_cast<double>(n - 1) * static_cast<double>(n - 2) / 6.0;

  const std::size_t cap = std::min(out.vertex_cap, n);
  if (cap < kMinSurfaceLength) {
    out.detection = "vacuous";
    out.graph = std::move(g);
    return out;
  }
  double subsets = 0;
  for (std::size_t s = kMinSurfaceLength; s <= cap; ++s) {
    double c = 1;
    for (std::size_t i = 0; i < s; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    subsets += c;
  }
  if (cap <= kMaxPatternSize && subsets <= static_cast<double>(subset_cap)) {
    out.detection = "subsets";
    VertexSet all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    std::set<HyperEdge> present(g.edges().begin(), g.edges().end());
    for (std::size_t s = kMinSurfaceLength; s <= cap; ++s) {
      const SurfacePatterns pat = surface_patterns(s);
      for_each_combination(all, s, [&](const VertexSet& pick) {
        std::uint64_t mask = 0;
        for (std::size_t k = 0; k < pat.triples.size(); ++k) {
          const auto& t = pat.triples[k];
          if (present.count({pick[t[0]], pick[t[1]], pick[t[2]]})) mask |= std::uint64_t{1} << k;
        }
        for (const auto& [need, local] : pat.patterns) {
          if ((need & ~mask) != 0) continue;
          FaceWalk c{3, {}};
          for (const auto& f : local.faces) c.faces.push_back({pick[f[0]], pick[f[1]]});
          std::size_t low = static_cast<std::size_t>(std::countr_zero(need));
          const auto& t = pat.triples[low];
          HyperEdge e{pick[t[0]], pick[t[1]], pick[t[2]]};
          out.log.push_back({canonical_cycle(c), e});
          present.erase(e);
          mask &= ~(std::uint64_t{1} << low);
        }
        return true;
      });
    }
    g = RGraph(3, std::vector<HyperEdge>(present.begin(), present.end()));
  } else {
    out.detection = "global";
    while (auto c = find_short_surface_cycle(g, cap)) {
      HyperEdge e = least_edge(*c);
      out.log.push_back({*c, e});
      g = without_edge(g, e);
    }
  }
  out.graph = std::move(g);
  return out;
}

HypercubeCycle embed_cycle_in_hypercube(const FaceWalk& cycle, std::size_t m) {
  if (cycle.r != 3) throw InputError("hypercube embedding needs a 3-uniform cycle");
  if (m > 63) throw InputError("hypercube dimension must be at most 63");
  if (classify_walk(cycle) != WalkKind::kCycle) throw InputError("walk is not a cycle");
  for (Vertex v : cycle.vertex_union())
    if (v >= m) throw InputError("cycle vertex outside the hypercube coordinates");
  auto mask = [](const std::vector<Vertex>& s) {
    std::uint64_t x = 0;
    for (Vertex v : s) x |= std::uint64_t{1} << v;
    return x;
  };
  HypercubeCycle out;
  out.m = m;
  auto edges = cycle.edges();
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    out.vertices.push_back(mask(cycle.faces[i]));
    out.vertices.push_back(mask(edges[i]));
  }
  std::set<std::uint64_t> distinct(out.vertices.begin(), out.vertices.end());
  if (distinct.size() != out.vertices.size()) throw InputError("cycle repeats a face or an edge");
  return out;
}

bool check_hypercube_embedding(const FaceWalk& cycle, const HypercubeCycle& embedding) {
  const auto& vs = embedding.vertices;
  if (cycle.r != 3 || vs.size() != 2 * cycle.length() || vs.size() < 4 || embedding.m > 63) return false;
  std::set<std::uint64_t> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) return false;
  const RGraph complex = cycle.complex();
  std::set<HyperEdge> support_ok(complex.edges().begin(), complex.edges().end());
  const std::uint64_t limit = embedding.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << embedding.m) - 1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::uint64_t a = vs[i], b = vs[(i + 1) % vs.size()];
    if ((a & ~limit) || std::popcount(a ^ b) != 1) return false;
    if (std::popcount(a) != (i % 2 == 0 ? 2 : 3)) return false;
    // In {0,1,*}^m the edge's nonzero entries are the bits of its heavier end.
    std::uint64_t heavy = a | b;
    HyperEdge e;
    for (std::size_t bit = 0; bit < embedding.m; ++bit)
      if (heavy >> bit & 1) e.push_back(static_cast<Vertex>(bit));
    if (!support_ok.count(e)) return false;
  }
  return true;
}

std::string deletion_log_json(const HighGirthResult& result, std::size_t n, std::size_t ell, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = "rsub-deletion-log";
  j["version"] = 1;
  j["construction"] = "girth";
  j["seed"] = seed;
  j["n"] = n;
  j["ell"] = ell;
  j["p"] = result.p;
  j["cycle_bound"] = result.cycle_bound;
  j["sampled_edges"] = result.sampled_edges;
  j["final_edges"] = result.graph.num_edges();
  auto& entries = j["deletions"] = nlohmann::json::array();
  for (const auto& d : result.log)
    entries.push_back({{"cycle", d.cycle}, {"deleted", {d.deleted.first, d.deleted.second}}});
  return j.dump(1) + "\n";
}

std::string deletion_log_json(const ShortCycleFreeResult& result, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = "rsub-deletion-log";
  j["version"] = 1;
  j["construction"] = "3graph";
  j["seed"] = seed;
  j["n"] = result.n;
  j["alpha"] = result.alpha;
  j["p"] = result.p;
  j["vertex_cap"] = result.vertex_cap;
  j["detection"] = result.detection;
  j["sampled_edges"] = result.sampled_edges;
  j["expected_edges"] = result.expected_edges;
  j["final_edges"] = result.graph.num_edges();
  auto& entries = j["deletions"] = nlohmann::json::array();
  for (const auto& d : result.log)
    entries.push_back({{"cycle", d.cycle.faces}, {"surface", to_string(classify_surface(d.cycle))}, {"deleted", d.deleted}});
  return j.dump(1) + "\n";
}

}  // namespace rsub
