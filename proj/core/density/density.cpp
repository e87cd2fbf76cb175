#include "rsub/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "rsub/errors.hpp"
#include "rsub/rng.hpp"

namespace rsub {

namespace {

constexpr double kRelTol = 1e-12;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0,1), got " + std::to_string(alpha));
}

// -1, 0, +1 comparing scores with a relative tolerance.
int compare_scores(double a, double b) {
  double scale = std::max(std::abs(a), std::abs(b));
  if (std::abs(a - b) <= kRelTol * scale) return 0;
  return a < b ? -1 : 1;
}

// True if mask a precedes b: smaller popcount, then lexicographically least
// sorted vertex list (decided by the lowest differing vertex).
bool mask_precedes(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet s;
  while (mask) {
    s.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Calls visit(mask, edges) for every nonempty subset of an n-vertex graph
// (n <= 24), with edges = e(G[mask]).
template <class Visit>
void for_each_subset(const SimpleGraph& g, Visit&& visit) {
  const std::size_t n = g.num_vertices();
  auto adj = adjacency_masks(g);
  thread_local std::vector<std::uint16_t> count;
  const std::uint32_t total = 1u << n;
  count.resize(total);
  count[0] = 0;
  for (std::uint32_t s = 1; s < total; ++s) {
    std::uint32_t low = static_cast<std::uint32_t>(std::countr_zero(s));
    std::uint32_t rest = s & (s - 1);
    count[s] = static_cast<std::uint16_t>(count[rest] + std::popcount(adj[low] & rest));
    visit(s, static_cast<std::size_t>(count[s]));
  }
}

std::vector<double> size_powers(std::size_t n, double alpha) {
  std::vector<double> p(n + 1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) p[k] = std::pow(static_cast<double>(k), 1.0 + alpha);
  return p;
}

}  // namespace

double density_score(std::size_t edges, std::size_t vertices, double alpha) {
  if (vertices == 0) return 0.0;
  return static_cast<double>(edges) / std::pow(static_cast<double>(vertices), 1.0 + alpha);
}

DensityResult alpha_max_subgraph_exact(const SimpleGraph& g, double alpha, std::size_t cap) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  if (n > cap || n > kExactVertexCap) {
    throw SizeError("exact extraction supports at most " + std::to_string(std::min(cap, kExactVertexCap)) +
                    " vertices (got " + std::to_string(n) + "); use peel mode");
  }
  if (n == 0) return {{}, {alpha, 0.0}};
  auto pw = size_powers(n, alpha);
  std::uint32_t best_mask = 0;
  double best = -1.0;
  for_each_subset(g, [&](std::uint32_t s, std::size_t e) {
    double sc = static_cast<double>(e) / pw[std::popcount(s)];
    int cmp = compare_scores(sc, best);
    if (cmp > 0 || (cmp == 0 && mask_precedes(s, best_mask))) {
      best = sc;
      best_mask = s;
    }
  });
  return {mask_to_set(best_mask), {alpha, best}};
}

namespace {

struct LocalState {
  const SimpleGraph& g;
  std::vector<char> in;
  std::vector<std::size_t> inside_deg;  // neighbors inside the current set
  std::size_t size = 0;
  std::size_t edges = 0;

  LocalState(const SimpleGraph& graph, const VertexSet& s)
      : g(graph), in(graph.num_vertices(), 0), inside_deg(graph.num_vertices(), 0) {
    for (Vertex v : s) set(v, true);
  }

  void set(Vertex v, bool value) {
    if (static_cast<bool>(in[v]) == value) return;
    in[v] = value;
    if (value) {
      ++size;
      edges += inside_deg[v];
    } else {
      --size;
      edges -= inside_deg[v];
    }
    for (Vertex y : g.neighbors(v)) {
      if (value) {
        ++inside_deg[y];
      } else {
        --inside_deg[y];
      }
    }
  }
};

void local_improve(LocalState& st, double alpha) {
  const std::size_t n = st.g.num_vertices();
  auto pw = size_powers(n, alpha);
  auto score = [&](std::size_t e, std::size_t k) { return k == 0 ? 0.0 : static_cast<double>(e) / pw[k]; };
  for (;;) {
    double current = score(st.edges, st.size);
    double best = current;
    int kind = 0;  // 1 add/remove, 2 swap
    Vertex a = 0, b = 0;
    for (Vertex v = 0; v < n; ++v) {
      double s = st.in[v] ? (st.size > 1 ? score(st.edges - st.inside_deg[v], st.size - 1) : -1.0)
                          : score(st.edges + st.inside_deg[v], st.size + 1);
      if (compare_scores(s, best) > 0) {
        best = s;
        kind = 1;
        a = v;
      }
    }
    if (kind == 0 && st.size < n && n <= 4096) {
      for (Vertex u = 0; u < n; ++u) {
        if (!st.in[u]) continue;
        for (Vertex w = 0; w < n; ++w) {
          if (st.in[w]) continue;
          std::size_t e = st.edges - st.inside_deg[u] + st.inside_deg[w] - (st.g.has_edge(u, w) ? 1 : 0);
          double s = score(e, st.size);
          if (compare_scores(s, best) > 0) {
            best = s;
            kind = 2;
            a = u;
            b = w;
          }
        }
      }
    }
    if (kind == 0) return;
    if (kind == 1) {
      st.set(a, !st.in[a]);
    } else {
      st.set(a, false);
      st.set(b, true);
    }
  }
}

// Edges used to seed greedy growth: all of them on small graphs, otherwise the
// edges at the 32 highest-degree vertices.
std::vector<Edge> edge_seeds(const SimpleGraph& g) {
  constexpr std::size_t kAllEdges = 4096;
  if (g.num_edges() <= kAllEdges) return g.edges();
  std::vector<Vertex> by_degree(g.num_vertices());
  for (Vertex v = 0; v < by_degree.size(); ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Edge> seeds;
  for (std::size_t i = 0; i < 32 && i < by_degree.size(); ++i) {
    Vertex v = by_degree[i];
    for (Vertex y : g.neighbors(v)) seeds.push_back({std::min(v, y), std::max(v, y)});
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return seeds;
}

// Adds the vertex with the most neighbors inside the set until the set spans
// the graph, returning the best-scoring prefix.
VertexSet grow_from_edge(const SimpleGraph& g, Edge seed, double alpha) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in(n, 0);
  std::vector<std::size_t> inside(n, 0);
  std::vector<Vertex> order;
  std::size_t edges = 0;
  auto add = [&](Vertex v) {
    in[v] = 1;
    edges += inside[v];
    order.push_back(v);
    for (Vertex y : g.neighbors(v)) ++inside[y];
  };
  add(seed.first);
  add(seed.second);
  double best = density_score(edges, 2, alpha);
  std::size_t best_len = 2;
  const std::size_t limit = std::min<std::size_t>(n, 256);
  while (order.size() < limit) {
    Vertex pick = 0;
    std::size_t most = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v] && inside[v] > 0 && (!found || inside[v] > most)) {
        pick = v;
        most = inside[v];
        found = true;
      }
    }
    if (!found) break;
    add(pick);
    double sc = density_score(edges, order.size(), alpha);
    if (compare_scores(sc, best) > 0) {
      best = sc;
      best_len = order.size();
    }
  }
  VertexSet s(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_len));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

DensityResult alpha_max_subgraph_peel(const SimpleGraph& g, double alpha) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  if (n == 0 || g.num_edges() == 0) {
    // No edges: every set scores 0; report the empty result.
    return {{}, {alpha, 0.0}};
  }
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t edges = g.num_edges();
  double best = density_score(edges, n, alpha);
  std::size_t best_removed = 0;
  while (queue.size() > 1) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    order.push_back(v);
    edges -= d;
    for (Vertex y : g.neighbors(v)) {
      if (removed[y]) continue;
      queue.erase({deg[y], y});
      --deg[y];
      queue.insert({deg[y], y});
    }
    double sc = density_score(edges, n - order.size(), alpha);
    if (compare_scores(sc, best) >= 0) {
      best = sc;
      best_removed = order.size();
    }
  }
  std::vector<char> drop(n, 0);
  for (std::size_t i = 0; i < best_removed; ++i) drop[order[i]] = 1;
  VertexSet start;
  for (Vertex v = 0; v < n; ++v) {
    if (!drop[v]) start.push_back(v);
  }
  std::vector<VertexSet> starts{start};
  for (const auto& seed : edge_seeds(g)) starts.push_back(grow_from_edge(g, seed, alpha));

  VertexSet best_set;
  double best_score = -1.0;
  for (const auto& s : starts) {
    LocalState st(g, s);
    local_improve(st, alpha);
    VertexSet cand;
    for (Vertex v = 0; v < n; ++v) {
      if (st.in[v]) cand.push_back(v);
    }
    double sc = density_score(st.edges, st.size, alpha);
    int cmp = compare_scores(sc, best_score);
    if (cmp > 0 || (cmp == 0 && (cand.size() < best_set.size() || (cand.size() == best_set.size() && cand < best_set)))) {
      best_score = sc;
      best_set = std::move(cand);
    }
  }
  return {best_set, {alpha, best_score}};
}

MaximalityVerdict verify_alpha_maximal_exact(const SimpleGraph& g, double alpha, std::size_t cap) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  if (n > cap || n > kExactVertexCap) throw SizeError("exact verification limited to " + std::to_string(cap) + " vertices");
  MaximalityVerdict v;
  if (n == 0) return v;
  auto pw = size_powers(n, alpha);
  v.graph_score = density_score(g.num_edges(), n, alpha);
  v.best_score = v.graph_score;
  std::uint32_t worst = 0;
  double worst_score = -1.0;
  for_each_subset(g, [&](std::uint32_t s, std::size_t e) {
    ++v.subsets_checked;
    double sc = static_cast<double>(e) / pw[std::popcount(s)];
    if (compare_scores(sc, v.graph_score) > 0) {
      int cmp = compare_scores(sc, worst_score);
      if (cmp > 0 || (cmp == 0 && mask_precedes(s, worst))) {
        worst = s;
        worst_score = sc;
      }
    }
  });
  if (worst != 0) {
    v.maximal = false;
    v.counterexample = mask_to_set(worst);
    v.best_score = worst_score;
  }
  return v;
}

MaximalityVerdict verify_alpha_maximal_sampled(const SimpleGraph& g, double alpha, std::size_t samples,
                                               std::uint64_t seed) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  MaximalityVerdict v;
  if (n == 0) return v;
  v.graph_score = density_score(g.num_edges(), n, alpha);
  v.best_score = v.graph_score;
  auto consider = [&](const VertexSet& s) {
    ++v.subsets_checked;
    if (s.empty()) return;
    auto sub = induced_subgraph(g, s);
    double sc = density_score(sub.graph.num_edges(), s.size(), alpha);
    if (compare_scores(sc, v.graph_score) > 0 && compare_scores(sc, v.best_score) > 0) {
      v.maximal = false;
      v.best_score = sc;
      v.counterexample = s;
    }
  };
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    VertexSet s;
    for (Vertex x = 0; x < n; ++x) {
      if (rng.bernoulli(0.5)) s.push_back(x);
    }
    consider(s);
  }
  for (Vertex drop = 0; drop < n; ++drop) {
    VertexSet s;
    for (Vertex x = 0; x < n; ++x) {
      if (x != drop) s.push_back(x);
    }
    consider(s);
  }
  return v;
}

namespace {

double edge_lower_bound(double d, double alpha, double x, double y) {
  return d / 4.0 * x * (1.0 + alpha - std::pow(x / y, alpha));
}

double vertex_lower_bound(double alpha, double x, double y) {
  return x * ((1.0 + alpha / 2.0) * std::pow(y / x, alpha / (1.0 + alpha)) - 1.0);
}

bool edge_ok(double slack, double bound) { return slack >= -1e-9 * std::max(1.0, std::abs(bound)); }

}  // namespace

ExpansionReport check_expansion_bounds(const SimpleGraph& g, double alpha, const VertexSet& x) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  VertexSet xs = make_vertex_set(x, n);
  if (xs.empty()) throw PreconditionError("X must be nonempty");
  if (2 * xs.size() > n) throw PreconditionError("|X| must not exceed n/2");
  std::vector<char> in_x(n, 0);
  for (Vertex v : xs) in_x[v] = 1;
  VertexSet ys;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_x[v]) ys.push_back(v);
  }
  ExpansionReport r;
  r.edges_out = edges_between(g, xs, ys);
  r.neighborhood_size = neighborhood(g, xs).size();
  double d = g.average_degree();
  double xsz = static_cast<double>(xs.size()), ysz = static_cast<double>(ys.size());
  double eb = edge_lower_bound(d, alpha, xsz, ysz);
  double vb = vertex_lower_bound(alpha, xsz, ysz);
  r.edge_slack = static_cast<double>(r.edges_out) - eb;
  r.vertex_slack = static_cast<double>(r.neighborhood_size) - vb;
  r.edge_bound_ok = edge_ok(r.edge_slack, eb);
  r.vertex_bound_ok = r.vertex_slack > 0.0;
  return r;
}

MaximalPropertiesReport check_maximal_properties(const SimpleGraph& g, double alpha) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  if (n > 20) throw SizeError("property enumeration limited to 20 vertices");
  MaximalPropertiesReport r;
  if (n == 0) return r;
  const double d = g.average_degree();
  if (g.num_edges() > 0) r.constant_ok = density_score(g.num_edges(), n, alpha) * 2.0 > 0.5;
  r.min_degree_ok = static_cast<double>(g.min_degree()) >= d / 2.0 - 1e-12 * std::max(1.0, d);
  auto adj = adjacency_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  const double nd = static_cast<double>(n);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::size_t k = static_cast<std::size_t>(std::popcount(s));
    if (2 * k > n) continue;
    ++r.sets_checked;
    std::uint32_t out = 0;
    std::size_t cross = 0;
    for (std::uint32_t t = s; t; t &= t - 1) {
      std::uint32_t nb = adj[std::countr_zero(t)] & ~s;
      out |= nb;
      cross += static_cast<std::size_t>(std::popcount(nb));
    }
    double xk = static_cast<double>(k), yk = nd - xk;
    double eb = edge_lower_bound(d, alpha, xk, yk);
    double vb = vertex_lower_bound(alpha, xk, yk);
    bool e_ok = edge_ok(static_cast<double>(cross) - eb, eb);
    bool v_ok = static_cast<double>(std::popcount(out)) - vb > 0.0;
    if (!e_ok) r.edge_bounds_ok = false;
    if (!v_ok) r.vertex_bounds_ok = false;
    if ((!e_ok || !v_ok) && !r.first_failure) r.first_failure = mask_to_set(s);
  }
  return r;
}

}  // namespace rsub
