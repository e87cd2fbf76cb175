#include <algorithm>
#include <cmath>
#include <set>

#include "rsub/errors.hpp"
#include "rsub/hypergraph.hpp"
#include "rsub/rng.hpp"

namespace rsub {

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("face repeats a vertex");
  return vertices;
}

FaceSet make_face_set(std::vector<Face> faces) {
  for (auto& f : faces) f = make_face(std::move(f));
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

FaceSet faces_of(const HyperEdge& e) {
  FaceSet out;
  for (std::size_t skip = e.size(); skip-- > 0;) {
    Face f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != skip) f.push_back(e[i]);
    out.push_back(std::move(f));
  }
  return out;
}

RGraph::RGraph(std::size_t r, std::vector<HyperEdge> edges) : r_(r) {
  if (r < 2) throw InputError("uniformity must be at least 2");
  for (auto& e : edges) {
    if (e.size() != r) throw InputError("edge size differs from the uniformity");
    e = make_face(std::move(e));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InputError("duplicate edge");
  edges_ = std::move(edges);
  std::set<Vertex> verts;
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    edge_lookup_.emplace(edges_[j], j);
    verts.insert(edges_[j].begin(), edges_[j].end());
    for (auto& f : faces_of(edges_[j])) face_lookup_.emplace(std::move(f), 0);
  }
  vertices_.assign(verts.begin(), verts.end());
  faces_.reserve(face_lookup_.size());
  for (auto& [f, idx] : face_lookup_) {
    idx = faces_.size();
    faces_.push_back(f);
  }
  face_edges_.assign(faces_.size(), {});
  edge_faces_.assign(edges_.size(), {});
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    for (const auto& f : faces_of(edges_[j])) {
      std::size_t i = face_lookup_.at(f);
      face_edges_[i].push_back(j);
      edge_faces_[j].push_back(i);
    }
  }
}

double RGraph::average_degree() const {
  if (faces_.empty()) return 0.0;
  return static_cast<double>(r_) * static_cast<double>(edges_.size()) / static_cast<double>(faces_.size());
}

std::optional<std::size_t> RGraph::face_index(const Face& f) const {
  auto it = face_lookup_.find(f);
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RGraph::edge_index(const HyperEdge& e) const {
  auto it = edge_lookup_.find(e);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RGraph::face_degree(const Face& f) const {
  auto i = face_index(f);
  return i ? face_degree(*i) : 0;
}

std::size_t RGraph::min_face_degree() const {
  std::size_t best = faces_.empty() ? 0 : face_edges_[0].size();
  for (const auto& fe : face_edges_) best = std::min(best, fe.size());
  return best;
}

std::size_t RGraph::vertex_face_degree(Vertex v) const {
  std::size_t count = 0;
  for (const auto& f : faces_)
    if (std::binary_search(f.begin(), f.end(), v)) ++count;
  return count;
}

RGraph RGraph::sub(const std::vector<std::size_t>& edge_indices) const {
  std::vector<HyperEdge> es;
  es.reserve(edge_indices.size());
  for (std::size_t j : edge_indices) {
    if (j >= edges_.size()) throw InputError("edge index out of range");
    es.push_back(edges_[j]);
  }
  return RGraph(r_, std::move(es));
}

namespace {

std::vector<std::size_t> face_indices(const RGraph& g, const FaceSet& x) {
  std::vector<std::size_t> out;
  out.reserve(x.size());
  for (const auto& f : x) {
    auto i = g.face_index(f);
    if (!i) throw InputError("face is not in P(G)");
    out.push_back(*i);
  }
  return out;
}

// Index-based neighborhood size; `in_x` marks X.
std::size_t neighborhood_size(const RGraph& g, const std::vector<std::size_t>& x, std::vector<char>& in_x,
                              std::vector<char>& mark) {
  std::size_t count = 0;
  std::vector<std::size_t> touched;
  for (std::size_t i : x) {
    for (std::size_t j : g.edges_of_face(i)) {
      for (std::size_t k : g.faces_of_edge(j)) {
        if (in_x[k] || mark[k]) continue;
        mark[k] = 1;
        touched.push_back(k);
        ++count;
      }
    }
  }
  for (std::size_t k : touched) mark[k] = 0;
  return count;
}

}  // namespace

FaceSet face_neighborhood(const RGraph& g, const FaceSet& x) {
  return conditional_neighborhood(g, x, g.vertices(), nullptr);
}

FaceSet conditional_neighborhood(const RGraph& g, const FaceSet& x, const VertexSet& u, const FaceForbidden* phi) {
  auto xi = face_indices(g, x);
  std::vector<char> in_x(g.num_faces(), 0), hit(g.num_faces(), 0);
  for (std::size_t i : xi) in_x[i] = 1;
  for (std::size_t i : xi) {
    const Face& fp = g.faces()[i];
    const VertexSet* forbidden = nullptr;
    if (phi) {
      auto it = phi->find(fp);
      if (it != phi->end()) forbidden = &it->second;
    }
    for (std::size_t j : g.edges_of_face(i)) {
      const HyperEdge& e = g.edges()[j];
      // The vertex added to f' to form the edge.
      Vertex added = 0;
      for (Vertex v : e)
        if (!std::binary_search(fp.begin(), fp.end(), v)) added = v;
      if (forbidden && std::binary_search(forbidden->begin(), forbidden->end(), added)) continue;
      for (std::size_t k : g.faces_of_edge(j)) {
        if (k == i || in_x[k]) continue;
        const Face& f = g.faces()[k];
        // f' \ f is the single vertex of f' missing from f.
        Vertex dropped = 0;
        for (Vertex v : fp)
          if (!std::binary_search(f.begin(), f.end(), v)) dropped = v;
        if (std::binary_search(u.begin(), u.end(), dropped)) hit[k] = 1;
      }
    }
  }
  FaceSet out;
  for (std::size_t k = 0; k < g.num_faces(); ++k)
    if (hit[k]) out.push_back(g.faces()[k]);
  return out;
}

RGraph induced_by_faces(const RGraph& g, const FaceSet& x) {
  std::vector<char> in_x(g.num_faces(), 0);
  for (const auto& f : x) {
    auto i = g.face_index(f);
    if (i) in_x[*i] = 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto& fs = g.faces_of_edge(j);
    if (std::all_of(fs.begin(), fs.end(), [&](std::size_t k) { return in_x[k] != 0; })) keep.push_back(j);
  }
  return g.sub(keep);
}

RGraph mindeg_subhypergraph(const RGraph& g) {
  if (g.num_edges() == 0) throw PreconditionError("mindeg_subhypergraph needs at least one edge");
  // deg(f) < d(G)/r  <=>  deg(f) * p(G) < e(G), evaluated in integers.
  const std::uint64_t e0 = g.num_edges(), p0 = g.num_faces();
  std::vector<char> alive(g.num_edges(), 1);
  std::vector<std::size_t> degree(g.num_faces());
  for (std::size_t i = 0; i < g.num_faces(); ++i) degree[i] = g.face_degree(i);
  std::vector<std::size_t> queue;
  std::vector<char> queued(g.num_faces(), 0);
  for (std::size_t i = 0; i < g.num_faces(); ++i) {
    if (degree[i] * p0 < e0) {
      queue.push_back(i);
      queued[i] = 1;
    }
  }
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    for (std::size_t j : g.edges_of_face(i)) {
      if (!alive[j]) continue;
      alive[j] = 0;
      for (std::size_t k : g.faces_of_edge(j)) {
        --degree[k];
        if (!queued[k] && degree[k] > 0 && degree[k] * p0 < e0) {
          queued[k] = 1;
          queue.push_back(k);
        }
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.num_edges(); ++j)
    if (alive[j]) keep.push_back(j);
  if (keep.empty()) throw std::logic_error("degree cleaning removed every edge");
  return g.sub(keep);
}

VertexFaceDegreeReport vertex_face_degree_check(const RGraph& g, double d) {
  VertexFaceDegreeReport rep;
  rep.precondition_met = d > 0 && static_cast<double>(g.min_face_degree()) >= d && g.num_edges() > 0;
  if (!rep.precondition_met) return rep;
  rep.bound = static_cast<double>(g.r()) * static_cast<double>(g.num_faces()) / d;
  std::map<Vertex, std::size_t> deg;
  for (const auto& f : g.faces())
    for (Vertex v : f) ++deg[v];
  rep.all_pass = true;
  for (Vertex v : g.vertices()) {
    VertexFaceDegreeRow row{v, deg[v], rep.bound - static_cast<double>(deg[v])};
    if (row.slack < 0) rep.all_pass = false;
    rep.rows.push_back(row);
  }
  return rep;
}

double real_binomial(double x, std::size_t r) {
  double out = 1.0;
  for (std::size_t i = 0; i < r; ++i) out *= (x - static_cast<double>(i)) / static_cast<double>(i + 1);
  return out;
}

ShadowReport shadow_bound_check(const RGraph& g) {
  if (g.num_edges() == 0) throw PreconditionError("shadow bound needs at least one edge");
  const double r = static_cast<double>(g.r());
  const double e = static_cast<double>(g.num_edges());
  // binom(x, r) is increasing on [r, inf) and binom(r + e, r) >= e + 1 > e.
  double lo = r, hi = r + e;
  while (hi - lo > 1e-9 * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (real_binomial(mid, g.r()) < e ? lo : hi) = mid;
  }
  ShadowReport rep;
  rep.x = 0.5 * (lo + hi);
  rep.bound = rep.x - r + 1.0;
  rep.average_degree = g.average_degree();
  rep.holds = rep.average_degree <= rep.bound + 1e-6;
  return rep;
}

double rgraph_score(const RGraph& h, double alpha) {
  if (h.num_edges() == 0) return 0.0;
  return h.average_degree() / std::pow(static_cast<double>(h.num_faces()), alpha);
}

namespace {

double score_of(std::size_t r, std::size_t e, std::size_t p, double alpha) {
  if (e == 0 || p == 0) return 0.0;
  return static_cast<double>(r) * static_cast<double>(e) / std::pow(static_cast<double>(p), 1.0 + alpha);
}

bool nearly_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

// Strictly better: higher score, then fewer edges, then lexicographically smaller.
bool better(double s, const std::vector<std::size_t>& idx, double best_s, const std::vector<std::size_t>& best_idx) {
  if (!nearly_equal(s, best_s)) return s > best_s;
  if (idx.size() != best_idx.size()) return idx.size() < best_idx.size();
  return idx < best_idx;
}

}  // namespace

RGraphMaxResult alpha_max_rgraph(const RGraph& g, double alpha, ExtractMode mode, std::size_t exact_cap) {
  if (!(alpha > 0.0 && alpha < 1.0 / static_cast<double>(g.r() - 1)))
    throw InputError("alpha must lie in (0, 1/(r-1))");
  RGraphMaxResult res;
  const std::size_t m = g.num_edges();
  if (m == 0) {
    res.graph = RGraph(g.r(), {});
    return res;
  }
  std::vector<std::size_t> best_idx;
  double best = -1.0;
  std::vector<std::size_t> count(g.num_faces(), 0);
  if (mode == ExtractMode::kExact) {
    if (m > exact_cap) throw SizeError("exact r-graph extraction is capped at " + std::to_string(exact_cap) + " edges");
    // Gray-code walk over all subsets with incremental face counts.
    std::uint64_t mask = 0;
    std::size_t e = 0, p = 0;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
      std::size_t j = static_cast<std::size_t>(__builtin_ctzll(step));
      mask ^= std::uint64_t{1} << j;
      if (mask >> j & 1) {
        ++e;
        for (std::size_t k : g.faces_of_edge(j))
          if (count[k]++ == 0) ++p;
      } else {
        --e;
        for (std::size_t k : g.faces_of_edge(j))
          if (--count[k] == 0) --p;
      }
      double s = score_of(g.r(), e, p, alpha);
      if (s + 1e-12 * std::max(1.0, best) < best) continue;
      std::vector<std::size_t> idx;
      for (std::size_t b = 0; b < m; ++b)
        if (mask >> b & 1) idx.push_back(b);
      if (best < 0 || better(s, idx, best, best_idx)) {
        best = s;
        best_idx = std::move(idx);
      }
    }
  } else {
    std::vector<char> alive(m, 1);
    std::size_t e = m, p = g.num_faces();
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k : g.faces_of_edge(j)) ++count[k];
    std::vector<std::size_t> current(m);
    for (std::size_t j = 0; j < m; ++j) current[j] = j;
    best = score_of(g.r(), e, p, alpha);
    best_idx = current;
    while (e > 1) {
      std::size_t pick = m;
      double pick_score = -1.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (!alive[j]) continue;
        std::size_t lost = 0;
        for (std::size_t k : g.faces_of_edge(j)) lost += count[k] == 1;
        double s = score_of(g.r(), e - 1, p - lost, alpha);
        if (s > pick_score && !nearly_equal(s, pick_score)) {
          pick_score = s;
          pick = j;
        }
      }
      alive[pick] = 0;
      --e;
      for (std::size_t k : g.faces_of_edge(pick))
        if (--count[k] == 0) --p;
      current.erase(std::find(current.begin(), current.end(), pick));
      double s = score_of(g.r(), e, p, alpha);
      if (better(s, current, best, best_idx)) {
        best = s;
        best_idx = current;
      }
    }
  }
  res.edge_indices = best_idx;
  res.graph = g.sub(best_idx);
  res.score = rgraph_score(res.graph, alpha);
  return res;
}

namespace {

void check_expansion_set(const RGraph& g, const std::vector<std::size_t>& x, double n, double alpha,
                         std::vector<char>& in_x, std::vector<char>& mark, HypmaxReport& rep) {
  for (std::size_t i : x) in_x[i] = 1;
  const double size = static_cast<double>(x.size());
  const double nb = static_cast<double>(neighborhood_size(g, x, in_x, mark));
  for (std::size_t i : x) in_x[i] = 0;
  const double bound = size / (2.0 * static_cast<double>(g.r())) * std::pow(n / size, alpha / (1.0 + alpha));
  const double slack = nb - bound;
  if (rep.sets_checked == 0 || slack < rep.worst_slack) rep.worst_slack = slack;
  ++rep.sets_checked;
  if (slack < -1e-9 * std::max(1.0, bound)) ++rep.expansion_violations;
}

}  // namespace

HypmaxReport verify_hypmax(const RGraph& g, double alpha, const HypmaxOptions& options) {
  HypmaxReport rep;
  if (g.num_edges() == 0) {
    rep.empty = true;
    return rep;
  }
  const double n = static_cast<double>(g.num_faces());
  const double d = g.average_degree();
  rep.c = d / std::pow(n, alpha);
  rep.c_ok = rep.c > 0.5;
  const std::uint64_t e = g.num_edges(), p = g.num_faces();
  for (std::size_t i = 0; i < g.num_faces(); ++i)
    if (g.face_degree(i) * p < e) ++rep.low_degree_faces;
  rep.mindeg_ok = rep.low_degree_faces == 0;

  const double cap = std::pow(1.0 / (2.0 * static_cast<double>(g.r())), (1.0 + alpha) / alpha) * n;
  rep.max_set_size = static_cast<std::size_t>(std::floor(cap + 1e-9));
  rep.max_set_size = std::min<std::size_t>(rep.max_set_size, g.num_faces());
  std::vector<char> in_x(g.num_faces(), 0), mark(g.num_faces(), 0);
  // Count subsets of size 1..k to decide between enumeration and sampling.
  double total = 0, term = 1;
  for (std::size_t k = 1; k <= rep.max_set_size; ++k) {
    term = term * (n - static_cast<double>(k) + 1) / static_cast<double>(k);
    total += term;
  }
  rep.exhaustive = total <= static_cast<double>(options.exhaustive_limit);
  if (rep.max_set_size == 0) {
    // vacuous
  } else if (rep.exhaustive) {
    for (std::size_t k = 1; k <= rep.max_set_size; ++k) {
      std::vector<std::size_t> x(k);
      for (std::size_t i = 0; i < k; ++i) x[i] = i;
      while (true) {
        check_expansion_set(g, x, n, alpha, in_x, mark, rep);
        std::size_t pos = k;
        while (pos > 0 && x[pos - 1] == g.num_faces() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++x[pos - 1];
        for (std::size_t i = pos; i < k; ++i) x[i] = x[i - 1] + 1;
      }
    }
  } else {
    Rng rng(options.seed);
    std::vector<std::size_t> all(g.num_faces());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::size_t k = 1 + static_cast<std::size_t>(rng.below(rep.max_set_size));
      // Partial Fisher-Yates for a uniform k-subset.
      for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(all.size() - i)]);
      std::vector<std::size_t> x(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
      check_expansion_set(g, x, n, alpha, in_x, mark, rep);
    }
  }
  rep.expansion_ok = rep.expansion_violations == 0;
  return rep;
}

namespace {

template <class Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit visit) {
  if (r > n) return;
  std::vector<Vertex> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    visit(c);
    std::size_t pos = r;
    while (pos > 0 && c[pos - 1] == n - r + pos - 1) --pos;
    if (pos == 0) return;
    ++c[pos - 1];
    for (std::size_t i = pos; i < r; ++i) c[i] = c[i - 1] + 1;
  }
}

}  // namespace

RGraph complete_rgraph(std::size_t n, std::size_t r) {
  std::vector<HyperEdge> edges;
  for_each_subset(n, r, [&](const std::vector<Vertex>& c) { edges.push_back(c); });
  return RGraph(r, std::move(edges));
}

RGraph random_rgraph(std::size_t n, std::size_t r, double p, Rng& rng) {
  std::vector<HyperEdge> edges;
  for_each_subset(n, r, [&](const std::vector<Vertex>& c) {
    if (rng.bernoulli(p)) edges.push_back(c);
  });
  return RGraph(r, std::move(edges));
}

RGraph random_rgraph_edges(std::size_t n, std::size_t r, std::size_t m, Rng& rng) {
  if (r > n) throw InputError("uniformity exceeds the vertex count");
  double total = real_binomial(static_cast<double>(n), r);
  if (static_cast<double>(m) > total) throw InputError("more edges requested than r-subsets exist");
  std::set<HyperEdge> chosen;
  while (chosen.size() < m) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < r; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
    HyperEdge e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r));
    std::sort(e.begin(), e.end());
    chosen.insert(std::move(e));
  }
  return RGraph(r, std::vector<HyperEdge>(chosen.begin(), chosen.end()));
}

}  // namespace rsub
