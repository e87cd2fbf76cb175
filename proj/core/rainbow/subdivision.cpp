#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "dense_part.hpp"
#include "rsub/errors.hpp"
#include "rsub/rainbow.hpp"

namespace rsub {

std::size_t SubdivisionCert::pair_index(std::size_t i, std::size_t j, std::size_t t) {
  return i * (2 * t - i - 1) / 2 + (j - i - 1);
}

namespace {

bool validate_paths(std::size_t n, const SubdivisionCert& cert,
                    const std::function<std::optional<Color>(Vertex, Vertex)>& edge_color, bool rainbow) {
  const std::size_t t = cert.branch.size();
  if (cert.paths.size() != t * (t - 1) / 2 && !(t <= 1 && cert.paths.empty())) return false;
  std::vector<char> used(n, 0);
  for (Vertex b : cert.branch) {
    if (b >= n || used[b]) return false;
    used[b] = 1;
  }
  std::set<Color> colors;
  std::size_t edge_total = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const auto& p = cert.paths[SubdivisionCert::pair_index(i, j, t)];
      if (p.size() < 2 || p.front() != cert.branch[i] || p.back() != cert.branch[j]) return false;
      if (cert.path_length && p.size() - 1 != *cert.path_length) return false;
      for (std::size_t k = 1; k + 1 < p.size(); ++k) {
        if (p[k] >= n || used[p[k]]) return false;
        used[p[k]] = 1;
      }
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        auto c = edge_color(p[k], p[k + 1]);
        if (!c) return false;
        colors.insert(*c);
        ++edge_total;
      }
    }
  }
  return !rainbow || colors.size() == edge_total;
}

using MiddleFn = std::function<VertexSet(Vertex, Vertex)>;

struct BranchSearchResult {
  std::vector<Vertex> branch;   // ascending
  std::vector<Vertex> middles;  // per pair, lexicographic pair order
};

using AcceptFn = std::function<bool(const BranchSearchResult&)>;

// Chooses t branch vertices from `candidates` and a distinct middle for each
// pair from middle(a, b) (a < b), avoiding branch vertices. Keeps searching
// until `accept` approves a choice or a budget runs out.
std::optional<BranchSearchResult> search_branches(std::size_t t, std::vector<Vertex> candidates,
                                                  const MiddleFn& middle, std::uint64_t budget,
                                                  const AcceptFn& accept = {}, std::size_t max_accept_calls = 2000) {
  std::map<std::pair<Vertex, Vertex>, VertexSet> cache;
  auto mids = [&](Vertex a, Vertex b) -> const VertexSet& {
    if (a > b) std::swap(a, b);
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), middle(a, b)).first;
    return it->second;
  };
  std::vector<Vertex> chosen;
  std::uint64_t visited = 0;
  std::size_t accept_calls = 0;
  std::optional<BranchSearchResult> result;

  auto try_match = [&]() -> bool {
    std::vector<Vertex> branch = chosen;
    std::sort(branch.begin(), branch.end());
    std::vector<const VertexSet*> options;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) options.push_back(&mids(branch[i], branch[j]));
    std::set<Vertex> branch_set(branch.begin(), branch.end());
    std::map<Vertex, std::size_t> owner;
    std::vector<Vertex> assigned(options.size());
    std::function<bool(std::size_t, std::set<Vertex>&)> augment = [&](std::size_t pair, std::set<Vertex>& seen) {
      for (Vertex m : *options[pair]) {
        if (branch_set.count(m) || seen.count(m)) continue;
        seen.insert(m);
        auto it = owner.find(m);
        if (it == owner.end() || augment(it->second, seen)) {
          owner[m] = pair;
          assigned[pair] = m;
          return true;
        }
      }
      return false;
    };
    for (std::size_t pair = 0; pair < options.size(); ++pair) {
      std::set<Vertex> seen;
      if (!augment(pair, seen)) return false;
    }
    BranchSearchResult candidate{branch, assigned};
    if (accept) {
      if (++accept_calls > max_accept_calls) {
        visited = budget;
        return false;
      }
      if (!accept(candidate)) return false;
    }
    result = candidate;
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (chosen.size() == t) return try_match();
    for (std::size_t idx = from; idx < candidates.size(); ++idx) {
      if (candidates.size() - idx < t - chosen.size()) return false;
      if (++visited > budget) return false;
      Vertex c = candidates[idx];
      bool ok = true;
      for (Vertex b : chosen) {
        const auto& m = mids(b, c);
        bool any = false;
        for (Vertex x : m) {
          if (x != c && std::find(chosen.begin(), chosen.end(), x) == chosen.end()) {
            any = true;
            break;
          }
        }
        if (!any) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(c);
      if (extend(idx + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  extend(0);
  return result;
}

SubdivisionCert trivial_cert(std::size_t n, std::size_t t) {
  SubdivisionCert cert;
  for (Vertex v = 0; v < t && v < n; ++v) cert.branch.push_back(v);
  cert.rainbow = true;
  return cert;
}

VertexSet sorted_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> ranked_candidates(std::size_t n, const std::function<std::size_t(Vertex)>& score,
                                      std::size_t min_score, std::size_t limit) {
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < n; ++v) {
    if (score(v) >= min_score) cand.push_back(v);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return score(a) > score(b); });
  if (cand.size() > limit) cand.resize(limit);
  return cand;
}

}  // namespace

bool validate_subdivision(const SimpleGraph& g, const SubdivisionCert& cert) {
  return validate_paths(
      g.num_vertices(), cert,
      [&](Vertex a, Vertex b) -> std::optional<Color> {
        auto idx = g.edge_index(a, b);
        if (!idx) return std::nullopt;
        return static_cast<Color>(*idx);
      },
      false);
}

bool validate_subdivision(const ColoredGraph& g, const SubdivisionCert& cert, bool rainbow) {
  return validate_paths(
      g.num_vertices(), cert, [&](Vertex a, Vertex b) { return g.color_of(a, b); }, rainbow);
}

std::optional<SubdivisionCert> find_one_subdivision(const SimpleGraph& g, std::size_t t,
                                                    const OneSubdivisionOptions& options) {
  const std::size_t n = g.num_vertices();
  if (t <= 1) {
    if (n < t) return std::nullopt;
    return trivial_cert(n, t);
  }
  if (n < t + t * (t - 1) / 2) return std::nullopt;
  auto cand = ranked_candidates(
      n, [&](Vertex v) { return g.degree(v); }, t - 1, options.candidate_limit);
  auto found = search_branches(
      t, cand, [&](Vertex a, Vertex b) { return sorted_intersection(g.neighbors(a), g.neighbors(b)); },
      options.subset_budget);
  if (!found) return std::nullopt;
  SubdivisionCert cert;
  cert.branch = found->branch;
  cert.path_length = 2;
  std::size_t k = 0;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) cert.paths.push_back({cert.branch[i], found->middles[k++], cert.branch[j]});
  if (!validate_subdivision(g, cert)) throw std::logic_error("1-subdivision certificate failed validation");
  return cert;
}

namespace {

struct Sampling {
  std::vector<std::vector<char>> in_u;  // per part, vertex mask
  std::vector<std::vector<char>> in_q;  // per part, color mask
};

Sampling random_parts(const ColoredGraph& h, std::size_t s, Rng& rng, bool sample_colors) {
  Sampling out;
  out.in_u.assign(s, std::vector<char>(h.num_vertices(), 0));
  out.in_q.assign(s, std::vector<char>(h.num_colors(), sample_colors ? 0 : 1));
  for (Vertex v = 0; v < h.num_vertices(); ++v) out.in_u[rng.below(s)][v] = 1;
  if (sample_colors) {
    for (Color c = 0; c < h.num_colors(); ++c) out.in_q[rng.below(s)][c] = 1;
  }
  return out;
}

template <class T>
std::vector<T> mask_to_list(const std::vector<char>& mask) {
  std::vector<T> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(static_cast<T>(i));
  }
  return out;
}

// Greedy bookkeeping for substituting witness paths without reusing vertices
// or colors.
struct Usage {
  const ColoredGraph& h;
  bool rainbow;
  std::vector<char> vertex_used;
  std::set<Color> colors_used;

  bool fits(const std::vector<Vertex>& path) const {
    std::set<Color> local;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (vertex_used[path[k]]) return false;
    }
    if (!rainbow) return true;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      Color c = *h.color_of(path[k], path[k + 1]);
      if (colors_used.count(c) || !local.insert(c).second) return false;
    }
    return true;
  }

  void take(const std::vector<Vertex>& path) {
    for (std::size_t k = 1; k + 1 < path.size(); ++k) vertex_used[path[k]] = 1;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) colors_used.insert(*h.color_of(path[k], path[k + 1]));
  }
};

std::vector<Vertex> join(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

SubdivisionCert to_original(SubdivisionCert cert, const VertexSet& map) {
  for (auto& b : cert.branch) b = map[b];
  for (auto& p : cert.paths)
    for (auto& v : p) v = map[v];
  return cert;
}

std::optional<SubdivisionCert> rainbow_attempt(const InducedColoredSubgraph& part, std::size_t t,
                                               const SampleConfig& config, std::size_t attempt) {
  const ColoredGraph& h = part.graph;
  const std::size_t n = h.num_vertices();
  const std::size_t s = config.part_count();
  const std::size_t need =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(static_cast<double>(s) * config.good_fraction - 1e-9)));
  Rng rng = Rng::stream(config.seed, attempt);
  Sampling smp = random_parts(h, s, rng, config.p_c < 1.0);
  std::vector<std::vector<ReachSet>> reach(n);
  for (Vertex x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < s; ++k) {
      reach[x].push_back(uq_reach(h, x, {mask_to_list<Vertex>(smp.in_u[k])}, {mask_to_list<Color>(smp.in_q[k])},
                                  config.ell));
    }
  }
  std::vector<Edge> good;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      std::size_t fwd = 0, bwd = 0;
      for (std::size_t k = 0; k < s; ++k) {
        fwd += reach[x][k].contains(y);
        bwd += reach[y][k].contains(x);
      }
      if (std::max(fwd, bwd) >= need) good.push_back({x, y});
    }
  }
  SimpleGraph j_graph(n, good);

  // Witness inside part k that avoids every vertex and color taken so far.
  auto substitute = [&](Usage& usage, Vertex x, Vertex y) -> std::optional<std::vector<Vertex>> {
    for (std::size_t k = 0; k < s; ++k) {
      if (!reach[x][k].contains(y) && !reach[y][k].contains(x)) continue;
      VertexSet u;
      for (Vertex v = 0; v < n; ++v)
        if (smp.in_u[k][v] && !usage.vertex_used[v]) u.push_back(v);
      ColorSet q;
      for (Color c = 0; c < h.num_colors(); ++c)
        if (smp.in_q[k][c] && !usage.colors_used.count(c)) q.push_back(c);
      auto fresh = uq_reach(h, x, {u}, {q}, config.ell);
      if (!fresh.contains(y)) continue;
      auto path = fresh.path_to(y);
      usage.take(path);
      return path;
    }
    return std::nullopt;
  };
  std::optional<SubdivisionCert> cert;
  auto realize = [&](const BranchSearchResult& one) {
    Usage usage{h, true, std::vector<char>(n, 0), {}};
    for (Vertex b : one.branch) usage.vertex_used[b] = 1;
    for (Vertex m : one.middles) usage.vertex_used[m] = 1;
    SubdivisionCert out;
    out.branch = one.branch;
    out.rainbow = true;
    std::size_t pair = 0;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j, ++pair) {
        auto first = substitute(usage, one.branch[i], one.middles[pair]);
        if (!first) return false;
        auto second = substitute(usage, one.middles[pair], one.branch[j]);
        if (!second) return false;
        out.paths.push_back(join(*first, *second));
      }
    }
    cert = out;
    return true;
  };
  auto cand = ranked_candidates(
      n, [&](Vertex v) { return j_graph.degree(v); }, t - 1, 40);
  search_branches(
      t, cand, [&](Vertex a, Vertex b) { return sorted_intersection(j_graph.neighbors(a), j_graph.neighbors(b)); },
      2'000'000, realize);
  if (!cert) return std::nullopt;
  return to_original(*cert, part.to_original);
}

}  // namespace

std::optional<SubdivisionCert> find_rainbow_subdivision(const ColoredGraph& g, std::size_t t,
                                                        const SampleConfig& config) {
  config.validate();
  if (t <= 1) {
    if (g.num_vertices() < t) return std::nullopt;
    return trivial_cert(g.num_vertices(), t);
  }
  std::vector<InducedColoredSubgraph> parts{detail::dense_part(g, config.extract_max_subgraph)};
  if (parts[0].graph.num_vertices() != g.num_vertices()) parts.push_back(detail::dense_part(g, false));
  for (const auto& part : parts) {
    for (std::size_t attempt = 0; attempt < config.retries; ++attempt) {
      auto cert = rainbow_attempt(part, t, config, attempt);
      if (cert) {
        if (!validate_subdivision(g, *cert, true)) throw std::logic_error("rainbow subdivision failed validation");
        return cert;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::optional<SubdivisionCert> large_attempt(const InducedColoredSubgraph& part, std::size_t t, std::size_t internal,
                                             const SampleConfig& config, std::size_t attempt) {
  const bool rainbow = true;
  const ColoredGraph& h = part.graph;
  const std::size_t n = h.num_vertices();
  const std::size_t s = config.part_count();
  const std::size_t h1 = (internal + 1) / 2, h2 = internal + 1 - h1;
  Rng rng = Rng::stream(config.seed, attempt);
  Sampling smp = random_parts(h, s, rng, config.p_c < 1.0);
  // paths[len][x][k][y]: witness of an exact-length (U_k, Q_k)-path x -> y.
  std::map<std::size_t, std::vector<std::vector<std::vector<std::vector<Vertex>>>>> paths;
  for (std::size_t len : {h1, h2}) {
    if (paths.count(len)) continue;
    auto& table = paths[len];
    table.assign(n, {});
    for (Vertex x = 0; x < n; ++x)
      for (std::size_t k = 0; k < s; ++k) table[x].push_back(exact_length_paths(h, x, smp.in_u[k], smp.in_q[k], len));
  }
  // Number of parts carrying a path of the given length between x and y, in
  // either direction.
  auto multiplicity = [&](std::size_t len, Vertex x, Vertex y) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < s; ++k) count += !paths[len][x][k][y].empty() || !paths[len][y][k][x].empty();
    return count;
  };
  const std::size_t thr = std::max<std::size_t>(1, config.pair_threshold);
  auto linked = [&](std::size_t len, Vertex x, Vertex y) { return multiplicity(len, x, y) >= thr; };
  auto middles = [&](Vertex a, Vertex b) {
    VertexSet out;
    for (Vertex m = 0; m < n; ++m) {
      if (m == a || m == b) continue;
      if ((linked(h1, a, m) && linked(h2, m, b)) || (linked(h2, a, m) && linked(h1, m, b))) out.push_back(m);
    }
    return out;
  };
  std::vector<std::size_t> link_degree(n, 0);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (x != y && (linked(h1, x, y) || linked(h2, x, y))) ++link_degree[x];
  auto cand = ranked_candidates(
      n, [&](Vertex v) { return link_degree[v]; }, t - 1, 40);
  // Exact-length witness x -> y inside part k avoiding everything in `use`.
  auto fresh_path = [&](const Usage& use, Vertex x, Vertex y, std::size_t len,
                        std::size_t k) -> std::optional<std::vector<Vertex>> {
    if (paths[len][x][k][y].empty() && paths[len][y][k][x].empty()) return std::nullopt;
    std::vector<char> u = smp.in_u[k], q = smp.in_q[k];
    for (Vertex v = 0; v < n; ++v)
      if (use.vertex_used[v]) u[v] = 0;
    for (Color c : use.colors_used) q[c] = 0;
    auto found_paths = exact_length_paths(h, x, u, q, len);
    if (found_paths[y].empty() || !use.fits(found_paths[y])) return std::nullopt;
    return found_paths[y];
  };
  std::optional<SubdivisionCert> cert;
  auto realize = [&](const BranchSearchResult& found) {
    SubdivisionCert out;
    Usage usage{h, rainbow, std::vector<char>(n, 0), {}};
    for (Vertex b : found.branch) usage.vertex_used[b] = 1;
    for (Vertex m : found.middles) usage.vertex_used[m] = 1;
    out.branch = found.branch;
    out.path_length = internal + 1;
    out.rainbow = rainbow;
    std::size_t pair = 0;
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j, ++pair) {
        Vertex a = found.branch[i], b = found.branch[j], m = found.middles[pair];
        usage.vertex_used[m] = 0;  // the pair's own middle becomes internal
        std::optional<std::vector<Vertex>> full;
        for (auto [first_len, second_len] : {std::pair{h1, h2}, std::pair{h2, h1}}) {
          for (std::size_t k1 = 0; k1 < s && !full; ++k1) {
            auto p1 = fresh_path(usage, a, m, first_len, k1);
            if (!p1) continue;
            Usage trial = usage;
            trial.take(*p1);
            trial.vertex_used[m] = 1;
            for (std::size_t k2 = 0; k2 < s && !full; ++k2) {
              auto p2 = fresh_path(trial, m, b, second_len, k2);
              if (p2 && usage.fits(join(*p1, *p2))) full = join(*p1, *p2);
            }
          }
          if (full) break;
        }
        if (!full) return false;
        usage.take(*full);
        out.paths.push_back(*full);
      }
    }
    cert = out;
    return true;
  };
  search_branches(t, cand, middles, 2'000'000, realize);
  if (!cert) return std::nullopt;
  return to_original(*cert, part.to_original);
}

}  // namespace

std::optional<SubdivisionCert> find_large_subdivision(const ColoredGraph& g, std::size_t t, std::size_t internal,
                                                      const SampleConfig& config, bool rainbow) {
  config.validate();
  if (internal < 1) throw InputError("each edge must be subdivided at least once");
  if (t <= 1) {
    if (g.num_vertices() < t) return std::nullopt;
    auto cert = trivial_cert(g.num_vertices(), t);
    cert.path_length = internal + 1;
    cert.rainbow = rainbow;
    return cert;
  }
  if (!rainbow) {
    // Vertex sampling only: distinct colors per edge make every path rainbow.
    ColoredGraph plain = ColoredGraph::rainbow(g.graph());
    SampleConfig mono = config;
    mono.p_c = 1.0;
    auto cert = find_large_subdivision(plain, t, internal, mono, true);
    if (cert) {
      cert->rainbow = false;
      if (!validate_subdivision(g, *cert, false)) throw std::logic_error("subdivision failed validation");
    }
    return cert;
  }
  std::vector<InducedColoredSubgraph> parts{detail::dense_part(g, config.extract_max_subgraph)};
  if (parts[0].graph.num_vertices() != g.num_vertices()) parts.push_back(detail::dense_part(g, false));
  for (const auto& part : parts) {
    for (std::size_t attempt = 0; attempt < config.retries; ++attempt) {
      auto cert = large_attempt(part, t, internal, config, attempt);
      if (cert) {
        if (!validate_subdivision(g, *cert, true)) throw std::logic_error("subdivision failed validation");
        return cert;
      }
    }
  }
  return std::nullopt;
}

std::optional<SubdivisionCert> find_large_subdivision(const SimpleGraph& g, std::size_t t, std::size_t internal,
                                                      const SampleConfig& config) {
  return find_large_subdivision(ColoredGraph::rainbow(g), t, internal, config, false);
}

}  // namespace rsub
