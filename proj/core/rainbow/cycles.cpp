#include <algorithm>
#include <map>
#include <set>

#include "dense_part.hpp"
#include "rsub/errors.hpp"
#include "rsub/rainbow.hpp"

namespace rsub {

bool validate_rainbow_cycle(const ColoredGraph& g, const RainbowCycle& c) {
  const std::size_t k = c.vertices.size();
  if (k < 3 || c.colors.size() != k) return false;
  std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
  std::set<Color> palette(c.colors.begin(), c.colors.end());
  if (seen.size() != k || palette.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (a >= g.num_vertices() || b >= g.num_vertices()) return false;
    auto col = g.color_of(a, b);
    if (!col || *col != c.colors[i]) return false;
  }
  return true;
}

RainbowCycle extract_cycle_from_circuit(const std::vector<Vertex>& walk, const std::vector<Color>& colors) {
  if (walk.size() < 2 || colors.size() + 1 != walk.size()) throw InputError("walk and color lengths do not match");
  if (walk.front() != walk.back()) throw InputError("walk is not closed");
  std::set<Color> palette(colors.begin(), colors.end());
  if (palette.size() != colors.size()) throw InputError("walk repeats an edge color");
  std::map<Vertex, std::size_t> last;
  for (std::size_t j = 0; j < walk.size(); ++j) {
    auto it = last.find(walk[j]);
    if (it != last.end()) {
      std::size_t i = it->second;
      if (j - i < 3) throw InputError("walk retraces an edge");
      RainbowCycle c;
      c.vertices.assign(walk.begin() + static_cast<std::ptrdiff_t>(i), walk.begin() + static_cast<std::ptrdiff_t>(j));
      c.colors.assign(colors.begin() + static_cast<std::ptrdiff_t>(i), colors.begin() + static_cast<std::ptrdiff_t>(j));
      return c;
    }
    last[walk[j]] = j;
  }
  throw InputError("walk is not closed");
}

namespace {

std::optional<RainbowCycle> cycle_attempt(const InducedColoredSubgraph& part, const SampleConfig& config) {
  const ColoredGraph& h = part.graph;
  const std::size_t n = h.num_vertices();
  if (n < 3 || h.num_edges() < 3) return std::nullopt;
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  const std::vector<VertexSet> u_rounds{all};
  for (std::size_t attempt = 0; attempt < config.retries; ++attempt) {
    Rng rng = Rng::stream(config.seed, attempt);
    Vertex source = static_cast<Vertex>(rng.below(n));
    std::vector<ColorSet> classes(4);
    for (Color c = 0; c < h.num_colors(); ++c) classes[rng.below(4)].push_back(c);
    std::vector<ReachSet> reach;
    for (const auto& q : classes) reach.push_back(uq_reach(h, source, u_rounds, {q}, config.ell));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        for (Vertex w : reach[i].reached()) {
          if (w == source || !reach[j].contains(w)) continue;
          // Two color-disjoint rainbow paths source -> w form a rainbow circuit.
          auto walk = reach[i].path_to(w);
          auto colors = reach[i].path_colors(w);
          auto back = reach[j].path_to(w);
          auto back_colors = reach[j].path_colors(w);
          for (std::size_t k = back.size() - 1; k-- > 0;) walk.push_back(back[k]);
          colors.insert(colors.end(), back_colors.rbegin(), back_colors.rend());
          RainbowCycle c = extract_cycle_from_circuit(walk, colors);
          for (auto& v : c.vertices) v = part.to_original[v];
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RainbowCycle> find_rainbow_cycle(const ColoredGraph& g, const SampleConfig& config) {
  config.validate();
  if (g.num_vertices() < 3) return std::nullopt;
  auto part = detail::dense_part(g, config.extract_max_subgraph);
  auto found = cycle_attempt(part, config);
  if (!found && part.graph.num_vertices() != g.num_vertices()) found = cycle_attempt(detail::dense_part(g, false), config);
  if (found && !validate_rainbow_cycle(g, *found)) throw std::logic_error("rainbow cycle certificate failed validation");
  return found;
}

namespace {

struct ExactSearch {
  const ColoredGraph& g;
  std::size_t max_len;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  Vertex start = 0;
  std::vector<Vertex> path;
  std::vector<Color> colors;
  std::vector<char> on_path;
  std::vector<char> used;

  bool dfs(Vertex x) {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    const std::size_t len = path.size() - 1;
    for (const auto& [y, c] : g.colored_neighbors(x)) {
      if (used[c]) continue;
      if (y == start) {
        if (len + 1 >= 3 && len + 1 <= max_len) {
          colors.push_back(c);
          return true;
        }
        continue;
      }
      if (y < start || on_path[y] || len + 2 > max_len) continue;
      path.push_back(y);
      colors.push_back(c);
      on_path[y] = 1;
      used[c] = 1;
      if (dfs(y)) return true;
      used[c] = 0;
      on_path[y] = 0;
      colors.pop_back();
      path.pop_back();
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

ExactCycleResult find_rainbow_cycle_exact(const ColoredGraph& g, std::size_t max_len, std::uint64_t node_budget) {
  ExactSearch s{g, max_len, node_budget, 0, false, 0, {}, {}, {}, {}};
  s.on_path.assign(g.num_vertices(), 0);
  s.used.assign(g.num_colors(), 0);
  ExactCycleResult result;
  for (Vertex v = 0; v < g.num_vertices() && max_len >= 3; ++v) {
    s.start = v;
    s.path = {v};
    s.colors.clear();
    s.on_path[v] = 1;
    bool found = s.dfs(v);
    s.on_path[v] = 0;
    if (found) {
      result.status = SearchStatus::kFound;
      result.cycle = RainbowCycle{s.path, s.colors};
      break;
    }
    if (s.exhausted) {
      result.status = SearchStatus::kIndeterminate;
      break;
    }
  }
  result.nodes = s.nodes;
  return result;
}

}  // namespace rsub
