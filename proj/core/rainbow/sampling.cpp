#include <algorithm>
#include <cmath>
#include <string>

#include "rsub/errors.hpp"
#include "rsub/rainbow.hpp"

namespace rsub {

void SampleConfig::validate() const {
  if (!(p > 0.0 && p <= 1.0)) throw InputError("p must lie in (0,1]");
  if (!(p_c > 0.0 && p_c <= 1.0)) throw InputError("p_c must lie in (0,1]");
  if (!(lambda > 1.0)) throw InputError("lambda must exceed 1");
  if (ell < 1) throw InputError("ell must be at least 1");
  if (!(tau > 0.0 && tau < 0.5)) throw InputError("tau must lie in (0,1/2)");
  if (rounds < 1) throw InputError("rounds must be at least 1");
  if (!(good_fraction > 0.0 && good_fraction <= 1.0)) throw InputError("good fraction must lie in (0,1]");
}

std::size_t SampleConfig::part_count() const {
  if (parts > 0) return parts;
  return std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(1.0 / p - 1e-12)));
}

double sprinkle_probability(double p, std::size_t rounds) {
  if (rounds == 0) throw InputError("rounds must be at least 1");
  if (p >= 1.0) return 1.0;
  // 1 - (1 - p)^{1/rounds}, computed without cancellation.
  return -std::expm1(std::log1p(-p) / static_cast<double>(rounds));
}

double SampleConfig::vertex_round_probability() const { return sprinkle_probability(p, rounds); }
double SampleConfig::color_round_probability() const { return sprinkle_probability(p_c, rounds); }

std::vector<std::vector<std::uint32_t>> sprinkle(std::size_t universe, std::size_t rounds, double per_round_prob,
                                                 Rng& rng) {
  if (rounds < 1) throw InputError("rounds must be at least 1");
  if (!(per_round_prob > 0.0 && per_round_prob <= 1.0)) throw InputError("per-round probability must lie in (0,1]");
  std::vector<std::vector<std::uint32_t>> out(rounds);
  for (auto& round : out) {
    for (std::uint32_t x = 0; x < universe; ++x) {
      if (rng.bernoulli(per_round_prob)) round.push_back(x);
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> sprinkle(std::size_t universe, std::size_t rounds, double per_round_prob,
                                                 std::uint64_t seed) {
  Rng rng(seed);
  return sprinkle(universe, rounds, per_round_prob, rng);
}

namespace {

// masks[k] marks the union of the first min(k, rounds.size()) rounds.
std::vector<std::vector<char>> cumulative_masks(const std::vector<std::vector<std::uint32_t>>& rounds,
                                                std::size_t universe, std::size_t steps) {
  std::vector<std::vector<char>> masks(steps + 1, std::vector<char>(universe, 0));
  for (std::size_t k = 1; k <= steps; ++k) {
    masks[k] = masks[k - 1];
    if (k <= rounds.size()) {
      for (auto x : rounds[k - 1]) {
        if (x < universe) masks[k][x] = 1;
      }
    }
  }
  return masks;
}

}  // namespace

std::vector<Vertex> ReachSet::path_to(Vertex v) const {
  std::vector<Vertex> path;
  if (!contains(v)) return path;
  for (Vertex x = v;; x = parent_[x]) {
    path.push_back(x);
    if (x == source_) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Color> ReachSet::path_colors(Vertex v) const {
  std::vector<Color> colors;
  if (!contains(v)) return colors;
  for (Vertex x = v; x != source_; x = parent_[x]) colors.push_back(parent_color_[x]);
  std::reverse(colors.begin(), colors.end());
  return colors;
}

ReachSet uq_reach(const ColoredGraph& g, Vertex v, const std::vector<VertexSet>& u_rounds,
                  const std::vector<ColorSet>& q_rounds, std::size_t max_len) {
  const std::size_t n = g.num_vertices();
  if (v >= n) throw InputError("source vertex out of range");
  ReachSet r;
  r.source_ = v;
  r.depth_.assign(n, -1);
  r.parent_.assign(n, v);
  r.parent_color_.assign(n, 0);
  r.depth_[v] = 0;
  auto in_u = cumulative_masks(u_rounds, n, max_len);
  auto in_q = cumulative_masks(q_rounds, g.num_colors(), max_len);
  r.levels_.push_back({v});
  std::vector<Color> witness_colors;
  for (std::size_t step = 1; step <= max_len; ++step) {
    std::vector<Vertex> sources;
    for (Vertex x = 0; x < n; ++x) {
      if (x == v || (r.depth_[x] > 0 && in_u[step - 1][x])) sources.push_back(x);
    }
    for (Vertex x : sources) {
      witness_colors = r.path_colors(x);
      std::sort(witness_colors.begin(), witness_colors.end());
      for (const auto& [y, c] : g.colored_neighbors(x)) {
        if (r.depth_[y] >= 0 || !in_q[step][c]) continue;
        if (std::binary_search(witness_colors.begin(), witness_colors.end(), c)) continue;
        r.depth_[y] = static_cast<int>(step);
        r.parent_[y] = x;
        r.parent_color_[y] = c;
      }
    }
    VertexSet level;
    for (Vertex x = 0; x < n; ++x) {
      if (r.depth_[x] >= 0) level.push_back(x);
    }
    r.levels_.push_back(std::move(level));
  }
  return r;
}

std::vector<std::vector<Vertex>> exact_length_paths(const ColoredGraph& g, Vertex v, const std::vector<char>& in_u,
                                                    const std::vector<char>& in_q, std::size_t len) {
  const std::size_t n = g.num_vertices();
  if (v >= n) throw InputError("source vertex out of range");
  std::vector<std::vector<Vertex>> cur(n), cur_colors(n);
  cur[v] = {v};
  for (std::size_t step = 1; step <= len; ++step) {
    std::vector<std::vector<Vertex>> next(n), next_colors(n);
    for (Vertex x = 0; x < n; ++x) {
      if (cur[x].empty()) continue;
      if (step > 1 && !in_u[x]) continue;  // x becomes an internal vertex
      const auto& path = cur[x];
      const auto& colors = cur_colors[x];
      for (const auto& [y, c] : g.colored_neighbors(x)) {
        if (!next[y].empty() || !in_q[c]) continue;
        if (std::find(colors.begin(), colors.end(), c) != colors.end()) continue;
        if (std::find(path.begin(), path.end(), y) != path.end()) continue;
        next[y] = path;
        next[y].push_back(y);
        next_colors[y] = colors;
        next_colors[y].push_back(c);
      }
    }
    cur = std::move(next);
    cur_colors = std::move(next_colors);
  }
  return cur;
}

}  // namespace rsub
