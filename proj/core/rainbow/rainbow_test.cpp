#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "rsub/errors.hpp"
#include "rsub/generators.hpp"
#include "rsub/graph_io.hpp"
#include "rsub/rainbow.hpp"

namespace rsub {
namespace {

ColoredGraph colored_hypercube(std::size_t dim) {
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (Vertex v = 0; v < (1u << dim); ++v) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vertex w = v ^ (1u << i);
      if (v < w) {
        edges.push_back({v, w});
        colors.push_back(static_cast<Color>(i));
      }
    }
  }
  return ColoredGraph(std::size_t{1} << dim, edges, colors);
}

// Brute force: any rainbow cycle of length 3..max_len.
bool has_rainbow_cycle_oracle(const ColoredGraph& g, std::size_t max_len) {
  const std::size_t n = g.num_vertices();
  for (std::size_t k = 3; k <= std::min(max_len, n); ++k) {
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), 1);
    do {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if (pick[v]) s.push_back(v);
      do {
        if (s[0] != *std::min_element(s.begin(), s.end())) continue;
        std::set<Color> used;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          auto c = g.color_of(s[i], s[(i + 1) % k]);
          ok = c && used.insert(*c).second;
        }
        if (ok) return true;
      } while (std::next_permutation(s.begin() + 1, s.end()));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

// Brute force: does g contain a 6-cycle (equivalently a 1-subdivision of K_3)?
bool has_c6_oracle(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 6) return false;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - 6, pick.end(), 1);
  do {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) s.push_back(v);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < 6 && ok; ++i) ok = g.has_edge(s[i], s[(i + 1) % 6]);
      if (ok) return true;
    } while (std::next_permutation(s.begin() + 1, s.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

SampleConfig small_config(std::uint64_t seed = 7) {
  SampleConfig c;
  c.p = 0.5;
  c.p_c = 0.5;
  c.ell = 6;
  c.seed = seed;
  return c;
}

TEST(Sampling, SprinkleProbabilityInvertsUnion) {
  EXPECT_DOUBLE_EQ(sprinkle_probability(0.3, 1), 0.3);
  for (double p : {1e-9, 0.01, 0.3, 0.9}) {
    for (std::size_t r : {2u, 5u, 40u}) {
      double q = sprinkle_probability(p, r);
      EXPECT_NEAR(-std::expm1(static_cast<double>(r) * std::log1p(-q)), p, 1e-12 * std::max(1.0, p / 1e-9));
    }
  }
  EXPECT_EQ(sprinkle_probability(1.0, 4), 1.0);
  EXPECT_THROW(sprinkle_probability(0.5, 0), InputError);
}

TEST(Sampling, SprinkleIsSeededAndCalibrated) {
  auto a = sprinkle(2000, 3, 0.2, 99);
  auto b = sprinkle(2000, 3, 0.2, 99);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 3u);
  for (const auto& round : a) {
    EXPECT_TRUE(std::is_sorted(round.begin(), round.end()));
    EXPECT_NEAR(static_cast<double>(round.size()) / 2000.0, 0.2, 0.03);
  }
}

TEST(Sampling, ConfigValidation) {
  SampleConfig c;
  EXPECT_NO_THROW(c.validate());
  c.p = 0;
  EXPECT_THROW(c.validate(), InputError);
  c = SampleConfig{};
  c.lambda = 1.0;
  EXPECT_THROW(c.validate(), InputError);
  c = SampleConfig{};
  c.tau = 0.5;
  EXPECT_THROW(c.validate(), InputError);
  c = SampleConfig{};
  c.p = 0.2;
  EXPECT_EQ(c.part_count(), 5u);
  c.p = 0.9;
  EXPECT_EQ(c.part_count(), 2u);
}

TEST(Reach, FullSamplesReachWithinPathBudget) {
  auto g = ColoredGraph::rainbow(path_graph(8));
  VertexSet all(8);
  std::iota(all.begin(), all.end(), 0);
  ColorSet colors(7);
  std::iota(colors.begin(), colors.end(), 0);
  auto r = uq_reach(g, 0, {all}, {colors}, 4);
  EXPECT_EQ(r.reached(), (VertexSet{0, 1, 2, 3, 4}));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(std::includes(r.level(i + 1).begin(), r.level(i + 1).end(), r.level(i).begin(), r.level(i).end()));
  }
  EXPECT_EQ(r.path_to(4), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.path_colors(4), (std::vector<Color>{0, 1, 2, 3}));
}

TEST(Reach, EmptyVertexSampleOnlyReachesNeighbors) {
  auto g = ColoredGraph::rainbow(complete_graph(5));
  ColorSet colors(g.num_colors());
  std::iota(colors.begin(), colors.end(), 0);
  auto r = uq_reach(g, 0, {{}}, {colors}, 3);
  EXPECT_EQ(r.reached(), (VertexSet{0, 1, 2, 3, 4}));
  auto p = path_graph(5);
  auto gp = ColoredGraph::rainbow(p);
  auto rp = uq_reach(gp, 0, {{}}, {ColorSet{0, 1, 2, 3}}, 3);
  EXPECT_EQ(rp.reached(), (VertexSet{0, 1}));
}

TEST(Reach, RepeatedColorBlocksExtension) {
  // 0-1-2-3 colored a, b, a: 3 needs color a twice.
  ColoredGraph g(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 0});
  VertexSet all{0, 1, 2, 3};
  auto r = uq_reach(g, 0, {all}, {ColorSet{0, 1}}, 3);
  EXPECT_TRUE(r.contains(2));
  EXPECT_FALSE(r.contains(3));
  auto only_b = uq_reach(g, 1, {all}, {ColorSet{1}}, 3);
  EXPECT_EQ(only_b.reached(), (VertexSet{1, 2}));
}

TEST(Reach, WitnessPathsRespectSamplesOnRandomInstances) {
  Rng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    auto g = greedy_proper_coloring(random_gnp(10, 0.35, rng));
    const std::size_t rounds = 1 + rng.below(3);
    auto u_rounds = sprinkle(g.num_vertices(), rounds, 0.5, rng);
    auto q_rounds = sprinkle(g.num_colors(), rounds, 0.6, rng);
    std::set<Vertex> u_all;
    std::set<Color> q_all;
    for (const auto& r : u_rounds) u_all.insert(r.begin(), r.end());
    for (const auto& r : q_rounds) q_all.insert(r.begin(), r.end());
    Vertex source = static_cast<Vertex>(rng.below(g.num_vertices()));
    auto reach = uq_reach(g, source, u_rounds, q_rounds, 5);
    for (Vertex v : reach.reached()) {
      auto path = reach.path_to(v);
      auto colors = reach.path_colors(v);
      ASSERT_EQ(path.front(), source);
      ASSERT_EQ(path.back(), v);
      ASSERT_EQ(colors.size() + 1, path.size());
      ASSERT_LE(colors.size(), 5u);
      EXPECT_EQ(std::set<Vertex>(path.begin(), path.end()).size(), path.size());
      EXPECT_EQ(std::set<Color>(colors.begin(), colors.end()).size(), colors.size());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_EQ(g.color_of(path[i], path[i + 1]), colors[i]);
      for (std::size_t i = 1; i + 1 < path.size(); ++i) EXPECT_TRUE(u_all.count(path[i]));
      for (Color c : colors) EXPECT_TRUE(q_all.count(c));
    }
  }
}

TEST(Reach, ExactLengthPathsHaveRequestedLength) {
  auto g = ColoredGraph::rainbow(cycle_graph(6));
  std::vector<char> u(6, 1), q(6, 1);
  auto paths = exact_length_paths(g, 0, u, q, 3);
  ASSERT_EQ(paths[3].size(), 4u);
  EXPECT_TRUE(paths[1].empty());
  EXPECT_TRUE(paths[0].empty());
  u[1] = u[5] = 0;
  auto blocked = exact_length_paths(g, 0, u, q, 3);
  EXPECT_TRUE(blocked[3].empty());
  EXPECT_TRUE(exact_length_paths(g, 0, u, q, 1)[1].size() == 2u);
}

TEST(Cycles, ExtractFromCircuit) {
  // Figure eight 0-1-2-0-3-4-0 with distinct colors.
  auto c = extract_cycle_from_circuit({0, 1, 2, 0, 3, 4, 0}, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(c.colors, (std::vector<Color>{0, 1, 2}));
  // 0-1-2-3-1-... : the first repeat closes 1-2-3.
  auto d = extract_cycle_from_circuit({0, 1, 2, 3, 1, 0}, {0, 1, 2, 3, 4});
  EXPECT_EQ(d.vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_THROW(extract_cycle_from_circuit({0, 1, 2}, {0, 1}), InputError);
  EXPECT_THROW(extract_cycle_from_circuit({0, 1, 2, 0}, {0, 1, 0}), InputError);
}

TEST(Cycles, ValidateRejectsTampering) {
  auto g = ColoredGraph::rainbow(complete_graph(4));
  RainbowCycle c{{0, 1, 2}, {*g.color_of(0, 1), *g.color_of(1, 2), *g.color_of(2, 0)}};
  EXPECT_TRUE(validate_rainbow_cycle(g, c));
  auto bad = c;
  bad.colors[0] = bad.colors[1];
  EXPECT_FALSE(validate_rainbow_cycle(g, bad));
  bad = c;
  bad.vertices = {0, 1, 1};
  EXPECT_FALSE(validate_rainbow_cycle(g, bad));
}

TEST(Cycles, HypercubeHasNoRainbowCycle) {
  // Every cycle in the coordinate-colored cube uses each direction an even
  // number of times.
  for (std::size_t dim : {2u, 3u, 4u}) {
    auto g = colored_hypercube(dim);
    auto exact = find_rainbow_cycle_exact(g, 16);
    EXPECT_EQ(exact.status, SearchStatus::kNone);
    EXPECT_FALSE(find_rainbow_cycle(g, small_config()).has_value());
  }
}

TEST(Cycles, ExactAgreesWithBruteForce) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto base = random_gnp(7, 0.45, rng);
    auto g = greedy_proper_coloring(base);
    for (std::size_t len : {3u, 4u, 5u, 7u}) {
      auto exact = find_rainbow_cycle_exact(g, len);
      bool oracle = has_rainbow_cycle_oracle(g, len);
      EXPECT_EQ(exact.status == SearchStatus::kFound, oracle) << "trial " << trial << " len " << len;
      if (exact.cycle) {
        EXPECT_TRUE(validate_rainbow_cycle(g, *exact.cycle));
        EXPECT_LE(exact.cycle->vertices.size(), len);
      }
    }
  }
}

TEST(Cycles, ExactReportsIndeterminateOnBudget) {
  auto g = colored_hypercube(5);
  auto r = find_rainbow_cycle_exact(g, 32, 100);
  EXPECT_EQ(r.status, SearchStatus::kIndeterminate);
}

TEST(Cycles, SamplerFindsCyclesInDenseGraphs) {
  for (std::size_t n : {5u, 12u, 30u}) {
    auto g = ColoredGraph::rainbow(complete_graph(n));
    auto c = find_rainbow_cycle(g, small_config(n));
    ASSERT_TRUE(c.has_value()) << n;
    EXPECT_TRUE(validate_rainbow_cycle(g, *c));
  }
  auto latin = latin_colored_bipartite(9);
  auto c = find_rainbow_cycle(latin, small_config(3));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(validate_rainbow_cycle(latin, *c));
}

TEST(Cycles, SamplerIsSoundOnRandomGraphs) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = greedy_proper_coloring(random_gnp(9, 0.3, rng));
    auto cfg = small_config(static_cast<std::uint64_t>(trial));
    cfg.retries = 4;
    auto c = find_rainbow_cycle(g, cfg);
    if (c) {
      EXPECT_TRUE(validate_rainbow_cycle(g, *c));
    } else {
      // A miss is allowed; a forest never yields a cycle.
      SUCCEED();
    }
    if (!has_rainbow_cycle_oracle(g, 9)) EXPECT_FALSE(c.has_value());
  }
}

TEST(Subdivision, PairIndexIsLexicographic) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) EXPECT_EQ(SubdivisionCert::pair_index(i, j, 5), k++);
}

TEST(Subdivision, OneSubdivisionMatchesSixCycleOracle) {
  Rng rng(23);
  int positives = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 6 + static_cast<std::size_t>(trial % 4);
    auto g = random_gnp(n, 0.25 + 0.05 * (trial % 5), rng);
    auto cert = find_one_subdivision(g, 3);
    bool oracle = has_c6_oracle(g);
    EXPECT_EQ(cert.has_value(), oracle) << "trial " << trial;
    if (cert) {
      EXPECT_TRUE(validate_subdivision(g, *cert));
      ++positives;
    }
  }
  EXPECT_GT(positives, 10);
}

TEST(Subdivision, OneSubdivisionOfLargerCliques) {
  auto k10 = complete_graph(10);
  auto c = find_one_subdivision(k10, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(validate_subdivision(k10, *c));
  EXPECT_FALSE(find_one_subdivision(complete_graph(9), 4).has_value());  // needs 4 + 6 vertices
  EXPECT_FALSE(find_one_subdivision(cycle_graph(12), 3).has_value());
  auto trivial = find_one_subdivision(path_graph(2), 1);
  ASSERT_TRUE(trivial.has_value());
  EXPECT_EQ(trivial->t(), 1u);
}

TEST(Subdivision, ValidatorRejectsTampering) {
  auto g = complete_graph(7);
  auto c = find_one_subdivision(g, 3);
  ASSERT_TRUE(c.has_value());
  auto bad = *c;
  bad.paths[1][1] = bad.paths[0][1];  // shared middle
  EXPECT_FALSE(validate_subdivision(g, bad));
  bad = *c;
  std::swap(bad.paths[0], bad.paths[1]);
  EXPECT_FALSE(validate_subdivision(g, bad));
  bad = *c;
  bad.path_length = 3;
  EXPECT_FALSE(validate_subdivision(g, bad));
  // Path 0-1-2-3 colored a, b, a subdivides K_2 but is not rainbow.
  ColoredGraph repeat(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 0});
  SubdivisionCert edge{{0, 3}, {{0, 1, 2, 3}}, 3, false};
  EXPECT_TRUE(validate_subdivision(repeat, edge, false));
  EXPECT_FALSE(validate_subdivision(repeat, edge, true));
}

TEST(Subdivision, RainbowSubdivisionInRainbowClique) {
  auto g = ColoredGraph::rainbow(complete_graph(16));
  for (std::size_t t : {3u, 4u}) {
    auto c = find_rainbow_subdivision(g, t, small_config(t));
    ASSERT_TRUE(c.has_value()) << t;
    EXPECT_TRUE(validate_subdivision(g, *c, true));
    EXPECT_EQ(c->t(), t);
  }
}

TEST(Subdivision, RainbowSubdivisionInLatinSquareGraph) {
  auto g = latin_colored_bipartite(16);
  auto c = find_rainbow_subdivision(g, 3, small_config(11));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(validate_subdivision(g, *c, true));
}

TEST(Subdivision, RainbowSubdivisionAbsentInHypercube) {
  auto g = colored_hypercube(4);
  EXPECT_FALSE(find_rainbow_subdivision(g, 3, small_config()).has_value());
}

// Hubs 0..t-1; each pair joined by `copies` internally disjoint paths of
// `internal` internal vertices, every edge with its own color.
ColoredGraph planted_gadget(std::size_t t, std::size_t internal, std::size_t copies) {
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(t);
  for (Vertex a = 0; a < t; ++a) {
    for (Vertex b = a + 1; b < t; ++b) {
      for (std::size_t c = 0; c < copies; ++c) {
        Vertex prev = a;
        for (std::size_t k = 0; k < internal; ++k) {
          edges.push_back({prev, next});
          prev = next++;
        }
        edges.push_back({prev, b});
      }
    }
  }
  return ColoredGraph::rainbow(SimpleGraph(next, edges));
}

TEST(Subdivision, LargeSubdivisionInPlantedGadget) {
  const std::size_t t = 3;
  for (std::size_t internal : {2u, 3u, 4u, 5u}) {
    auto g = planted_gadget(t, internal, t * t);
    auto cfg = small_config(internal);
    cfg.p = cfg.p_c = 1.0;
    cfg.parts = 1;
    auto c = find_large_subdivision(g, t, internal, cfg, true);
    ASSERT_TRUE(c.has_value()) << internal;
    EXPECT_TRUE(validate_subdivision(g, *c, true));
    ASSERT_TRUE(c->path_length.has_value());
    EXPECT_EQ(*c->path_length, internal + 1);
  }
  // With two random parts the short gadgets survive the sampling.
  for (std::size_t internal : {2u, 3u}) {
    auto g = planted_gadget(t, internal, t * t);
    auto c = find_large_subdivision(g, t, internal, small_config(internal), true);
    ASSERT_TRUE(c.has_value()) << internal;
    EXPECT_TRUE(validate_subdivision(g, *c, true));
  }
}

TEST(Subdivision, BipartiteParityRulesOutEvenSubdivisions) {
  // Three paths with an even number of internal vertices each have odd
  // length, so they would close an odd cycle.
  auto g = complete_bipartite(6, 6);
  auto cfg = small_config(3);
  cfg.retries = 4;
  for (std::size_t internal : {2u, 4u}) EXPECT_FALSE(find_large_subdivision(g, 3, internal, cfg).has_value());
  auto odd = find_large_subdivision(g, 3, 1, cfg);
  ASSERT_TRUE(odd.has_value());
  EXPECT_TRUE(validate_subdivision(ColoredGraph::rainbow(g), *odd, false));
  EXPECT_FALSE(odd->rainbow);
}

TEST(Subdivision, LargeSubdivisionRejectsZeroInternal) {
  EXPECT_THROW(find_large_subdivision(complete_graph(5), 3, 0, small_config()), InputError);
}

TEST(Certificates, CycleDocumentRoundTripAndTamper) {
  auto g = latin_colored_bipartite(6);
  auto found = find_rainbow_cycle_exact(g, 6);
  ASSERT_EQ(found.status, SearchStatus::kFound);
  auto cert = graph_cert_from_json(rainbow_cycle_to_json(*found.cycle, graph_digest(g), 5));
  EXPECT_EQ(cert.kind, GraphCertKind::kRainbowCycle);
  EXPECT_EQ(cert.seed, 5u);
  EXPECT_EQ(cert.cycle.vertices, found.cycle->vertices);
  EXPECT_TRUE(validate_graph_cert(cert, g).ok());
  auto swapped = cert;
  std::swap(swapped.cycle.colors[0], swapped.cycle.colors[1]);
  EXPECT_FALSE(validate_graph_cert(swapped, g).ok());
  auto other = latin_colored_bipartite(7);
  EXPECT_FALSE(validate_graph_cert(cert, other).digest_ok);
  EXPECT_THROW(graph_cert_from_json("{\"format\": \"rsub-rainbow-cycle\", \"version\": 1}"), InputError);
  EXPECT_THROW(graph_cert_from_json("{\"format\": \"other\", \"version\": 1}"), InputError);
  EXPECT_THROW(graph_cert_from_json("not json"), InputError);
}

TEST(Certificates, SubdivisionDocument) {
  auto g = cycle_graph(6);
  auto found = find_one_subdivision(g, 3);
  ASSERT_TRUE(found.has_value());
  auto cert = graph_cert_from_json(subdivision_to_json(*found, graph_digest(g), 1));
  EXPECT_EQ(cert.kind, GraphCertKind::kSubdivision);
  EXPECT_EQ(cert.subdivision.branch, found->branch);
  EXPECT_TRUE(validate_graph_cert(cert, g).ok());
  cert.subdivision.paths[0].back() = cert.subdivision.paths[0].front();
  EXPECT_FALSE(validate_graph_cert(cert, g).ok());
}

}  // namespace
}  // namespace rsub
