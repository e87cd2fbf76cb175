#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "rsub/errors.hpp"
#include "rsub/hypergraph.hpp"

namespace rsub {
namespace {

bool is_edge(const RGraph& g, const Face& a, const Face& b) {
  std::set<Vertex> u(a.begin(), a.end());
  u.insert(b.begin(), b.end());
  return u.size() == g.r() && g.has_edge(HyperEdge(u.begin(), u.end()));
}

// Brute force over the definition: f outside X, f' in X, f u f' an edge,
// f' \ f inside U, f \ f' outside phi(f').
FaceSet neighborhood_oracle(const RGraph& g, const FaceSet& x, const VertexSet& u, const FaceForbidden* phi) {
  FaceSet out;
  for (const auto& f : g.faces()) {
    if (std::binary_search(x.begin(), x.end(), f)) continue;
    for (const auto& fp : x) {
      if (!is_edge(g, f, fp)) continue;
      Face dropped, added;
      std::set_difference(fp.begin(), fp.end(), f.begin(), f.end(), std::back_inserter(dropped));
      std::set_difference(f.begin(), f.end(), fp.begin(), fp.end(), std::back_inserter(added));
      bool ok = std::includes(u.begin(), u.end(), dropped.begin(), dropped.end());
      if (ok && phi) {
        auto it = phi->find(fp);
        if (it != phi->end())
          for (Vertex v : added) ok = ok && !std::binary_search(it->second.begin(), it->second.end(), v);
      }
      if (ok) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

// Independent maximizer: builds every sub-hypergraph explicitly.
double best_score_oracle(const RGraph& g, double alpha) {
  double best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
    std::vector<HyperEdge> es;
    for (std::size_t j = 0; j < g.num_edges(); ++j)
      if (mask >> j & 1) es.push_back(g.edges()[j]);
    std::set<Face> faces;
    for (const auto& e : es)
      for (const auto& f : faces_of(e)) faces.insert(f);
    double p = static_cast<double>(faces.size());
    double d = static_cast<double>(g.r() * es.size()) / p;
    best = std::max(best, d / std::pow(p, alpha));
  }
  return best;
}

TEST(RGraph, BuildsFacesAndDegrees) {
  RGraph g(3, {{3, 1, 2}, {2, 3, 4}});
  EXPECT_EQ(g.edges(), (std::vector<HyperEdge>{{1, 2, 3}, {2, 3, 4}}));
  EXPECT_EQ(g.num_faces(), 5u);
  EXPECT_EQ(g.vertices(), (VertexSet{1, 2, 3, 4}));
  EXPECT_EQ(g.face_degree(Face{2, 3}), 2u);
  EXPECT_EQ(g.face_degree(Face{1, 4}), 0u);
  EXPECT_DOUBLE_EQ(g.average_degree(), 3.0 * 2 / 5);
  EXPECT_EQ(g.vertex_face_degree(2), 3u);
  EXPECT_THROW(RGraph(3, {{1, 2}}), InputError);
  EXPECT_THROW(RGraph(3, {{1, 1, 2}}), InputError);
  EXPECT_THROW(RGraph(3, {{1, 2, 3}, {3, 2, 1}}), InputError);
  EXPECT_THROW(RGraph(1, {}), InputError);
}

TEST(Neighborhood, SingleEdgeAndFullSet) {
  RGraph g(3, {{1, 2, 3}});
  EXPECT_EQ(face_neighborhood(g, {{1, 2}}), (FaceSet{{1, 3}, {2, 3}}));
  EXPECT_TRUE(face_neighborhood(g, g.faces()).empty());
  EXPECT_THROW(face_neighborhood(g, {{1, 4}}), InputError);
}

TEST(Neighborhood, CompleteFourVertexTriple) {
  RGraph k4(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  // {3,4} is not adjacent: {1,2} u {3,4} has four vertices.
  EXPECT_EQ(face_neighborhood(k4, {{1, 2}}), (FaceSet{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
}

TEST(Neighborhood, ConditionalGoldenValue) {
  RGraph g(3, {{1, 2, 3}});
  // {1,3}: the dropped vertex 2 is not sampled. {2,3}: the dropped vertex 1 is.
  FaceSet got = conditional_neighborhood(g, {{1, 2}}, {1});
  EXPECT_EQ(got, (FaceSet{{2, 3}}));
  EXPECT_EQ(got, neighborhood_oracle(g, {{1, 2}}, {1}, nullptr));
  EXPECT_TRUE(conditional_neighborhood(g, {{1, 2}}, {}).empty());
  FaceForbidden phi{{{1, 2}, {3}}};
  EXPECT_TRUE(conditional_neighborhood(g, {{1, 2}}, {1, 2}, &phi).empty());
}

TEST(Neighborhood, MatchesOracleOnRandomInputs) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 3 + trial % 2;
    auto g = random_rgraph(7, r, 0.3, rng);
    if (g.num_edges() == 0) continue;
    FaceSet x;
    for (const auto& f : g.faces())
      if (rng.bernoulli(0.2)) x.push_back(f);
    VertexSet u;
    for (Vertex v = 0; v < 7; ++v)
      if (rng.bernoulli(0.5)) u.push_back(v);
    FaceForbidden phi;
    for (const auto& f : x) {
      VertexSet bad;
      for (Vertex v = 0; v < 7; ++v)
        if (rng.bernoulli(0.2)) bad.push_back(v);
      phi[f] = bad;
    }
    EXPECT_EQ(conditional_neighborhood(g, x, u, &phi), neighborhood_oracle(g, x, u, &phi));
    EXPECT_EQ(conditional_neighborhood(g, x, u), neighborhood_oracle(g, x, u, nullptr));
    EXPECT_EQ(conditional_neighborhood(g, x, g.vertices()), face_neighborhood(g, x));
  }
}

TEST(Neighborhood, InducedByFaces) {
  RGraph k4(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  auto h = induced_by_faces(k4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
  EXPECT_EQ(h.edges(), (std::vector<HyperEdge>{{1, 2, 3}}));
}

TEST(MinDegree, FixedPointsAndHandExample) {
  RGraph single(3, {{0, 1, 2}});
  EXPECT_EQ(mindeg_subhypergraph(single), single);
  auto k5 = complete_rgraph(5, 3);
  EXPECT_EQ(mindeg_subhypergraph(k5), k5);
  // K_4^(3) plus a pendant edge on the pair {0,1}: d = 15/8, so d/r = 5/8
  // and every face already has degree >= 1. Nothing is removed.
  RGraph pendant(3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}});
  EXPECT_EQ(mindeg_subhypergraph(pendant), pendant);
  // K_6^(3) plus a pendant edge: d/r = 21/17 > 1, so the pendant faces go.
  std::vector<HyperEdge> es = complete_rgraph(6, 3).edges();
  es.push_back({0, 1, 7});
  RGraph mixed(3, es);
  EXPECT_EQ(mindeg_subhypergraph(mixed), complete_rgraph(6, 3));
  EXPECT_THROW(mindeg_subhypergraph(RGraph(3, {})), PreconditionError);
}

TEST(MinDegree, PropertyOnRandomGraphs) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 3 + trial % 2;
    auto g = random_rgraph_edges(8 + trial % 5, r, 5 + trial % 25, rng);
    auto h = mindeg_subhypergraph(g);
    ASSERT_GT(h.num_edges(), 0u);
    for (std::size_t i = 0; i < h.num_faces(); ++i)
      EXPECT_GE(h.face_degree(i) * g.num_faces(), g.num_edges()) << "trial " << trial;
    auto rep = vertex_face_degree_check(h, static_cast<double>(h.min_face_degree()));
    EXPECT_TRUE(rep.precondition_met);
    EXPECT_TRUE(rep.all_pass);
  }
}

TEST(MaxDegree, CompleteAndSingle) {
  auto rep = vertex_face_degree_check(complete_rgraph(5, 3), 3);
  ASSERT_TRUE(rep.precondition_met);
  EXPECT_DOUBLE_EQ(rep.bound, 10.0);
  for (const auto& row : rep.rows) EXPECT_EQ(row.face_degree, 4u);
  EXPECT_TRUE(rep.all_pass);
  auto one = vertex_face_degree_check(RGraph(3, {{0, 1, 2}}), 1);
  EXPECT_DOUBLE_EQ(one.bound, 9.0);
  EXPECT_TRUE(one.all_pass);
  EXPECT_FALSE(vertex_face_degree_check(RGraph(3, {{0, 1, 2}}), 2).precondition_met);
}

TEST(Shadow, TightAndRandom) {
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{6, 3}, {7, 4}, {8, 3}}) {
    auto rep = shadow_bound_check(complete_rgraph(n, r));
    EXPECT_NEAR(rep.x, static_cast<double>(n), 1e-6);
    EXPECT_NEAR(rep.average_degree, rep.bound, 1e-6);
    EXPECT_TRUE(rep.holds);
  }
  auto single = shadow_bound_check(RGraph(4, {{0, 1, 2, 3}}));
  EXPECT_NEAR(single.x, 4.0, 1e-6);
  EXPECT_TRUE(single.holds);
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_rgraph_edges(9, 3, 1 + trial % 40, rng);
    EXPECT_TRUE(shadow_bound_check(g).holds) << trial;
  }
}

TEST(AlphaMax, HandExamples) {
  RGraph single(3, {{0, 1, 2}});
  auto s = alpha_max_rgraph(single, 0.3, ExtractMode::kExact);
  EXPECT_EQ(s.graph, single);
  EXPECT_NEAR(s.score, 1.0 / std::pow(3.0, 0.3), 1e-12);
  RGraph k4(3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(alpha_max_rgraph(k4, 0.3, ExtractMode::kExact).graph, k4);
  std::vector<HyperEdge> es = complete_rgraph(5, 3).edges();
  es.push_back({7, 8, 9});
  RGraph mixed(3, es);
  EXPECT_EQ(alpha_max_rgraph(mixed, 0.3, ExtractMode::kExact).graph, complete_rgraph(5, 3));
  EXPECT_EQ(alpha_max_rgraph(mixed, 0.3, ExtractMode::kPeel).graph, complete_rgraph(5, 3));
  EXPECT_THROW(alpha_max_rgraph(k4, 0.5, ExtractMode::kExact), InputError);
  EXPECT_THROW(alpha_max_rgraph(k4, 0.0, ExtractMode::kExact), InputError);
  EXPECT_THROW(alpha_max_rgraph(complete_rgraph(7, 3), 0.2, ExtractMode::kExact), SizeError);
}

TEST(AlphaMax, ExactMatchesOracleAndPeelIsBounded) {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_rgraph_edges(7, 3, 2 + trial % 10, rng);
    for (double alpha : {0.1, 0.25, 0.4}) {
      auto ex = alpha_max_rgraph(g, alpha, ExtractMode::kExact);
      EXPECT_NEAR(ex.score, best_score_oracle(g, alpha), 1e-12);
      auto pe = alpha_max_rgraph(g, alpha, ExtractMode::kPeel);
      EXPECT_LE(pe.score, ex.score + 1e-12);
      EXPECT_NEAR(pe.score, rgraph_score(pe.graph, alpha), 1e-12);
    }
  }
}

TEST(Hypmax, ExactOutputsPassAllChecks) {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = random_rgraph_edges(6 + trial % 3, 3, 1 + trial % 12, rng);
    for (double alpha : {0.1, 0.25, 0.4}) {
      auto h = alpha_max_rgraph(g, alpha, ExtractMode::kExact).graph;
      auto rep = verify_hypmax(h, alpha);
      EXPECT_TRUE(rep.all_ok()) << trial << " " << alpha;
    }
  }
  EXPECT_TRUE(verify_hypmax(RGraph(3, {}), 0.2).empty);
}

TEST(Hypmax, ExpansionEnumeratesSmallSets) {
  // A complete 3-graph on 40 vertices has p = 780; at alpha = 0.45 the set
  // cap is (1/6)^{1.45/0.45} * 780 > 2.
  auto g = complete_rgraph(40, 3);
  auto rep = verify_hypmax(g, 0.45);
  EXPECT_GE(rep.max_set_size, 2u);
  EXPECT_GT(rep.sets_checked, 780u);
  EXPECT_TRUE(rep.all_ok());
}

TEST(Hypmax, NonMaximalGraphReportsLowDegreeFaces) {
  std::vector<HyperEdge> es = complete_rgraph(6, 3).edges();
  es.push_back({0, 10, 11});
  auto rep = verify_hypmax(RGraph(3, es), 0.3);
  EXPECT_FALSE(rep.mindeg_ok);
  EXPECT_GT(rep.low_degree_faces, 0u);
}

TEST(HypergraphIO, RoundTrips) {
  Rng rng(2);
  auto g = random_rgraph_edges(9, 4, 12, rng);
  std::stringstream text;
  write_hyperedge_list(text, g);
  EXPECT_EQ(read_hyperedge_list(text), g);
  EXPECT_EQ(hypergraph_from_json(hypergraph_to_json(g)), g);
  std::istringstream empty("# uniformity 3\n");
  EXPECT_EQ(read_hyperedge_list(empty).r(), 3u);
  std::istringstream mixed("0 1 2\n0 1\n");
  EXPECT_THROW(read_hyperedge_list(mixed), InputError);
  std::istringstream junk("0 a 2\n");
  EXPECT_THROW(read_hyperedge_list(junk), InputError);
  EXPECT_THROW(hypergraph_from_json("{\"r\": 3, \"edges\": [[0, 1]]}"), InputError);
}

}  // namespace
}  // namespace rsub
