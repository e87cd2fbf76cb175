#include <gtest/gtest.h>

#include <sstream>

#include "rsub/errors.hpp"
#include "rsub/generators.hpp"
#include "rsub/graph.hpp"
#include "rsub/graph_io.hpp"

namespace rsub {
namespace {

ColoredGraph colored_triangle() {
  // colors a=0 on 01, b=1 on 12, c=2 on 02
  return ColoredGraph(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2});
}

TEST(SimpleGraph, RejectsMalformedEdges) {
  EXPECT_THROW(SimpleGraph(3, {{0, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(SimpleGraph(3, {{0, 3}}), InputError);
}

TEST(SimpleGraph, SortedEdgesAgreeWithAdjacency) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_gnp(15, 0.3, rng);
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      deg_sum += g.degree(v);
      for (Vertex y : g.neighbors(v)) EXPECT_TRUE(g.edge_index(v, y).has_value());
    }
    EXPECT_EQ(deg_sum, 2 * g.num_edges());
    EXPECT_DOUBLE_EQ(g.average_degree(), 2.0 * g.num_edges() / 15.0);
  }
}

TEST(Neighborhood, Examples) {
  EXPECT_EQ(neighborhood(complete_graph(3), {0}), (VertexSet{1, 2}));
  EXPECT_EQ(neighborhood(path_graph(3), {0, 2}), (VertexSet{1}));
  EXPECT_EQ(neighborhood(cycle_graph(6), {0, 3}), (VertexSet{1, 2, 4, 5}));
  EXPECT_THROW(neighborhood(path_graph(3), {7}), InputError);
}

TEST(Neighborhood, DisjointFromSetOnRandomGraphs) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_gnp(12, 0.35, rng);
    VertexSet x;
    for (Vertex v = 0; v < 12; ++v)
      if (rng.bernoulli(0.3)) x.push_back(v);
    auto nb = neighborhood(g, x);
    for (Vertex y : nb) EXPECT_FALSE(std::binary_search(x.begin(), x.end(), y));
  }
}

TEST(RestrictedNeighborhood, Examples) {
  auto g = colored_triangle();
  EXPECT_EQ(restricted_neighborhood(g, {0}, {0, 1, 2}, ForbiddenMap()), neighborhood(g.graph(), {0}));
  EXPECT_EQ(restricted_neighborhood(g, {0}, {0}, ForbiddenMap()), (VertexSet{1}));
  ForbiddenMap phi(3);
  phi.forbid_vertex(0, 1);
  EXPECT_EQ(restricted_neighborhood(g, {0}, {0, 2}, phi), (VertexSet{2}));
}

TEST(RestrictedNeighborhood, ForbiddenColorBlocksEdge) {
  auto g = colored_triangle();
  ForbiddenMap phi(3);
  phi.forbid_color(0, 2);
  EXPECT_EQ(restricted_neighborhood(g, {0}, {0, 1, 2}, phi), (VertexSet{1}));
}

TEST(RestrictedNeighborhood, UnrestrictedEqualsNeighborhood) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = greedy_proper_coloring(random_gnp(14, 0.3, rng));
    ColorSet all;
    for (Color c = 0; c < g.num_colors(); ++c) all.push_back(c);
    VertexSet x;
    for (Vertex v = 0; v < 14; ++v)
      if (rng.bernoulli(0.25)) x.push_back(v);
    EXPECT_EQ(restricted_neighborhood(g, x, all, ForbiddenMap()), neighborhood(g.graph(), x));
  }
}

TEST(InducedSubgraph, Examples) {
  auto tri = induced_subgraph(complete_graph(4), {0, 2, 3});
  EXPECT_EQ(tri.graph, complete_graph(3));
  EXPECT_EQ(tri.to_original, (VertexSet{0, 2, 3}));
  EXPECT_EQ(induced_subgraph(petersen_graph(), {}).graph.num_vertices(), 0u);
  EXPECT_EQ(induced_subgraph(petersen_graph(), {0, 1, 2, 3, 4}).graph, cycle_graph(5));
}

TEST(InducedSubgraph, MonotoneInVertexSet) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_gnp(12, 0.4, rng);
    VertexSet t, s;
    for (Vertex v = 0; v < 12; ++v) {
      if (rng.bernoulli(0.6)) {
        t.push_back(v);
        if (rng.bernoulli(0.5)) s.push_back(v);
      }
    }
    EXPECT_LE(induced_subgraph(g, s).graph.num_edges(), induced_subgraph(g, t).graph.num_edges());
  }
}

TEST(ProperColoring, Examples) {
  EXPECT_TRUE(check_proper_coloring(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 2}));
  EXPECT_FALSE(check_proper_coloring(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 1}));
  EXPECT_THROW(ColoredGraph(4, {{0, 1}, {0, 2}}, {5, 5}), InputError);
  EXPECT_NO_THROW(ColoredGraph(4, {{0, 1}, {0, 2}}, {5, 5}, false));
}

TEST(GraphIo, EdgeListRoundTripIsBitExact) {
  auto g = greedy_proper_coloring(petersen_graph());
  std::ostringstream first;
  write_edge_list(first, graph_data(g));
  std::istringstream in(first.str());
  auto loaded = read_edge_list(in);
  std::ostringstream second;
  write_edge_list(second, loaded);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(loaded.to_colored().colors(), g.colors());
}

TEST(GraphIo, HeaderKeepsIsolatedVertices) {
  std::istringstream in("# vertices 6\n0 1\n1 2\n");
  auto d = read_edge_list(in);
  EXPECT_EQ(d.n, 6u);
  EXPECT_FALSE(d.colored);
}

TEST(GraphIo, RemapsNonIntegerLabels) {
  std::istringstream in("# a comment\nalice bob red\nbob carol blue\n");
  auto d = read_edge_list(in);
  EXPECT_EQ(d.n, 3u);
  EXPECT_EQ(d.vertex_labels, (std::vector<std::string>{"alice", "bob", "carol"}));
  EXPECT_EQ(d.color_labels, (std::vector<std::string>{"red", "blue"}));
  EXPECT_EQ(d.edges[1], (Edge{1, 2}));
}

TEST(GraphIo, RejectsMalformedLines) {
  std::istringstream bad("0 1 2 3\n");
  EXPECT_THROW(read_edge_list(bad), InputError);
  std::istringstream mixed("0 1 0\n1 2\n");
  EXPECT_THROW(read_edge_list(mixed), InputError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(read_edge_list(loop), InputError);
}

TEST(GraphIo, JsonRoundTrip) {
  auto g = greedy_proper_coloring(cycle_graph(7));
  std::ostringstream first;
  write_graph_json(first, graph_data(g));
  std::istringstream in(first.str());
  auto loaded = read_graph_json(in);
  std::ostringstream second;
  write_graph_json(second, loaded);
  EXPECT_EQ(first.str(), second.str());
  std::istringstream junk("{\"n\": 2, \"edges\": [[0]]}");
  EXPECT_THROW(read_graph_json(junk), InputError);
}

}  // namespace
}  // namespace rsub
