#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rsub/graph.hpp"

namespace rsub {

// Parsed contents of a graph file. When the file used non-integer labels,
// vertex_labels[i] / color_labels[c] hold the original label of id i / c.
struct GraphData {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Color> colors;  // empty when the file carries no colors
  bool colored = false;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> color_labels;

  SimpleGraph to_simple() const;
  // Throws InputError for improper colorings unless require_proper is false,
  // and for uncolored data.
  ColoredGraph to_colored(bool require_proper = true) const;
};

GraphData graph_data(const SimpleGraph& g);
GraphData graph_data(const ColoredGraph& g);

// Edge-list text: one edge per line "u v [color]", '#' starts a comment.
// An optional header comment "# vertices N [colors K]" fixes the vertex
// count so isolated vertices survive a round trip.
GraphData read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const GraphData& g);

// JSON document {"format": "rsub-graph", "version": 1, "n", "edges", "colors"?}.
GraphData read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const GraphData& g);

// Reads either format, picking JSON when the first non-blank byte is '{'.
GraphData load_graph(const std::string& path);
void save_graph(const std::string& path, const GraphData& g, bool json = false);

// Digest of the canonical edge-list text; identifies a host in certificates.
std::string graph_digest(const SimpleGraph& g);
std::string graph_digest(const ColoredGraph& g);

}  // namespace rsub
