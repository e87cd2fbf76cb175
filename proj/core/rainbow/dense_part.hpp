#pragma once

#include "rsub/graph.hpp"

namespace rsub::detail {

// Alpha-maximal part of g with alpha = 1/log2(n): exact extraction up to 20
// vertices, peeling above. Returns g itself (identity mapping) when disabled
// or when the extracted part has no edges.
InducedColoredSubgraph dense_part(const ColoredGraph& g, bool enabled);

}  // namespace rsub::detail
