#pragma once

#include "coalition/graph.hpp"

namespace coalition {

/// N[s] covers every vertex of g.
inline bool is_dominating(const Graph& g, VertexSet s) noexcept {
  return closed_neighborhood(g, s) == g.vertices();
}

/// Minimum dominating set size by increasing-cardinality subset search.
/// Throws EmptyGraph on n = 0.
int domination_number(const Graph& g);

/// Minimum vertex cover size by increasing-cardinality subset search.
int vertex_cover_number(const Graph& g);

}  // namespace coalition
