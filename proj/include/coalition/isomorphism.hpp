#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// Brute-force isomorphism test over bijections after degree-sequence and
/// edge-count prefilters.  Meant for n <= 10.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Lexicographically least adjacency bit string over all relabellings, with
/// pairs taken in graph6 column order (0,1),(0,2),(1,2),(0,3),...; the first
/// pair is the most significant bit of the returned word.  Isomorphic graphs of
/// equal order have equal codes.  Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Relabelling (vertex v -> perm[v]) that realises canonical_code.
std::vector<int> canonical_labeling(const Graph& g);

/// Graph whose plain adjacency code equals canonical_code(g).
Graph canonical_graph(const Graph& g);

/// Canonical string for free trees: rooted encoding at the centre (the
/// smaller of the two encodings for a bicentral tree).
std::string tree_canonical_code(const Graph& tree);

}  // namespace coalition
