#pragma once

// Restricted-growth-string enumeration of set partitions.  Vertex order[i] is
// placed at depth i into an existing block or a fresh one; each set partition
// is produced exactly once.  Work is split into prefixes so OpenMP loops can
// hand whole subtrees to threads.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition::rgs {

/// Bell number B(n); exact for n <= 25.
std::uint64_t bell(int n);

/// Incrementally maintained blocks of a partial assignment.
struct BlockState {
  int nb = 0;
  std::array<Mask, kMaxVertices> members{};
  std::array<Mask, kMaxVertices> closed{};  // N[block]
  std::array<int, kMaxVertices> sizes{};
  std::array<std::uint8_t, kMaxVertices> label{};  // label[depth] = block of order[depth]
};

/// All restricted-growth strings of the given length, in lexicographic order.
std::vector<std::vector<std::uint8_t>> prefixes(int length);

/// Prefix length that yields enough independent subtrees for `threads`
/// workers on an n-vertex search.
int split_depth(int n, int threads);

/// Rebuilds the state for a prefix assignment of order[0..prefix.size()).
void load_prefix(const Graph& g, std::span<const int> order, std::span<const std::uint8_t> prefix,
                 BlockState& st);

/// Depth-first walk over every completion of st from `depth`.  descend(st,
/// depth) may veto a subtree; leaf(st) sees each complete assignment.  Leaves
/// arrive in lexicographic order unless NewFirst, which opens a fresh block
/// before reusing existing ones.
template <bool NewFirst = false, typename Leaf, typename Descend>
void walk(const Graph& g, std::span<const int> order, BlockState& st, int depth, Leaf& leaf,
          Descend& descend) {
  const int n = static_cast<int>(order.size());
  if (depth == n) {
    leaf(st);
    return;
  }
  if (!descend(st, depth)) return;
  const int v = order[depth];
  const Mask bit = Mask{1} << v;
  const Mask cv = g.closed_row(v);
  const int nb = st.nb;
  for (int t = 0; t <= nb; ++t) {
    const int b = NewFirst ? (t == 0 ? nb : t - 1) : t;
    if (b == nb) {
      st.members[b] = 0;
      st.closed[b] = 0;
      st.sizes[b] = 0;
      st.nb = nb + 1;
    }
    const Mask prev_closed = st.closed[b];
    st.members[b] |= bit;
    st.closed[b] = prev_closed | cv;
    ++st.sizes[b];
    st.label[depth] = static_cast<std::uint8_t>(b);

    walk<NewFirst>(g, order, st, depth + 1, leaf, descend);

    st.members[b] &= ~bit;
    st.closed[b] = prev_closed;
    --st.sizes[b];
    st.nb = nb;
  }
}

}  // namespace coalition::rgs
