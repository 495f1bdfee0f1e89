#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// Ordered list of nonempty, pairwise disjoint blocks covering 0..n-1.
class VertexPartition {
 public:
  VertexPartition() = default;
  /// Throws NotAPartition unless the blocks partition {0..n-1}.
  VertexPartition(int n, std::vector<VertexSet> blocks);

  /// Restricted-growth string: rgs[v] is the block of vertex v, rgs[0] = 0 and
  /// each entry is at most one more than the running maximum.
  static VertexPartition from_rgs(std::span<const std::uint8_t> rgs);
  static VertexPartition singletons(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  VertexSet block(int i) const { return blocks_.at(i); }

  /// Block index of each vertex.
  std::vector<int> block_of() const;
  /// The restricted-growth string of this partition (block order ignored).
  std::vector<std::uint8_t> to_rgs() const;
  /// Same blocks reordered by smallest member.
  VertexPartition canonical() const;
  /// Blocks after renaming vertex v to perm[v].
  VertexPartition relabeled(const std::vector<int>& perm) const;

  bool operator==(const VertexPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
};

/// `0,3|1|2` syntax.  With one_indexed, vertex labels start at 1.
VertexPartition parse_partition(std::string_view text, int n, bool one_indexed = false);
std::string format_partition(const VertexPartition& p, bool one_indexed = false);

enum class BlockKind { SingletonDominating, HasPartner, Orphan, OversizeDominating };

std::string_view to_string(BlockKind kind);

struct BlockStatus {
  BlockKind kind = BlockKind::Orphan;
  std::vector<int> partners;  // block indices forming a coalition with this block
};

struct PartitionValidity {
  bool valid = false;
  std::vector<BlockStatus> blocks;
};

/// Neither set dominates but their union does.  Throws OverlappingSets.
bool forms_coalition(const Graph& g, VertexSet a, VertexSet b);

/// Throws NotAPartition if p does not partition V(g).
PartitionValidity validate_partition(const Graph& g, const VertexPartition& p);

/// Fast path for the all-singletons partition, the test behind C(G) = n.
bool singletons_valid(const Graph& g) noexcept;

struct CoalitionGraph {
  Graph graph;                    // vertex i is block i
  std::vector<VertexSet> blocks;  // originating blocks
};

/// Throws InvalidPartition if p is not a coalition partition of g.
CoalitionGraph coalition_graph(const Graph& g, const VertexPartition& p);

/// DOT with each node labelled by its block, e.g. "{0,3}".
std::string coalition_graph_dot(const CoalitionGraph& cg, bool one_indexed = false);

namespace kernel {

/// Leaf test shared by the enumerators: closed[i] is N[block i], sizes[i] its
/// cardinality, all = V(G).  True iff the blocks form a coalition partition.
inline bool valid_blocks(const Mask* closed, const int* sizes, int nb, Mask all) noexcept {
  for (int i = 0; i < nb; ++i) {
    if (closed[i] == all) {
      if (sizes[i] != 1) return false;
      continue;
    }
    bool partnered = false;
    for (int j = 0; j < nb && !partnered; ++j)
      partnered = j != i && closed[j] != all && (closed[i] | closed[j]) == all;
    if (!partnered) return false;
  }
  return true;
}

/// Coalition-graph rows for blocks already known to be valid.
inline void coalition_rows(const Mask* closed, int nb, Mask all, Mask* rows) noexcept {
  for (int i = 0; i < nb; ++i) rows[i] = 0;
  for (int i = 0; i < nb; ++i) {
    if (closed[i] == all) continue;
    for (int j = i + 1; j < nb; ++j) {
      if (closed[j] != all && (closed[i] | closed[j]) == all) {
        rows[i] |= Mask{1} << j;
        rows[j] |= Mask{1} << i;
      }
    }
  }
}

}  // namespace kernel

}  // namespace coalition
