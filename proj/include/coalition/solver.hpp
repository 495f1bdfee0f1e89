#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "coalition/graph.hpp"
#include "coalition/partition.hpp"

namespace coalition {

/// Largest order coalition_number_enumerate accepts.
inline constexpr int kMaxEnumerateOrder = 13;

enum class Method { Enumerate, BranchAndBound };

struct SolverConfig {
  Method method = Method::BranchAndBound;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

struct SolverStats {
  std::uint64_t partitions_examined = 0;  // complete assignments reached
  std::uint64_t nodes_pruned = 0;
  double elapsed_seconds = 0.0;
};

struct SolverResult {
  int value = 0;
  std::optional<VertexPartition> witness;
  SolverStats stats;
  bool limit_exceeded = false;  // value is the best incumbent, not proven
  bool no_partition = false;    // no coalition partition exists
};

/// Scans every set partition.  The witness is the lexicographically least
/// restricted-growth string among maximum partitions.  Throws
/// TooLargeForEnumeration above kMaxEnumerateOrder.
SolverResult coalition_number_enumerate(const Graph& g);

/// Single-threaded reference for coalition_number_enumerate.
SolverResult coalition_number_enumerate_serial(const Graph& g);

/// Branch and bound over vertices in descending-degree order, seeded with
/// upper_bound(g).  Throws BadParameter on non-positive limits.
SolverResult coalition_number_bnb(const Graph& g, const SolverConfig& cfg = {});

/// Dispatches on cfg.method.
SolverResult solve(const Graph& g, const SolverConfig& cfg = {});

/// Minimum of the applicable degree bounds (and n).
int upper_bound(const Graph& g);

/// Lexicographically least restricted-growth partition with exactly `blocks`
/// blocks that is a coalition partition, if any.
std::optional<VertexPartition> least_partition_with(const Graph& g, int blocks);

}  // namespace coalition
