#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coalition/catalog.hpp"
#include "coalition/partition.hpp"

namespace coalition {

/// A partition of P_k given by index formulas over s_1..s_k (or a fixed
/// partition for a single k), claimed to have a particular coalition graph.
struct ConstructionSpec {
  std::string id;
  int k_min = 1;
  int k_max = 0;  // 0 = unbounded
  CpClass claimed = CpClass::Outside;
  std::string formula;  // human-readable, 1-indexed

  bool in_range(int k) const { return k >= k_min && (k_max == 0 || k <= k_max); }
};

const std::vector<ConstructionSpec>& construction_specs();

/// Throws UnknownSpec.
const ConstructionSpec& construction_spec(std::string_view id);

/// 0-indexed partition of P_k.  Repeated terms inside one block collapse;
/// terms outside 1..k, empty blocks, overlap between blocks or uncovered
/// vertices raise MalformedConstruction.  Throws OutOfRange if k is outside
/// the spec's range.
VertexPartition build_construction(const ConstructionSpec& spec, int k);

struct ConstructionCheck {
  std::string id;
  int k = 0;
  bool ok = false;
  CpClass got = CpClass::Outside;
  std::string detail;  // empty when ok
};

struct ConstructionReport {
  std::vector<ConstructionCheck> checks;
  int failures() const;
};

/// Replays every spec for every k in range up to k_max (>= 10, else
/// BadParameter) through the validator and classifier.
ConstructionReport verify_constructions(int k_max);

}  // namespace coalition
