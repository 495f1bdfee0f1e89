#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coalition/catalog.hpp"
#include "coalition/partition.hpp"

namespace coalition {

/// Every coalition graph class realised by some coalition partition of a
/// graph, found by scanning all set partitions.
struct CensusReport {
  int k = 0;  // order of the scanned graph
  std::array<std::optional<VertexPartition>, kCpClassCount> witnesses;  // least RGS per class
  std::uint64_t partitions_scanned = 0;
  std::uint64_t valid_partitions = 0;
  int max_blocks = 0;  // largest valid partition seen
  std::uint64_t outside_count = 0;
  std::optional<VertexPartition> outside_example;

  bool realizes(CpClass c) const { return witnesses[static_cast<int>(c)].has_value(); }
  int nc() const;
  std::vector<CpClass> realizable() const;
};

/// Census of the path P_k, 1 <= k <= 13 (TooLarge otherwise).
CensusReport census_path(int k);
CensusReport census_path_serial(int k);

/// Census of an arbitrary graph with 1 <= n <= 13.
CensusReport census_graph(const Graph& g, bool parallel = true);

/// Machine-readable lines `k,class,Y|N,witness` (witness empty for N),
/// one per family member in table order.
std::vector<std::string> census_lines(const CensusReport& r, bool one_indexed = false);

// ---------------------------------------------------------------------------
// Expected grid: Y/N per (class, k) for k = 1..9 and a final column for every
// k >= 10.  Lowercase marks entries that were only established empirically.

char expected_cell(CpClass c, int k);

/// Expected number of realisable classes on P_k (k >= 1).
int expected_nc(int k);

struct GridMismatch {
  CpClass cls;
  int k = 0;
  char expected = 'N';
  bool computed = false;
  bool hard() const { return expected == 'Y' || expected == 'N'; }
};

struct Table1Report {
  int k_max = 0;
  std::vector<CensusReport> censuses;  // censuses[k - 1]
  std::vector<GridMismatch> mismatches;
  int hard_mismatches() const;
  int soft_mismatches() const;
};

/// Censuses for k = 1..k_max (<= 13) diffed against the expected grid.
Table1Report table1(int k_max);

/// Human-readable grid; mismatching cells are marked with '!' (hard) or '?'.
std::string format_table1(const Table1Report& r);

}  // namespace coalition
