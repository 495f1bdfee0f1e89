#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

struct TheoremCheck {
  explicit TheoremCheck(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> examples;  // first few failures, graph6 plus reason
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool ok() const;
  std::string format() const;
};

/// Characterisations of C(G) = n for minimum degree 0 and 1 over all graph
/// classes up to min(max_graph_n, 6) vertices, plus every labelled graph on 7
/// vertices when max_graph_n = 7; then the tree characterisations of C = n
/// and C = n - 1 and the bound C <= n - 2 for n >= 7 over all trees up to
/// max_tree_n.  Throws BadParameter outside max_graph_n <= 7,
/// max_tree_n <= 12.
TheoremReport verify_theorems(int max_graph_n, int max_tree_n);

/// Graph-side part only (no trees).
TheoremReport verify_low_degree(int max_graph_n);

/// Tree-side part only.
TheoremReport verify_trees(int max_tree_n);

}  // namespace coalition
