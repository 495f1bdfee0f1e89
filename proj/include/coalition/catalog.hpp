#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// The eighteen coalition graphs that paths can produce, in table order.
enum class CpClass : std::uint8_t {
  K1,
  K2,
  K2bar,
  K1uK2,
  P3,
  K3,
  K13,
  TwoK2,
  P4,
  C4,
  F1paw,
  K4e,
  P2uP3,
  F2,
  B1bull,
  P5,
  S12,
  S22,
  Outside,
};

inline constexpr int kCpClassCount = 18;

inline constexpr std::array<CpClass, kCpClassCount> kAllCpClasses = {
    CpClass::K1,    CpClass::K2,   CpClass::K2bar, CpClass::K1uK2, CpClass::P3,    CpClass::K3,
    CpClass::K13,   CpClass::TwoK2, CpClass::P4,   CpClass::C4,    CpClass::F1paw, CpClass::K4e,
    CpClass::P2uP3, CpClass::F2,   CpClass::B1bull, CpClass::P5,   CpClass::S12,   CpClass::S22};

std::string_view to_string(CpClass c);
std::optional<CpClass> cp_class_from_string(std::string_view name);

/// Representative graph of a family member (Outside has none).
const Graph& cp_graph(CpClass c);

/// Family member isomorphic to h, or Outside.  Brute-force isomorphism with
/// degree-sequence prefilter.
CpClass classify_cp(const Graph& h);

/// Table-driven classification of a labelled graph on nb <= 64 vertices given
/// its adjacency rows; agrees with classify_cp.  Safe to call concurrently.
CpClass classify_cp_rows(int nb, const Mask* rows) noexcept;

/// Throws if two family members are isomorphic or S(1,2) and S(2,1) differ.
void check_catalog();

// ---------------------------------------------------------------------------
// Named graphs.
//
// Accepted specs (case-sensitive):
//   P<k>, C<k> (k>=3), K<k>, E<k> (edgeless), K<a>,<b> / K_{a,b}, S(r,s),
//   bull, paw, F2, K4-e, any family name (K2bar, TwoK2, F1paw, ...),
//   optional multiplicity prefix ("2K2"), and disjoint unions joined by '+'
//   or by 'u' between terms ("K1uK5", "P2+P3").
// Layouts: paths and cycles are numbered along the path; K_{a,b} puts the a
// side first (star centre = 0); S(r,s) has centres 0 and 1, then the r leaves
// of 0, then the s leaves of 1; bull is triangle 0,1,2 with pendants 1-3 and
// 2-4; paw is the bull without 4; F2 is the cycle 0-1-2-3 with pendant 0-4;
// K4-e misses edge 2-3.  Union terms are numbered left to right.
Graph make_named(std::string_view spec);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite_graph(int a, int b);
/// Centres 0 and 1, then the r leaves of 0, then the s leaves of 1.
Graph double_star_graph(int r, int s);

// ---------------------------------------------------------------------------
// The constructed family for minimum degree one and no full vertex.
//
// Layout: x = 0, y = 1, w = 2, then P, then Q.  q_edges are pairs of Q-local
// indices, y_p is the subset of P-local indices joined to y.
struct F1Params {
  int p_size = 0;
  int q_size = 0;
  std::vector<std::pair<int, int>> q_edges;
  std::vector<int> y_p;
};

/// Throws BadF1Params naming the violated constraint.
Graph build_f1(const F1Params& params);

struct F1Roles {
  int x = -1, y = -1, w = -1;
  VertexSet p, q;
};

/// Role assignment satisfying the construction, if any.
std::optional<F1Roles> f1_roles(const Graph& g);
inline bool is_in_f1(const Graph& g) { return f1_roles(g).has_value(); }

/// Every member with the given |P|, |Q| up to isomorphism.
std::vector<Graph> all_f1_members(int p_size, int q_size);

/// K_1 plus a disjoint K_{n-1} (n >= 1).
bool is_isolate_plus_clique(const Graph& g);
/// K_{n-1} plus one vertex joined to a single clique vertex (n >= 2).
bool is_pendant_clique(const Graph& g);

// ---------------------------------------------------------------------------
// Exhaustive generators.

/// One representative per isomorphism class on exactly n vertices (n <= 8),
/// in canonical form; built by vertex augmentation of the n-1 classes.
std::vector<Graph> graphs_of_order(int n);

/// All classes for 1 <= n <= n_max, optionally filtered.
std::vector<Graph> all_graphs_up_to(int n_max, const std::function<bool(const Graph&)>& filter = {});

/// Calls visit for each of the 2^(n(n-1)/2) labelled graphs on n <= 8 vertices.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

/// One representative per free tree on n vertices (1 <= n <= 14), built by
/// leaf extension of the n-1 trees and deduplicated by tree_canonical_code.
std::vector<Graph> all_trees(int n);

/// Trees from every Prüfer sequence, deduplicated the same way.  Exponential
/// (n^(n-2) sequences); a cross-check for all_trees at small n (<= 9).
std::vector<Graph> all_trees_prufer(int n);

/// Tree from a Prüfer sequence over 0..n-1 (n = seq.size() + 2).
Graph tree_from_prufer(const std::vector<int>& seq);

}  // namespace coalition
