#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coalition {

inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

/// Mask with bits 0..n-1 set.
constexpr Mask full_mask(int n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// A set of vertex indices of one graph, stored as a single word.
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(Mask bits) noexcept : bits_(bits) {}

  static constexpr VertexSet single(int v) noexcept { return VertexSet(Mask{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) noexcept {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return VertexSet(m);
  }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const noexcept = default;

  /// Members in increasing order.
  std::vector<int> to_vector() const;

  class iterator {
   public:
    constexpr explicit iterator(Mask m) noexcept : m_(m) {}
    constexpr int operator*() const noexcept { return std::countr_zero(m_); }
    constexpr iterator& operator++() noexcept { m_ &= m_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const noexcept { return m_ != o.m_; }
   private:
    Mask m_;
  };
  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

 private:
  Mask bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph on at most 64 vertices.  Vertex v's
/// neighbours are the set bits of adjacency row v.
class Graph {
 public:
  Graph() = default;

  /// Throws IndexOutOfRange, LoopEdge or TooLarge.  Duplicate edges collapse.
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);
  /// Rows must be symmetric and loop-free with no bits >= n.
  static Graph from_rows(int n, const std::vector<Mask>& rows);

  int order() const noexcept { return n_; }
  int size() const noexcept;  // edge count

  Mask row(int v) const noexcept { return adj_[v]; }
  Mask closed_row(int v) const noexcept { return adj_[v] | (Mask{1} << v); }
  bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(adj_[v]); }

  VertexSet vertices() const noexcept { return VertexSet(full_mask(n_)); }
  VertexSet neighborhood(int v) const noexcept { return VertexSet(adj_[v]); }

  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<int>& perm) const;
  Graph induced(VertexSet s) const;  // vertices renumbered in increasing order
  Graph complement() const;
  /// Disjoint union; other's vertices are shifted by order().
  Graph disjoint_union(const Graph& other) const;
  Graph with_edge(int u, int v) const;
  Graph without_vertex(int v) const;

  bool operator==(const Graph& o) const noexcept;

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

VertexSet closed_neighborhood(const Graph& g, VertexSet s) noexcept;
VertexSet open_neighborhood(const Graph& g, VertexSet s) noexcept;

int degree(const Graph& g, int v);
int min_degree(const Graph& g);  // EmptyGraph when n = 0
int max_degree(const Graph& g);
VertexSet full_vertices(const Graph& g) noexcept;
VertexSet isolated_vertices(const Graph& g) noexcept;

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);   // P_n, n >= 1
bool is_cycle(const Graph& g);  // C_n, n >= 3
bool is_complete(const Graph& g) noexcept;

// Text formats.  Edge list: "n m" then m lines "u v", '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6 (n <= 62 uses a single header byte, n = 63/64 the 4-byte form).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {},
                   std::string_view name = "G");

}  // namespace coalition
