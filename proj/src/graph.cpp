#include "coalition/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "coalition/error.hpp"

namespace coalition {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(ErrorCode::TooLarge, "graphs are limited to 64 vertices, got " + std::to_string(n));
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    g.adj_[u] |= Mask{1} << v;
    g.adj_[v] |= Mask{1} << u;
  }
  return g;
}

Graph Graph::from_rows(int n, const std::vector<Mask>& rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::BadParameter, "row count does not match vertex count");
  Graph g;
  g.n_ = n;
  const Mask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw Error(ErrorCode::IndexOutOfRange, "row bit beyond n");
    if ((rows[v] >> v) & 1U) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u)
    for (int v : VertexSet(rows[u]))
      if (!((rows[v] >> u) & 1U)) throw Error(ErrorCode::BadParameter, "asymmetric adjacency rows");
  return g;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(adj_[u] & ~full_mask(u + 1))) out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g;
  g.n_ = n_;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(adj_[u])) g.adj_[perm[u]] |= Mask{1} << perm[v];
  return g;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> index(n_, -1);
  int k = 0;
  for (int v : s) index[v] = k++;
  Graph g;
  g.n_ = k;
  for (int u : s)
    for (int v : VertexSet(adj_[u] & s.bits())) g.adj_[index[u]] |= Mask{1} << index[v];
  return g;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  for (int v = 0; v < n_; ++v) g.adj_[v] = full_mask(n_) & ~adj_[v] & ~(Mask{1} << v);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  check_order(n_ + other.n_);
  Graph g = *this;
  g.n_ = n_ + other.n_;
  for (int v = 0; v < other.n_; ++v) g.adj_[n_ + v] = other.adj_[v] << n_;
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorCode::IndexOutOfRange, "edge endpoint");
  if (u == v) throw Error(ErrorCode::LoopEdge, "loop");
  Graph g = *this;
  g.adj_[u] |= Mask{1} << v;
  g.adj_[v] |= Mask{1} << u;
  return g;
}

Graph Graph::without_vertex(int v) const {
  return induced(vertices() - VertexSet::single(v));
}

bool Graph::operator==(const Graph& o) const noexcept {
  if (n_ != o.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) noexcept {
  Mask m = s.bits();
  for (int v : s) m |= g.row(v);
  return VertexSet(m);
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) noexcept {
  Mask m = 0;
  for (int v : s) m |= g.row(v);
  return VertexSet(m);
}

int degree(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  return g.degree(v);
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "min_degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "max_degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

VertexSet full_vertices(const Graph& g) noexcept {
  Mask m = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) m |= Mask{1} << v;
  return VertexSet(m);
}

VertexSet isolated_vertices(const Graph& g) noexcept {
  Mask m = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.row(v) == 0) m |= Mask{1} << v;
  return VertexSet(m);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  Mask seen = 1, frontier = 1;
  while (frontier) {
    Mask next = open_neighborhood(g, VertexSet(frontier)).bits() & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == full_mask(g.order());
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) noexcept {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

Graph read_edge_list(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(value);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "non-integer token '" + tok + "' in edge list");
      }
    }
  }
  if (tokens.size() < 2) throw Error(ErrorCode::ParseError, "edge list needs a 'n m' header");
  const long long n = tokens[0], m = tokens[1];
  if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative header value");
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "n=" + std::to_string(n));
  if (tokens.size() != 2 + 2 * static_cast<std::size_t>(m))
    throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string((tokens.size() - 2) / 2.0));
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "graph6 byte outside 63..126");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126)
      throw Error(ErrorCode::TooLarge, "graph6 header for n > 258047 or truncated");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, "graph6 n=" + std::to_string(n));

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw Error(ErrorCode::ParseError, "graph6 body has " + std::to_string(text.size() - pos) +
                                           " bytes, expected " + std::to_string(bytes));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k)
    if (((text[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw Error(ErrorCode::ParseError, "nonzero graph6 padding bit");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coalition
