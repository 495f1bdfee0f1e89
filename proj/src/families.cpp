#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

#include "coalition/catalog.hpp"
#include "coalition/error.hpp"
#include "coalition/isomorphism.hpp"

namespace coalition {

Graph build_f1(const F1Params& params) {
  const int p = params.p_size, q = params.q_size;
  auto fail = [](const std::string& why) { throw Error(ErrorCode::BadF1Params, why); };
  if (p < 0 || q < 0) fail("negative part size");
  if (p + q < 1) fail("|P| + |Q| must be at least 1");
  if (q == 1) fail("Q must be empty or have at least two vertices");
  if (3 + p + q > kMaxVertices) fail("too many vertices");

  const int x = 0, y = 1, w = 2, p0 = 3, q0 = 3 + p;
  std::vector<Edge> edges{{x, y}};
  for (int i = 0; i < p + q; ++i) edges.emplace_back(w, p0 + i);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p + q; ++j)
      if (j != i) edges.emplace_back(p0 + i, p0 + j);
  for (int i = 0; i < q; ++i) edges.emplace_back(y, q0 + i);

  std::vector<Mask> q_adj(q, 0);
  for (auto [a, b] : params.q_edges) {
    if (a < 0 || b < 0 || a >= q || b >= q) fail("Q edge index out of range");
    if (a == b) fail("Q edge is a loop");
    q_adj[a] |= Mask{1} << b;
    q_adj[b] |= Mask{1} << a;
    edges.emplace_back(q0 + a, q0 + b);
  }
  for (int i = 0; i < q; ++i)
    if (q_adj[i] == (full_mask(q) & ~(Mask{1} << i)))
      fail("G[Q] has a full vertex (Q-local " + std::to_string(i) + ")");
  for (int i : params.y_p) {
    if (i < 0 || i >= p) fail("y-P index out of range");
    edges.emplace_back(y, p0 + i);
  }
  return Graph::from_edge_list(3 + p + q, edges);
}

std::optional<F1Roles> f1_roles(const Graph& g) {
  const int n = g.order();
  const Mask all = full_mask(n);
  for (int x = 0; x < n; ++x) {
    if (g.degree(x) != 1) continue;
    const int y = std::countr_zero(g.row(x));
    const Mask candidates = all & ~g.closed_row(y);
    for (int w : VertexSet(candidates)) {
      const Mask nw = g.row(w);
      if (nw == 0) continue;
      if ((Mask{1} << x | Mask{1} << y | Mask{1} << w | nw) != all) continue;
      Mask p = 0;
      for (int v : VertexSet(nw))
        if ((nw & ~(Mask{1} << v) & ~g.row(v)) == 0) p |= Mask{1} << v;
      const Mask q = nw & ~p;
      if (q != 0) {
        if (std::popcount(q) < 2) continue;
        if ((q & ~g.row(y)) != 0) continue;
        bool has_full = false;
        for (int v : VertexSet(q)) has_full |= (q & ~(Mask{1} << v) & ~g.row(v)) == 0;
        if (has_full) continue;
      }
      return F1Roles{x, y, w, VertexSet(p), VertexSet(q)};
    }
  }
  return std::nullopt;
}

std::vector<Graph> all_f1_members(int p_size, int q_size) {
  if (3 + p_size + q_size > 11) throw Error(ErrorCode::TooLarge, "all_f1_members supports n <= 11");
  std::vector<std::pair<int, int>> q_pairs;
  for (int i = 0; i < q_size; ++i)
    for (int j = i + 1; j < q_size; ++j) q_pairs.emplace_back(i, j);

  std::map<std::uint64_t, Graph> unique;
  for (std::uint64_t qmask = 0; qmask < (std::uint64_t{1} << q_pairs.size()); ++qmask) {
    F1Params params{p_size, q_size, {}, {}};
    for (std::size_t e = 0; e < q_pairs.size(); ++e)
      if ((qmask >> e) & 1U) params.q_edges.push_back(q_pairs[e]);
    // Skip edge sets that give G[Q] a full vertex.
    std::vector<int> deg(q_size, 0);
    for (auto [a, b] : params.q_edges) ++deg[a], ++deg[b];
    if (q_size > 0 && std::any_of(deg.begin(), deg.end(), [&](int d) { return d == q_size - 1; })) continue;
    for (std::uint64_t ymask = 0; ymask < (std::uint64_t{1} << p_size); ++ymask) {
      params.y_p.clear();
      for (int i = 0; i < p_size; ++i)
        if ((ymask >> i) & 1U) params.y_p.push_back(i);
      Graph g = build_f1(params);
      unique.emplace(canonical_code(g), g);
    }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : unique) out.push_back(g);
  return out;
}

bool is_isolate_plus_clique(const Graph& g) {
  if (g.order() == 0) return false;
  for (int x : isolated_vertices(g))
    if (is_complete(g.without_vertex(x))) return true;
  return false;
}

bool is_pendant_clique(const Graph& g) {
  if (g.order() < 2) return false;
  for (int x = 0; x < g.order(); ++x)
    if (g.degree(x) == 1 && is_complete(g.without_vertex(x))) return true;
  return false;
}

// ---------------------------------------------------------------------------

std::vector<Graph> graphs_of_order(int n) {
  if (n < 0 || n > 8) throw Error(ErrorCode::TooLarge, "graphs_of_order supports 0 <= n <= 8");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Graph> out;
  if (n <= 1) {
    out.push_back(Graph::from_edge_list(n, {}));
  } else {
    const std::vector<Graph> smaller = [&] {
      // Recursive call without holding the lock.
      if (auto it = cache.find(n - 1); it != cache.end()) return it->second;
      mu.unlock();
      auto v = graphs_of_order(n - 1);
      mu.lock();
      return v;
    }();
    std::map<std::uint64_t, Graph> unique;
    for (const Graph& h : smaller) {
      for (Mask s = 0; s <= full_mask(n - 1); ++s) {
        std::vector<Mask> rows(n);
        for (int v = 0; v < n - 1; ++v) rows[v] = h.row(v) | (((s >> v) & 1U) ? Mask{1} << (n - 1) : 0);
        rows[n - 1] = s;
        const Graph g = Graph::from_rows(n, rows);
        const std::uint64_t code = canonical_code(g);
        if (!unique.count(code)) unique.emplace(code, canonical_graph(g));
      }
    }
    for (auto& [code, g] : unique) out.push_back(g);
  }
  cache.emplace(n, out);
  return out;
}

std::vector<Graph> all_graphs_up_to(int n_max, const std::function<bool(const Graph&)>& filter) {
  if (n_max > 8) throw Error(ErrorCode::TooLarge, "all_graphs_up_to supports n_max <= 8");
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Graph& g : graphs_of_order(n))
      if (!filter || filter(g)) out.push_back(g);
  return out;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw Error(ErrorCode::TooLarge, "for_each_labeled_graph supports n <= 8");
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<Mask> rows(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if ((m >> e) & 1U) {
        rows[pairs[e].first] |= Mask{1} << pairs[e].second;
        rows[pairs[e].second] |= Mask{1} << pairs[e].first;
      }
    }
    visit(Graph::from_rows(n, rows));
  }
}

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 14) throw Error(ErrorCode::TooLarge, "all_trees supports 1 <= n <= 14");
  std::vector<Graph> level{Graph::from_edge_list(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> unique;
    for (const Graph& t : level) {
      for (int v = 0; v < m - 1; ++v) {
        std::vector<Mask> rows(m);
        for (int u = 0; u < m - 1; ++u) rows[u] = t.row(u);
        rows[v] |= Mask{1} << (m - 1);
        rows[m - 1] = Mask{1} << v;
        Graph g = Graph::from_rows(m, rows);
        unique.emplace(tree_canonical_code(g), g);
      }
    }
    level.clear();
    for (auto& [code, g] : unique) level.push_back(g);
  }
  return level;
}

Graph tree_from_prufer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw Error(ErrorCode::IndexOutOfRange, "Prüfer entry out of range");
    ++deg[v];
  }
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--deg[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::from_edge_list(n, edges);
}

std::vector<Graph> all_trees_prufer(int n) {
  if (n < 1 || n > 9) throw Error(ErrorCode::TooLarge, "all_trees_prufer supports 1 <= n <= 9");
  if (n == 1) return {Graph::from_edge_list(1, {})};
  if (n == 2) return {Graph::from_edge_list(2, {{0, 1}})};
  std::map<std::string, Graph> unique;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    Graph t = tree_from_prufer(seq);
    unique.emplace(tree_canonical_code(t), t);
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::vector<Graph> out;
  for (auto& [code, g] : unique) out.push_back(g);
  return out;
}

}  // namespace coalition
