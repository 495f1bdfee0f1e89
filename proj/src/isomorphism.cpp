#include "coalition/isomorphism.hpp"

#include <algorithm>
#include <functional>

#include "coalition/error.hpp"

namespace coalition {

namespace {

struct CanonSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::vector<int> placed;  // placed[label] = original vertex
  std::vector<int> best_perm;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  // Code bits are emitted most-significant first; `code` holds the prefix of
  // `bits` bits for labels 0..depth-1.
  void dfs(int depth, Mask used, std::uint64_t code, int bits) {
    if (depth == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
        best_perm = placed;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t c = code;
      for (int i = 0; i < depth; ++i) c = (c << 1) | (g.adjacent(placed[i], v) ? 1U : 0U);
      const int nbits = bits + depth;
      if (have_best && nbits > 0) {
        const std::uint64_t best_prefix = best >> (total_bits - nbits);
        if (c > best_prefix) continue;
      }
      placed[depth] = v;
      dfs(depth + 1, used | (Mask{1} << v), c, nbits);
    }
  }
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > 11) throw Error(ErrorCode::TooLarge, "canonical_code supports n <= 11");
  const int n = g.order();
  CanonSearch s{g, n, n * (n - 1) / 2, std::vector<int>(n), {}};
  s.dfs(0, 0, 0, 0);
  return n <= 1 ? 0 : s.best;
}

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > 11) throw Error(ErrorCode::TooLarge, "canonical_labeling supports n <= 11");
  const int n = g.order();
  CanonSearch s{g, n, n * (n - 1) / 2, std::vector<int>(n), {}};
  s.dfs(0, 0, 0, 0);
  std::vector<int> perm(n);
  for (int label = 0; label < n; ++label) perm[s.best_perm[label]] = label;
  return perm;
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  const int n = a.order();
  std::vector<int> map(n, -1);
  Mask used = 0;
  // Extend the mapping vertex by vertex, checking adjacency to mapped vertices.
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1U) continue;
      if (a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used |= Mask{1} << w;
      if (extend(v + 1)) return true;
      used &= ~(Mask{1} << w);
    }
    return false;
  };
  return extend(0);
}

namespace {

std::string rooted_code(const Graph& t, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : t.neighborhood(root))
    if (c != parent) kids.push_back(rooted_code(t, c, root));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

}  // namespace

std::string tree_canonical_code(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return "";
  if (n == 1) return "()";
  // Peel leaves until one or two centres remain.
  std::vector<int> deg(n);
  Mask alive = full_mask(n), layer = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer |= Mask{1} << v;
  }
  int remaining = n;
  while (remaining > 2) {
    Mask next = 0;
    for (int v : VertexSet(layer)) {
      alive &= ~(Mask{1} << v);
      --remaining;
      for (int u : VertexSet(tree.row(v) & alive))
        if (--deg[u] == 1) next |= Mask{1} << u;
    }
    layer = next;
  }
  std::vector<int> centres = VertexSet(alive).to_vector();
  std::string best;
  for (int c : centres) {
    std::string code = rooted_code(tree, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace coalition
