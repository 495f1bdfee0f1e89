#include "coalition/domination.hpp"

#include "coalition/error.hpp"

namespace coalition {

namespace {

// Visits every k-subset of {0..n-1} in colex order (Gosper's hack) until the
// predicate returns true.
template <typename Pred>
bool any_subset_of_size(int n, int k, Pred&& pred) {
  if (k == 0) return pred(Mask{0});
  if (k > n) return false;
  Mask s = full_mask(k);
  const Mask limit = full_mask(n);
  while (true) {
    if (pred(s)) return true;
    const Mask c = s & -s;
    const Mask r = s + c;
    if (r == 0 || (r & ~limit)) return false;
    s = (((r ^ s) >> 2) / c) | r;
    if (s & ~limit) return false;
  }
}

}  // namespace

int domination_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "domination number of the empty graph");
  for (int k = 1; k <= n; ++k) {
    if (any_subset_of_size(n, k, [&](Mask s) { return is_dominating(g, VertexSet(s)); })) return k;
  }
  return n;
}

int vertex_cover_number(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    const bool found = any_subset_of_size(n, k, [&](Mask s) {
      for (int v = 0; v < n; ++v)
        if (!((s >> v) & 1U) && (g.row(v) & ~s)) return false;
      return true;
    });
    if (found) return k;
  }
  return n;
}

}  // namespace coalition
