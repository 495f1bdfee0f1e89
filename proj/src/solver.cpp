#include "coalition/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "coalition/error.hpp"
#include "coalition/parallel.hpp"
#include "coalition/rgs.hpp"

namespace coalition {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void atomic_max(std::atomic<int>& a, int v) {
  int cur = a.load(std::memory_order_relaxed);
  while (cur < v && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

bool oversize_dominating(const rgs::BlockState& st, int b, Mask all) {
  return st.sizes[b] >= 2 && st.closed[b] == all;
}

/// N[order[d..n)] for every depth d.
std::vector<Mask> suffix_closed(const Graph& g, const std::vector<int>& order) {
  std::vector<Mask> out(order.size() + 1, 0);
  for (std::size_t d = order.size(); d-- > 0;) out[d] = out[d + 1] | g.closed_row(order[d]);
  return out;
}

/// Every block that is not a dominating singleton can still find a partner
/// once the unassigned vertices (closed neighbourhood `rest`) are placed, and
/// a block that must still be opened has an existing partner candidate.
bool partners_reachable(const rgs::BlockState& st, Mask rest, bool new_block_allowed, bool new_block_required,
                        Mask all) {
  for (int i = 0; i < st.nb; ++i) {
    if (st.sizes[i] == 1 && st.closed[i] == all) continue;
    const Mask reach = st.closed[i] | rest;
    if (new_block_allowed && rest != 0 && reach == all) continue;
    bool found = false;
    for (int j = 0; j < st.nb && !found; ++j) found = j != i && (reach | st.closed[j]) == all;
    if (!found) return false;
  }
  if (new_block_required && rest != all) {
    for (int j = 0; j < st.nb; ++j)
      if ((st.closed[j] | rest) == all) return true;
    return false;
  }
  return true;
}

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::EmptyGraph, "coalition number of the empty graph");
}

struct Incumbent {
  int value = 0;
  std::vector<std::uint8_t> rgs;
};

SolverResult enumerate_with(const Graph& g, int threads) {
  require_nonempty(g);
  const int n = g.order();
  if (n > kMaxEnumerateOrder)
    throw Error(ErrorCode::TooLargeForEnumeration,
                "enumeration supports n <= " + std::to_string(kMaxEnumerateOrder) + ", got " + std::to_string(n));
  const auto t0 = Clock::now();
  const Mask all = full_mask(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  const auto chunks = rgs::prefixes(rgs::split_depth(n, threads));
  std::vector<Incumbent> found(chunks.size());
  std::atomic<int> shared_best{0};
  std::atomic<std::uint64_t> leaves{0};

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    rgs::BlockState st;
    rgs::load_prefix(g, order, chunks[c], st);
    Incumbent& local = found[c];
    std::uint64_t count = 0;
    auto leaf = [&](const rgs::BlockState& s) {
      ++count;
      if (s.nb > local.value && s.nb >= shared_best.load(std::memory_order_relaxed) &&
          kernel::valid_blocks(s.closed.data(), s.sizes.data(), s.nb, all)) {
        local.value = s.nb;
        local.rgs.assign(s.label.begin(), s.label.begin() + n);
        atomic_max(shared_best, s.nb);
      }
    };
    auto descend = [](const rgs::BlockState&, int) { return true; };
    rgs::walk(g, order, st, static_cast<int>(chunks[c].size()), leaf, descend);
    leaves += count;
  }

  SolverResult out;
  const Incumbent* best = nullptr;
  for (const Incumbent& inc : found)
    if (inc.value > 0 && (!best || inc.value > best->value)) best = &inc;
  if (best) {
    out.value = best->value;
    out.witness = VertexPartition::from_rgs(best->rgs);
  } else {
    out.no_partition = true;
  }
  out.stats.partitions_examined = leaves.load();
  out.stats.elapsed_seconds = seconds_since(t0);
  return out;
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

SolverResult coalition_number_enumerate(const Graph& g) { return enumerate_with(g, max_threads()); }

SolverResult coalition_number_enumerate_serial(const Graph& g) { return enumerate_with(g, 1); }

int upper_bound(const Graph& g) {
  require_nonempty(g);
  const int n = g.order();
  const int lo = min_degree(g), hi = max_degree(g);
  int bound = std::min(n, (hi + 3) * (hi + 3) / 4);
  if (2 * lo < hi) bound = std::min(bound, (lo + 1) * (hi - lo + 2));
  if (lo == 1) bound = std::min(bound, 2 * (hi + 1));
  if (is_path(g) || is_cycle(g)) bound = std::min(bound, 6);
  return bound;
}

std::optional<VertexPartition> least_partition_with(const Graph& g, int blocks) {
  const int n = g.order();
  if (blocks < 1 || blocks > n) return std::nullopt;
  const Mask all = full_mask(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  const std::vector<Mask> rest = suffix_closed(g, order);
  std::optional<std::vector<std::uint8_t>> hit;
  rgs::BlockState st;
  auto leaf = [&](const rgs::BlockState& s) {
    if (hit || s.nb != blocks) return;
    if (kernel::valid_blocks(s.closed.data(), s.sizes.data(), s.nb, all))
      hit.emplace(s.label.begin(), s.label.begin() + n);
  };
  auto descend = [&](const rgs::BlockState& s, int depth) {
    if (hit || s.nb > blocks || s.nb + (n - depth) < blocks) return false;
    if (depth > 0 && oversize_dominating(s, s.label[depth - 1], all)) return false;
    return partners_reachable(s, rest[depth], s.nb < blocks, s.nb < blocks, all);
  };
  rgs::walk(g, order, st, 0, leaf, descend);
  if (!hit) return std::nullopt;
  return VertexPartition::from_rgs(*hit);
}

SolverResult coalition_number_bnb(const Graph& g, const SolverConfig& cfg) {
  require_nonempty(g);
  if (cfg.node_limit && *cfg.node_limit == 0) throw Error(ErrorCode::BadParameter, "node limit must be positive");
  if (cfg.time_limit && cfg.time_limit->count() <= 0)
    throw Error(ErrorCode::BadParameter, "time limit must be positive");

  const auto t0 = Clock::now();
  const int n = g.order();
  const Mask all = full_mask(n);
  SolverResult out;

  if (singletons_valid(g)) {
    out.value = n;
    out.witness = VertexPartition::singletons(n);
    out.stats.partitions_examined = 1;
    out.stats.elapsed_seconds = seconds_since(t0);
    return out;
  }

  const int cap = upper_bound(g);
  const std::vector<int> order = degree_order(g);
  const std::vector<Mask> rest = suffix_closed(g, order);
  const int threads = max_threads();
  const auto chunks = rgs::prefixes(rgs::split_depth(n, threads));
  const auto deadline = cfg.time_limit ? std::optional(t0 + *cfg.time_limit) : std::nullopt;

  const std::uint64_t flush_every = cfg.node_limit ? std::min<std::uint64_t>(1024, *cfg.node_limit) : 1024;

  std::atomic<int> best{0};
  std::atomic<bool> stop{false}, limited{false};
  std::atomic<std::uint64_t> nodes{0}, pruned{0}, leaves{0};
  std::mutex mu;
  std::vector<std::uint8_t> incumbent;  // in `order` positions

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    if (stop.load(std::memory_order_relaxed)) continue;
    rgs::BlockState st;
    rgs::load_prefix(g, order, chunks[c], st);
    bool prefix_ok = true;
    for (int b = 0; b < st.nb; ++b) prefix_ok &= !oversize_dominating(st, b, all);
    if (!prefix_ok) {
      ++pruned;
      continue;
    }
    std::uint64_t local_nodes = 0, local_pruned = 0, local_leaves = 0;
    auto flush = [&](bool check) {
      const std::uint64_t total = nodes.fetch_add(local_nodes) + local_nodes;
      pruned += local_pruned;
      leaves += local_leaves;
      local_nodes = local_pruned = local_leaves = 0;
      if (check && ((cfg.node_limit && total >= *cfg.node_limit) || (deadline && Clock::now() >= *deadline))) {
        limited = true;
        stop = true;
      }
    };
    auto leaf = [&](const rgs::BlockState& s) {
      ++local_leaves;
      if (s.nb <= best.load(std::memory_order_relaxed)) return;
      if (!kernel::valid_blocks(s.closed.data(), s.sizes.data(), s.nb, all)) return;
      {
        std::lock_guard lock(mu);
        if (s.nb > best.load()) {
          incumbent.assign(s.label.begin(), s.label.begin() + n);
          best = s.nb;
        }
      }
      if (s.nb >= cap) stop = true;
    };
    auto descend = [&](const rgs::BlockState& s, int depth) {
      if (++local_nodes >= flush_every) flush(true);
      if (stop.load(std::memory_order_relaxed)) return false;
      if ((depth > 0 && oversize_dominating(s, s.label[depth - 1], all)) ||
          s.nb + (n - depth) <= best.load(std::memory_order_relaxed) ||
          !partners_reachable(s, rest[depth], true, s.nb <= best.load(std::memory_order_relaxed), all)) {
        ++local_pruned;
        return false;
      }
      return true;
    };
    rgs::walk<true>(g, order, st, static_cast<int>(chunks[c].size()), leaf, descend);
    flush(false);
  }

  out.value = best.load();
  out.limit_exceeded = limited.load() && out.value < cap;
  out.stats.partitions_examined = leaves.load();
  out.stats.nodes_pruned = pruned.load();
  if (out.value == 0) {
    out.no_partition = !out.limit_exceeded;
  } else if (out.limit_exceeded) {
    std::vector<VertexSet> blocks(out.value);
    for (int d = 0; d < n; ++d) blocks[incumbent[d]] |= VertexSet::single(order[d]);
    out.witness = VertexPartition(n, std::move(blocks)).canonical();
  } else {
    out.witness = least_partition_with(g, out.value);
  }
  out.stats.elapsed_seconds = seconds_since(t0);
  return out;
}

SolverResult solve(const Graph& g, const SolverConfig& cfg) {
  return cfg.method == Method::Enumerate ? coalition_number_enumerate(g) : coalition_number_bnb(g, cfg);
}

}  // namespace coalition
