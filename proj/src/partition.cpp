#include "coalition/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "coalition/domination.hpp"
#include "coalition/error.hpp"

namespace coalition {

VertexPartition::VertexPartition(int n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::TooLarge, "partition order " + std::to_string(n));
  Mask seen = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Mask b = blocks_[i].bits();
    if (b == 0) throw Error(ErrorCode::NotAPartition, "block " + std::to_string(i) + " is empty");
    if (b & ~full_mask(n)) throw Error(ErrorCode::NotAPartition, "block " + std::to_string(i) + " has a vertex >= n");
    if (b & seen) throw Error(ErrorCode::NotAPartition, "block " + std::to_string(i) + " overlaps an earlier block");
    seen |= b;
  }
  if (seen != full_mask(n)) throw Error(ErrorCode::NotAPartition, "blocks do not cover every vertex");
}

VertexPartition VertexPartition::from_rgs(std::span<const std::uint8_t> rgs) {
  std::vector<VertexSet> blocks;
  int running_max = -1;
  for (std::size_t v = 0; v < rgs.size(); ++v) {
    const int b = rgs[v];
    if (b > running_max + 1) throw Error(ErrorCode::NotAPartition, "not a restricted-growth string");
    if (b > running_max) {
      blocks.emplace_back();
      running_max = b;
    }
    blocks[b] |= VertexSet::single(static_cast<int>(v));
  }
  return VertexPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<VertexSet> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back(VertexSet::single(v));
  return VertexPartition(n, std::move(blocks));
}

std::vector<int> VertexPartition::block_of() const {
  std::vector<int> out(n_, -1);
  for (int i = 0; i < size(); ++i)
    for (int v : blocks_[i]) out[v] = i;
  return out;
}

std::vector<std::uint8_t> VertexPartition::to_rgs() const {
  const auto owner = block_of();
  std::vector<int> relabel(size(), -1);
  std::vector<std::uint8_t> rgs(n_);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    int& r = relabel[owner[v]];
    if (r < 0) r = next++;
    rgs[v] = static_cast<std::uint8_t>(r);
  }
  return rgs;
}

VertexPartition VertexPartition::canonical() const {
  auto blocks = blocks_;
  std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
    return std::countr_zero(a.bits()) < std::countr_zero(b.bits());
  });
  return VertexPartition(n_, std::move(blocks));
}

VertexPartition VertexPartition::relabeled(const std::vector<int>& perm) const {
  std::vector<VertexSet> blocks;
  for (VertexSet b : blocks_) {
    VertexSet mapped;
    for (int v : b) mapped |= VertexSet::single(perm[v]);
    blocks.push_back(mapped);
  }
  return VertexPartition(n_, std::move(blocks));
}

VertexPartition parse_partition(std::string_view text, int n, bool one_indexed) {
  std::vector<VertexSet> blocks;
  const int offset = one_indexed ? 1 : 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string_view::npos) bar = text.size();
    std::string_view part = text.substr(start, bar - start);
    VertexSet block;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      std::size_t comma = part.find(',', pos);
      if (comma == std::string_view::npos) comma = part.size();
      std::string_view tok = part.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::ParseError, "bad vertex token '" + std::string(tok) + "' in partition");
      v -= offset;
      if (v < 0 || v >= n)
        throw Error(ErrorCode::NotAPartition, "vertex " + std::string(tok) + " outside the graph");
      if (block.contains(v))
        throw Error(ErrorCode::NotAPartition, "vertex " + std::string(tok) + " repeated in a block");
      block |= VertexSet::single(v);
      pos = comma + 1;
    }
    blocks.push_back(block);
    start = bar + 1;
  }
  return VertexPartition(n, std::move(blocks));
}

std::string format_partition(const VertexPartition& p, bool one_indexed) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += '|';
    bool first = true;
    for (int v : p.block(i)) {
      if (!first) out += ',';
      out += std::to_string(v + (one_indexed ? 1 : 0));
      first = false;
    }
  }
  return out;
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::SingletonDominating: return "SingletonDominating";
    case BlockKind::HasPartner: return "HasPartner";
    case BlockKind::Orphan: return "Orphan";
    case BlockKind::OversizeDominating: return "OversizeDominating";
  }
  return "?";
}

bool forms_coalition(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) throw Error(ErrorCode::OverlappingSets, "coalition candidates share a vertex");
  return !is_dominating(g, a) && !is_dominating(g, b) && is_dominating(g, a | b);
}

namespace {

void require_partition_of(const Graph& g, const VertexPartition& p) {
  if (p.order() != g.order())
    throw Error(ErrorCode::NotAPartition, "partition of " + std::to_string(p.order()) +
                                              " vertices for a graph of order " + std::to_string(g.order()));
}

}  // namespace

PartitionValidity validate_partition(const Graph& g, const VertexPartition& p) {
  require_partition_of(g, p);
  const int k = p.size();
  std::vector<bool> dominating(k);
  for (int i = 0; i < k; ++i) dominating[i] = is_dominating(g, p.block(i));

  PartitionValidity out;
  out.valid = true;
  out.blocks.resize(k);
  for (int i = 0; i < k; ++i) {
    BlockStatus& st = out.blocks[i];
    if (dominating[i]) {
      st.kind = p.block(i).size() == 1 ? BlockKind::SingletonDominating : BlockKind::OversizeDominating;
    } else {
      for (int j = 0; j < k; ++j)
        if (j != i && !dominating[j] && is_dominating(g, p.block(i) | p.block(j))) st.partners.push_back(j);
      st.kind = st.partners.empty() ? BlockKind::Orphan : BlockKind::HasPartner;
    }
    if (st.kind == BlockKind::Orphan || st.kind == BlockKind::OversizeDominating) out.valid = false;
  }
  return out;
}

bool singletons_valid(const Graph& g) noexcept {
  const int n = g.order();
  const Mask all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    const Mask cv = g.closed_row(v);
    if (cv == all) continue;
    bool partnered = false;
    for (int u = 0; u < n && !partnered; ++u) {
      const Mask cu = g.closed_row(u);
      partnered = u != v && cu != all && (cv | cu) == all;
    }
    if (!partnered) return false;
  }
  return true;
}

CoalitionGraph coalition_graph(const Graph& g, const VertexPartition& p) {
  const auto validity = validate_partition(g, p);
  if (!validity.valid) throw Error(ErrorCode::InvalidPartition, "not a coalition partition");
  std::vector<Edge> edges;
  for (int i = 0; i < p.size(); ++i)
    for (int j : validity.blocks[i].partners)
      if (i < j) edges.emplace_back(i, j);
  return CoalitionGraph{Graph::from_edge_list(p.size(), edges), p.blocks()};
}

std::string coalition_graph_dot(const CoalitionGraph& cg, bool one_indexed) {
  std::vector<std::string> labels;
  for (VertexSet b : cg.blocks) {
    std::string s = "{";
    bool first = true;
    for (int v : b) {
      if (!first) s += ',';
      s += std::to_string(v + (one_indexed ? 1 : 0));
      first = false;
    }
    labels.push_back(s + "}");
  }
  return to_dot(cg.graph, labels, "CG");
}

}  // namespace coalition
