#include "coalition/census.hpp"

#include <sstream>

#include "coalition/error.hpp"
#include "coalition/parallel.hpp"
#include "coalition/rgs.hpp"
#include "coalition/solver.hpp"

namespace coalition {

namespace {

constexpr int kOutside = kCpClassCount;

struct Tally {
  std::array<std::vector<std::uint8_t>, kCpClassCount + 1> first;  // empty = unseen
  std::uint64_t scanned = 0, valid = 0, outside = 0;
  int max_blocks = 0;
};

// Rows follow the table column order P1..P9, then k >= 10.
constexpr std::array<std::string_view, kCpClassCount> kGrid = {
    "YNNNNNNNNN",  // K1
    "NnYYYYYYYY",  // K2
    "NYnNNNNNNN",  // K2bar
    "NNYNNNNNNN",  // K1uK2
    "NNNYYYYYYY",  // P3
    "NNNnyYYYYY",  // K3
    "NNNnnYYYYY",  // K13
    "NNNnnyyYYY",  // TwoK2
    "NNNnyyYYYY",  // P4
    "NNNYYYYYYY",  // C4
    "NNNnYYYYYY",  // F1paw
    "NNNnnYYYYY",  // K4e
    "NNNnnYYYYY",  // P2uP3
    "NNNnnnnnYY",  // F2
    "NNNnnnnnYY",  // B1bull
    "NNNnnnYYYY",  // P5
    "NNNnnnyyYY",  // S12
    "NNNnnnnnnY",  // S22
};

constexpr std::array<int, 10> kExpectedNc = {1, 1, 2, 3, 6, 10, 12, 12, 14, 15};

}  // namespace

int CensusReport::nc() const {
  int n = 0;
  for (const auto& w : witnesses) n += w.has_value();
  return n;
}

std::vector<CpClass> CensusReport::realizable() const {
  std::vector<CpClass> out;
  for (CpClass c : kAllCpClasses)
    if (realizes(c)) out.push_back(c);
  return out;
}

CensusReport census_graph(const Graph& g, bool parallel) {
  const int n = g.order();
  if (n < 1 || n > kMaxEnumerateOrder)
    throw Error(ErrorCode::TooLarge, "census supports 1 <= n <= " + std::to_string(kMaxEnumerateOrder));
  const Mask all = full_mask(n);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;

  const int threads = parallel ? max_threads() : 1;
  const auto chunks = rgs::prefixes(rgs::split_depth(n, threads));
  std::vector<Tally> tallies(chunks.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    rgs::BlockState st;
    rgs::load_prefix(g, order, chunks[c], st);
    Tally& t = tallies[c];
    std::array<Mask, kMaxVertices> rows{};
    auto leaf = [&](const rgs::BlockState& s) {
      ++t.scanned;
      if (!kernel::valid_blocks(s.closed.data(), s.sizes.data(), s.nb, all)) return;
      ++t.valid;
      t.max_blocks = std::max(t.max_blocks, s.nb);
      kernel::coalition_rows(s.closed.data(), s.nb, all, rows.data());
      const CpClass cls = classify_cp_rows(s.nb, rows.data());
      const int idx = cls == CpClass::Outside ? kOutside : static_cast<int>(cls);
      if (idx == kOutside) ++t.outside;
      if (t.first[idx].empty()) t.first[idx].assign(s.label.begin(), s.label.begin() + n);
    };
    auto descend = [](const rgs::BlockState&, int) { return true; };
    rgs::walk(g, order, st, static_cast<int>(chunks[c].size()), leaf, descend);
  }

  CensusReport r;
  r.k = n;
  std::array<const std::vector<std::uint8_t>*, kCpClassCount + 1> first{};
  for (const Tally& t : tallies) {
    r.partitions_scanned += t.scanned;
    r.valid_partitions += t.valid;
    r.outside_count += t.outside;
    r.max_blocks = std::max(r.max_blocks, t.max_blocks);
    for (int i = 0; i <= kCpClassCount; ++i)
      if (!first[i] && !t.first[i].empty()) first[i] = &t.first[i];
  }
  for (int i = 0; i < kCpClassCount; ++i)
    if (first[i]) r.witnesses[i] = VertexPartition::from_rgs(*first[i]);
  if (first[kOutside]) r.outside_example = VertexPartition::from_rgs(*first[kOutside]);
  return r;
}

CensusReport census_path(int k) {
  if (k < 1 || k > kMaxEnumerateOrder) throw Error(ErrorCode::TooLarge, "census_path supports 1 <= k <= 13");
  return census_graph(path_graph(k), true);
}

CensusReport census_path_serial(int k) {
  if (k < 1 || k > kMaxEnumerateOrder) throw Error(ErrorCode::TooLarge, "census_path supports 1 <= k <= 13");
  return census_graph(path_graph(k), false);
}

std::vector<std::string> census_lines(const CensusReport& r, bool one_indexed) {
  std::vector<std::string> out;
  for (CpClass c : kAllCpClasses) {
    const auto& w = r.witnesses[static_cast<int>(c)];
    out.push_back(std::to_string(r.k) + "," + std::string(to_string(c)) + "," + (w ? "Y" : "N") + "," +
                  (w ? format_partition(*w, one_indexed) : ""));
  }
  return out;
}

char expected_cell(CpClass c, int k) {
  if (c == CpClass::Outside) return 'N';
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  return kGrid[static_cast<int>(c)][std::min(k, 10) - 1];
}

int expected_nc(int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  return kExpectedNc[std::min(k, 10) - 1];
}

int Table1Report::hard_mismatches() const {
  int n = 0;
  for (const auto& m : mismatches) n += m.hard();
  return n;
}

int Table1Report::soft_mismatches() const {
  return static_cast<int>(mismatches.size()) - hard_mismatches();
}

Table1Report table1(int k_max) {
  if (k_max < 1 || k_max > kMaxEnumerateOrder) throw Error(ErrorCode::TooLarge, "table1 supports 1 <= k_max <= 13");
  Table1Report r;
  r.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    r.censuses.push_back(census_path(k));
    for (CpClass c : kAllCpClasses) {
      const char want = expected_cell(c, k);
      const bool got = r.censuses.back().realizes(c);
      if (got != (want == 'Y' || want == 'y')) r.mismatches.push_back(GridMismatch{c, k, want, got});
    }
  }
  return r;
}

std::string format_table1(const Table1Report& r) {
  std::ostringstream os;
  os << "class   ";
  for (int k = 1; k <= r.k_max; ++k) os << (k < 10 ? " P" : "P") << k;
  os << '\n';
  for (CpClass c : kAllCpClasses) {
    std::string name(to_string(c));
    name.resize(8, ' ');
    os << name;
    for (int k = 1; k <= r.k_max; ++k) {
      const bool got = r.censuses[k - 1].realizes(c);
      char mark = ' ';
      for (const auto& m : r.mismatches)
        if (m.cls == c && m.k == k) mark = m.hard() ? '!' : '?';
      os << ' ' << mark << (got ? 'Y' : 'N');
    }
    os << '\n';
  }
  os << "NC      ";
  for (int k = 1; k <= r.k_max; ++k) {
    const int nc = r.censuses[k - 1].nc();
    os << (nc < 10 ? "  " : " ") << nc;
  }
  os << '\n';
  return os.str();
}

}  // namespace coalition
