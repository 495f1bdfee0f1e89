#include "coalition/rgs.hpp"

#include <algorithm>

#include "coalition/error.hpp"

namespace coalition::rgs {

std::uint64_t bell(int n) {
  if (n < 0 || n > 25) throw Error(ErrorCode::OutOfRange, "bell(" + std::to_string(n) + ")");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::vector<std::vector<std::uint8_t>> prefixes(int length) {
  std::vector<std::vector<std::uint8_t>> out;
  if (length <= 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::uint8_t> cur(length, 0);
  std::vector<int> running_max(length, 0);
  // Iterative successor in lexicographic order.
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i > 0 && cur[i] == running_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++cur[i];
    running_max[i] = std::max<int>(running_max[i - 1], cur[i]);
    for (int j = i + 1; j < length; ++j) {
      cur[j] = 0;
      running_max[j] = running_max[j - 1];
    }
  }
  return out;
}

int split_depth(int n, int threads) {
  if (threads <= 1) return 0;
  int depth = 0;
  while (depth < n && bell(depth) < static_cast<std::uint64_t>(32 * threads)) ++depth;
  return depth;
}

void load_prefix(const Graph& g, std::span<const int> order, std::span<const std::uint8_t> prefix,
                 BlockState& st) {
  st.nb = 0;
  for (std::size_t d = 0; d < prefix.size(); ++d) {
    const int b = prefix[d];
    if (b == st.nb) {
      st.members[b] = st.closed[b] = 0;
      st.sizes[b] = 0;
      ++st.nb;
    }
    st.members[b] |= Mask{1} << order[d];
    st.closed[b] |= g.closed_row(order[d]);
    ++st.sizes[b];
    st.label[d] = static_cast<std::uint8_t>(b);
  }
}

}  // namespace coalition::rgs
