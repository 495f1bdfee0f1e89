#include <algorithm>
#include <cctype>
#include <charconv>
#include <mutex>
#include <numeric>

#include "coalition/catalog.hpp"
#include "coalition/error.hpp"
#include "coalition/isomorphism.hpp"

namespace coalition {

Graph path_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(k, e);
}

Graph cycle_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, e);
}

Graph complete_graph(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(k, e);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, e);
}

Graph double_star_graph(int r, int s) {
  std::vector<Edge> e{{0, 1}};
  for (int i = 0; i < r; ++i) e.emplace_back(0, 2 + i);
  for (int i = 0; i < s; ++i) e.emplace_back(1, 2 + r + i);
  return Graph::from_edge_list(2 + r + s, e);
}

namespace {

constexpr std::array<std::string_view, kCpClassCount + 1> kNames = {
    "K1", "K2",  "K2bar", "K1uK2", "P3", "K3",     "K13", "TwoK2", "P4",     "C4",
    "F1paw", "K4e", "P2uP3", "F2", "B1bull", "P5", "S12", "S22", "Outside"};

Graph bull() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 4}}); }
Graph paw() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}}); }
Graph f2() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }
Graph k4_minus_e() { return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph build_cp_graph(CpClass c) {
  switch (c) {
    case CpClass::K1: return complete_graph(1);
    case CpClass::K2: return complete_graph(2);
    case CpClass::K2bar: return Graph::from_edge_list(2, {});
    case CpClass::K1uK2: return Graph::from_edge_list(3, {{1, 2}});
    case CpClass::P3: return path_graph(3);
    case CpClass::K3: return complete_graph(3);
    case CpClass::K13: return complete_bipartite_graph(1, 3);
    case CpClass::TwoK2: return Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    case CpClass::P4: return path_graph(4);
    case CpClass::C4: return cycle_graph(4);
    case CpClass::F1paw: return paw();
    case CpClass::K4e: return k4_minus_e();
    case CpClass::P2uP3: return Graph::from_edge_list(5, {{0, 1}, {2, 3}, {3, 4}});
    case CpClass::F2: return f2();
    case CpClass::B1bull: return bull();
    case CpClass::P5: return path_graph(5);
    case CpClass::S12: return double_star_graph(1, 2);
    case CpClass::S22: return double_star_graph(2, 2);
    case CpClass::Outside: break;
  }
  throw Error(ErrorCode::BadParameter, "Outside has no representative graph");
}

const std::array<Graph, kCpClassCount>& family() {
  static const std::array<Graph, kCpClassCount> graphs = [] {
    std::array<Graph, kCpClassCount> out;
    for (CpClass c : kAllCpClasses) out[static_cast<int>(c)] = build_cp_graph(c);
    return out;
  }();
  return graphs;
}

// Pair (i,j), i<j, maps to bit j(j-1)/2 + i.
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int kMaxTableOrder = 6;

struct ClassTable {
  std::array<std::vector<std::uint8_t>, kMaxTableOrder + 1> by_order;

  ClassTable() {
    for (int m = 0; m <= kMaxTableOrder; ++m)
      by_order[m].assign(std::size_t{1} << (m * (m - 1) / 2), static_cast<std::uint8_t>(CpClass::Outside));
    for (CpClass c : kAllCpClasses) {
      const Graph& h = cp_graph(c);
      const int m = h.order();
      std::vector<int> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::uint32_t mask = 0;
        for (auto [u, v] : h.edges()) {
          const int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
          mask |= std::uint32_t{1} << pair_bit(a, b);
        }
        by_order[m][mask] = static_cast<std::uint8_t>(c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
};

const ClassTable& class_table() {
  static const ClassTable table;
  return table;
}

}  // namespace

std::string_view to_string(CpClass c) { return kNames[static_cast<int>(c)]; }

std::optional<CpClass> cp_class_from_string(std::string_view name) {
  for (int i = 0; i <= kCpClassCount; ++i)
    if (kNames[i] == name) return static_cast<CpClass>(i);
  return std::nullopt;
}

const Graph& cp_graph(CpClass c) {
  if (c == CpClass::Outside) throw Error(ErrorCode::BadParameter, "Outside has no representative graph");
  return family()[static_cast<int>(c)];
}

CpClass classify_cp(const Graph& h) {
  const auto degrees = h.degree_sequence();
  for (CpClass c : kAllCpClasses) {
    const Graph& f = cp_graph(c);
    if (f.order() != h.order() || f.size() != h.size() || f.degree_sequence() != degrees) continue;
    if (are_isomorphic(f, h)) return c;
  }
  return CpClass::Outside;
}

CpClass classify_cp_rows(int nb, const Mask* rows) noexcept {
  if (nb < 1 || nb > kMaxTableOrder) return CpClass::Outside;
  std::uint32_t mask = 0;
  for (int j = 1; j < nb; ++j)
    for (int i = 0; i < j; ++i)
      if ((rows[i] >> j) & 1U) mask |= std::uint32_t{1} << pair_bit(i, j);
  return static_cast<CpClass>(class_table().by_order[nb][mask]);
}

void check_catalog() {
  for (int a = 0; a < kCpClassCount; ++a)
    for (int b = a + 1; b < kCpClassCount; ++b)
      if (are_isomorphic(family()[a], family()[b]))
        throw Error(ErrorCode::BadParameter, "catalog members " + std::string(kNames[a]) + " and " +
                                                 std::string(kNames[b]) + " are isomorphic");
  if (!are_isomorphic(double_star_graph(1, 2), double_star_graph(2, 1)) ||
      classify_cp(double_star_graph(2, 1)) != CpClass::S12)
    throw Error(ErrorCode::BadParameter, "S(2,1) does not match the S12 catalog entry");
  (void)class_table();
}

// ---------------------------------------------------------------------------

namespace {

int parse_count(std::string_view digits, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::UnknownSpec, "cannot parse '" + std::string(spec) + "'");
  return value;
}

void require(bool ok, std::string_view spec, std::string_view why) {
  if (!ok) throw Error(ErrorCode::BadParameter, std::string(spec) + ": " + std::string(why));
}

void require_fits(long n, std::string_view spec) {
  if (n > kMaxVertices) throw Error(ErrorCode::TooLarge, std::string(spec) + ": more than 64 vertices");
}

Graph make_base(std::string_view s) {
  if (auto c = cp_class_from_string(s); c && *c != CpClass::Outside) return cp_graph(*c);
  if (s == "bull" || s == "B1" || s == "B") return bull();
  if (s == "paw" || s == "F1") return paw();
  if (s == "F2") return f2();
  if (s == "K4-e") return k4_minus_e();

  if (s.starts_with("S(") && s.ends_with(")")) {
    auto inner = s.substr(2, s.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::UnknownSpec, std::string(s));
    const int r = parse_count(inner.substr(0, comma), s), t = parse_count(inner.substr(comma + 1), s);
    require(r >= 1 && t >= 1, s, "double star needs r, s >= 1");
    require_fits(r + t + 2, s);
    return double_star_graph(r, t);
  }
  if (s.size() >= 2 && s[0] == 'K') {
    std::string_view rest = s.substr(1);
    if (rest.starts_with("_{") && rest.ends_with("}")) rest = rest.substr(2, rest.size() - 3);
    else if (rest.starts_with("{") && rest.ends_with("}")) rest = rest.substr(1, rest.size() - 2);
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      const int a = parse_count(rest.substr(0, comma), s), b = parse_count(rest.substr(comma + 1), s);
      require(a >= 1 && b >= 1, s, "complete bipartite needs a, b >= 1");
      require_fits(a + b, s);
      return complete_bipartite_graph(a, b);
    }
    const int k = parse_count(rest, s);
    require(k >= 1, s, "complete graph needs k >= 1");
    require_fits(k, s);
    return complete_graph(k);
  }
  if (s.size() >= 2 && (s[0] == 'P' || s[0] == 'C' || s[0] == 'E')) {
    const int k = parse_count(s.substr(1), s);
    require_fits(k, s);
    if (s[0] == 'P') {
      require(k >= 1, s, "path needs k >= 1");
      return path_graph(k);
    }
    if (s[0] == 'C') {
      require(k >= 3, s, "cycle needs k >= 3");
      return cycle_graph(k);
    }
    require(k >= 1, s, "edgeless graph needs k >= 1");
    return Graph::from_edge_list(k, {});
  }
  throw Error(ErrorCode::UnknownSpec, "unknown graph spec '" + std::string(s) + "'");
}

Graph make_term(std::string_view s) {
  std::size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
  int copies = 1;
  if (digits > 0 && digits < s.size()) {
    copies = parse_count(s.substr(0, digits), s);
    require(copies >= 1, s, "multiplicity must be positive");
    s.remove_prefix(digits);
  }
  const Graph base = make_base(s);
  require_fits(static_cast<long>(copies) * base.order(), s);
  Graph out = base;
  for (int i = 1; i < copies; ++i) out = out.disjoint_union(base);
  return out;
}

// 'u' joins union terms when it sits between a digit or ')' and an uppercase
// letter, digit or '(' (so "K1uK5" splits but "bull" does not).
std::vector<std::string_view> split_union(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth != 0) continue;
    bool cut = c == '+';
    if (c == 'u' && i > 0 && i + 1 < s.size()) {
      const char prev = s[i - 1], next = s[i + 1];
      cut = (std::isdigit(static_cast<unsigned char>(prev)) || prev == ')' || prev == '}') &&
            (std::isupper(static_cast<unsigned char>(next)) || std::isdigit(static_cast<unsigned char>(next)));
    }
    if (cut) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace

Graph make_named(std::string_view spec) {
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
  if (spec.empty()) throw Error(ErrorCode::UnknownSpec, "empty graph spec");
  if (auto c = cp_class_from_string(spec); c && *c != CpClass::Outside) return cp_graph(*c);
  Graph out;
  bool first = true;
  for (auto term : split_union(spec)) {
    if (term.empty()) throw Error(ErrorCode::UnknownSpec, "empty union term in '" + std::string(spec) + "'");
    Graph g = make_term(term);
    if (first) {
      out = g;
      first = false;
    } else {
      if (out.order() + g.order() > kMaxVertices) throw Error(ErrorCode::TooLarge, std::string(spec));
      out = out.disjoint_union(g);
    }
  }
  return out;
}

}  // namespace coalition
