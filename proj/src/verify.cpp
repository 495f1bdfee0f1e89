#include "coalition/verify.hpp"

#include <array>
#include <set>
#include <sstream>

#include "coalition/catalog.hpp"
#include "coalition/error.hpp"
#include "coalition/isomorphism.hpp"
#include "coalition/partition.hpp"
#include "coalition/solver.hpp"

namespace coalition {

namespace {

constexpr std::array<std::uint64_t, 13> kTreeCounts = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
constexpr std::size_t kMaxExamples = 5;

void record(TheoremCheck& c, bool ok, const Graph& g, const std::string& why) {
  ++c.cases;
  if (ok) return;
  ++c.failures;
  if (c.examples.size() < kMaxExamples) c.examples.push_back(to_graph6(g) + ": " + why);
}

struct LowDegreeChecks {
  TheoremCheck isolate{"min degree 0: all singletons valid iff K1 u K(n-1)"};
  TheoremCheck f1{"min degree 1, no full vertex: all singletons valid iff constructed family"};
  TheoremCheck pendant{"min degree 1, one full vertex: all singletons valid iff pendant clique"};

  void visit(const Graph& g) {
    const int n = g.order();
    if (n == 0) return;
    const int lo = min_degree(g);
    if (lo > 1) return;
    const bool fast = singletons_valid(g);
    auto why = [&](bool predicate) {
      return std::string("singletons ") + (fast ? "valid" : "invalid") + ", predicate " +
             (predicate ? "true" : "false");
    };
    if (lo == 0) {
      const bool p = is_isolate_plus_clique(g);
      record(isolate, fast == p, g, why(p));
      return;
    }
    const int full = full_vertices(g).size();
    if (full == 0) {
      const bool p = is_in_f1(g);
      record(f1, fast == p, g, why(p));
    } else if (full == 1 && n >= 3) {
      const bool p = is_pendant_clique(g);
      record(pendant, fast == p, g, why(p));
    }
  }
};

}  // namespace

bool TheoremReport::ok() const {
  for (const auto& c : checks)
    if (c.failures) return false;
  return true;
}

std::string TheoremReport::format() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.failures ? "FAIL " : "ok   ") << c.name << " (" << c.cases << " cases, " << c.failures
       << " failures)\n";
    for (const auto& e : c.examples) os << "       " << e << '\n';
  }
  return os.str();
}

TheoremReport verify_low_degree(int max_graph_n) {
  if (max_graph_n < 1 || max_graph_n > 7) throw Error(ErrorCode::BadParameter, "max_graph_n must lie in 1..7");
  LowDegreeChecks checks;
  for (int n = 1; n <= std::min(max_graph_n, 6); ++n)
    for (const Graph& g : graphs_of_order(n)) checks.visit(g);
  if (max_graph_n == 7) for_each_labeled_graph(7, [&](const Graph& g) { checks.visit(g); });
  return TheoremReport{{checks.isolate, checks.f1, checks.pendant}};
}

TheoremReport verify_trees(int max_tree_n) {
  if (max_tree_n < 1 || max_tree_n > 12) throw Error(ErrorCode::BadParameter, "max_tree_n must lie in 1..12");
  TheoremCheck counts{"free tree counts (Prüfer cross-check up to 8)"};
  TheoremCheck top{"trees with C = n are exactly P1, P2, P3, P4"};
  TheoremCheck next{"trees with C = n - 1 are exactly K1,3, P5, P6, S(2,1)"};
  TheoremCheck rest{"trees with n >= 7 have C <= n - 2"};

  std::set<std::string> c_n, c_n1;
  for (int k = 1; k <= 4; ++k) c_n.insert(tree_canonical_code(path_graph(k)));
  for (const Graph& t : {complete_bipartite_graph(1, 3), path_graph(5), path_graph(6), double_star_graph(2, 1)})
    c_n1.insert(tree_canonical_code(t));

  for (int n = 1; n <= max_tree_n; ++n) {
    const std::vector<Graph> trees = all_trees(n);
    bool count_ok = trees.size() == kTreeCounts[n];
    if (count_ok && n <= 8) {
      std::set<std::string> a, b;
      for (const Graph& t : trees) a.insert(tree_canonical_code(t));
      for (const Graph& t : all_trees_prufer(n)) b.insert(tree_canonical_code(t));
      count_ok = a == b;
    }
    record(counts, count_ok, path_graph(n),
           "n=" + std::to_string(n) + " gave " + std::to_string(trees.size()) + " trees");

    for (const Graph& t : trees) {
      const int c = coalition_number_bnb(t).value;
      const std::string code = tree_canonical_code(t);
      const std::string why = "C=" + std::to_string(c) + ", n=" + std::to_string(n);
      record(top, (c == n) == c_n.count(code), t, why);
      record(next, (c == n - 1) == c_n1.count(code), t, why);
      if (n >= 7) record(rest, c <= n - 2, t, why);
    }
  }
  return TheoremReport{{counts, top, next, rest}};
}

TheoremReport verify_theorems(int max_graph_n, int max_tree_n) {
  TheoremReport out = verify_low_degree(max_graph_n);
  for (auto& c : verify_trees(max_tree_n).checks) out.checks.push_back(std::move(c));
  return out;
}

}  // namespace coalition
