#include <doctest.h>

#include <random>

#include "check_error.hpp"
#include "coalition/catalog.hpp"
#include "coalition/isomorphism.hpp"
#include "coalition/partition.hpp"
#include "oracles.hpp"

using namespace coalition;

TEST_CASE("family members are pairwise distinct") {
  CHECK_NOTHROW(check_catalog());
  for (CpClass a : kAllCpClasses)
    for (CpClass b : kAllCpClasses)
      if (a != b) REQUIRE_FALSE(oracle::isomorphic(cp_graph(a), cp_graph(b)));
}

TEST_CASE("family shapes") {
  CHECK(cp_graph(CpClass::K2bar).size() == 0);
  CHECK(cp_graph(CpClass::K1uK2).order() == 3);
  CHECK(cp_graph(CpClass::F1paw).degree_sequence() == std::vector<int>{3, 2, 2, 1});
  CHECK(cp_graph(CpClass::F2).degree_sequence() == std::vector<int>{3, 2, 2, 2, 1});
  CHECK(cp_graph(CpClass::B1bull).degree_sequence() == std::vector<int>{3, 3, 2, 1, 1});
  CHECK(cp_graph(CpClass::K4e).size() == 5);
  CHECK(cp_graph(CpClass::S22).order() == 6);
  CHECK(cp_graph(CpClass::P2uP3).size() == 3);
  CHECK_ERROR(cp_graph(CpClass::Outside), ErrorCode::BadParameter);
}

TEST_CASE("class names round trip") {
  for (CpClass c : kAllCpClasses) CHECK(cp_class_from_string(to_string(c)) == c);
  CHECK_FALSE(cp_class_from_string("Q7").has_value());
}

TEST_CASE("classification survives relabelling") {
  std::mt19937_64 rng(41);
  for (CpClass c : kAllCpClasses) {
    for (int trial = 0; trial < 20; ++trial) {
      const Graph h = cp_graph(c).relabeled(oracle::random_permutation(cp_graph(c).order(), rng));
      REQUIRE(classify_cp(h) == c);
      std::vector<Mask> rows(h.order());
      for (int v = 0; v < h.order(); ++v) rows[v] = h.row(v);
      REQUIRE(classify_cp_rows(h.order(), rows.data()) == c);
    }
  }
  CHECK(classify_cp(make_named("K4")) == CpClass::Outside);
  CHECK(classify_cp(make_named("C5")) == CpClass::Outside);
  CHECK(classify_cp(make_named("P6")) == CpClass::Outside);
  CHECK(classify_cp(make_named("S(2,1)")) == CpClass::S12);
}

TEST_CASE("table-driven classification matches isomorphism on every small graph") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : graphs_of_order(n)) {
      std::vector<Mask> rows(n);
      for (int v = 0; v < n; ++v) rows[v] = g.row(v);
      CpClass want = CpClass::Outside;
      for (CpClass c : kAllCpClasses)
        if (oracle::isomorphic(g, cp_graph(c))) want = c;
      REQUIRE(classify_cp(g) == want);
      REQUIRE(classify_cp_rows(n, rows.data()) == want);
    }
  }
}

TEST_CASE("named graph specs") {
  CHECK(make_named("P5") == path_graph(5));
  CHECK(make_named("C7") == cycle_graph(7));
  CHECK(make_named("K5") == complete_graph(5));
  CHECK(make_named("K_{2,3}") == complete_bipartite_graph(2, 3));
  CHECK(make_named("K1,3") == complete_bipartite_graph(1, 3));
  CHECK(make_named("K{1,3}") == complete_bipartite_graph(1, 3));
  CHECK(make_named("S(2,1)") == double_star_graph(2, 1));
  CHECK(make_named("E3").size() == 0);
  CHECK(make_named("2K2") == cp_graph(CpClass::TwoK2));
  CHECK(are_isomorphic(make_named("bull"), cp_graph(CpClass::B1bull)));
  CHECK(are_isomorphic(make_named("paw"), cp_graph(CpClass::F1paw)));
  CHECK(are_isomorphic(make_named("K4-e"), cp_graph(CpClass::K4e)));
  CHECK(make_named("K13") == cp_graph(CpClass::K13));
  const Graph u = make_named("K1uK5");
  CHECK(u.order() == 6);
  CHECK(isolated_vertices(u).to_vector() == std::vector<int>{0});
  CHECK(make_named("P2+P3") == make_named("P2uP3"));
  CHECK(make_named(" P4 ") == path_graph(4));
  CHECK_ERROR(make_named("Q9"), ErrorCode::UnknownSpec);
  CHECK_ERROR(make_named(""), ErrorCode::UnknownSpec);
  CHECK_ERROR(make_named("C2"), ErrorCode::BadParameter);
  CHECK_ERROR(make_named("P0"), ErrorCode::BadParameter);
  CHECK_ERROR(make_named("P70"), ErrorCode::TooLarge);
}

TEST_CASE("graph generators") {
  const std::vector<std::size_t> classes{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(graphs_of_order(n).size() == classes[n - 1]);
  CHECK(all_graphs_up_to(4).size() == 18);
  CHECK(all_graphs_up_to(5, [](const Graph& g) { return is_connected(g); }).size() == 1 + 1 + 2 + 6 + 21);
  std::uint64_t labelled = 0, edges = 0;
  for_each_labeled_graph(4, [&](const Graph& g) {
    ++labelled;
    edges += g.size();
  });
  CHECK(labelled == 64);
  CHECK(edges == 6 * 32);
  CHECK_ERROR(graphs_of_order(9), ErrorCode::TooLarge);
}

TEST_CASE("tree generators") {
  const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    const auto trees = all_trees(n);
    REQUIRE(trees.size() == counts[n - 1]);
    for (const Graph& t : trees) REQUIRE(is_tree(t));
  }
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> a, b;
    for (const Graph& t : all_trees(n)) a.insert(tree_canonical_code(t));
    for (const Graph& t : all_trees_prufer(n)) b.insert(tree_canonical_code(t));
    REQUIRE(a == b);
  }
  CHECK(tree_from_prufer({3, 3, 3}) == complete_bipartite_graph(1, 4).relabeled({3, 0, 1, 2, 4}));
  CHECK_ERROR(tree_from_prufer({5}), ErrorCode::IndexOutOfRange);
}

TEST_CASE("constructed family") {
  const Graph g = build_f1(F1Params{1, 2, {}, {0}});
  CHECK(g.order() == 6);
  CHECK(is_in_f1(g));
  const auto roles = f1_roles(g);
  REQUIRE(roles);
  CHECK(g.degree(roles->x) == 1);
  CHECK(roles->p.size() + roles->q.size() == g.degree(roles->w));
  CHECK(singletons_valid(g));

  CHECK_ERROR(build_f1(F1Params{0, 0, {}, {}}), ErrorCode::BadF1Params);
  CHECK_ERROR(build_f1(F1Params{1, 1, {}, {}}), ErrorCode::BadF1Params);
  CHECK_ERROR(build_f1(F1Params{0, 2, {{0, 1}}, {}}), ErrorCode::BadF1Params);  // full vertex in Q
  CHECK_ERROR(build_f1(F1Params{0, 2, {{0, 2}}, {}}), ErrorCode::BadF1Params);
  CHECK_ERROR(build_f1(F1Params{2, 0, {}, {2}}), ErrorCode::BadF1Params);
  CHECK_ERROR(build_f1(F1Params{-1, 2, {}, {}}), ErrorCode::BadF1Params);

  std::mt19937_64 rng(43);
  for (int p = 0; p <= 3; ++p) {
    for (int q : {0, 2, 3, 4}) {
      if (p + q == 0) continue;
      for (const Graph& m : all_f1_members(p, q)) {
        REQUIRE(is_in_f1(m));
        REQUIRE(is_in_f1(m.relabeled(oracle::random_permutation(m.order(), rng))));
        REQUIRE(singletons_valid(m));
        REQUIRE(min_degree(m) == 1);
        REQUIRE(full_vertices(m).empty());
      }
    }
  }
  CHECK_FALSE(is_in_f1(path_graph(6)));
  CHECK(is_in_f1(path_graph(4)));
}

TEST_CASE("low-degree shapes") {
  CHECK(is_isolate_plus_clique(make_named("K1uK4")));
  CHECK(is_isolate_plus_clique(make_named("K1")));
  CHECK(is_isolate_plus_clique(make_named("E2")));
  CHECK_FALSE(is_isolate_plus_clique(make_named("E3")));
  CHECK_FALSE(is_isolate_plus_clique(make_named("K1uP3")));
  CHECK(is_pendant_clique(make_named("K1uK4").with_edge(0, 1)));
  CHECK(is_pendant_clique(make_named("P3")));
  CHECK_FALSE(is_pendant_clique(make_named("P4")));
  CHECK_FALSE(is_pendant_clique(make_named("K4")));
}
