#include <doctest.h>

#include <random>

#include "check_error.hpp"
#include "coalition/catalog.hpp"
#include "coalition/isomorphism.hpp"
#include "oracles.hpp"

using namespace coalition;

TEST_CASE("isomorphism on named graphs") {
  CHECK(are_isomorphic(make_named("S(1,2)"), make_named("S(2,1)")));
  CHECK(are_isomorphic(make_named("P4"), make_named("P4").complement()));
  CHECK_FALSE(are_isomorphic(make_named("P4"), make_named("K1,3")));
  CHECK_FALSE(are_isomorphic(make_named("C6"), make_named("2K3")));  // same degrees
  CHECK_FALSE(are_isomorphic(make_named("P3"), make_named("P4")));
}

TEST_CASE("isomorphism agrees with permutation brute force") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = trial % 2 ? a.relabeled(oracle::random_permutation(n, rng)) : oracle::random_graph(n, 0.5, rng);
    const bool want = oracle::isomorphic(a, b);
    REQUIRE(are_isomorphic(a, b) == want);
    REQUIRE((canonical_code(a) == canonical_code(b)) == want);
  }
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph h = g.relabeled(oracle::random_permutation(n, rng));
    REQUIRE(canonical_code(g) == canonical_code(h));
    REQUIRE(canonical_graph(g) == canonical_graph(h));
    REQUIRE(g.relabeled(canonical_labeling(g)) == canonical_graph(g));
    REQUIRE(are_isomorphic(g, canonical_graph(g)));
  }
  CHECK_ERROR(canonical_code(path_graph(12)), ErrorCode::TooLarge);
}

TEST_CASE("tree canonical codes") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    std::vector<int> seq(std::max(0, n - 2));
    for (int& x : seq) x = static_cast<int>(rng() % n);
    const Graph t = n == 1 ? Graph::from_edge_list(1, {}) : tree_from_prufer(seq);
    REQUIRE(is_tree(t));
    const Graph u = t.relabeled(oracle::random_permutation(n, rng));
    REQUIRE(tree_canonical_code(t) == tree_canonical_code(u));
  }
  CHECK(tree_canonical_code(path_graph(6)) != tree_canonical_code(double_star_graph(2, 2)));
  CHECK(tree_canonical_code(double_star_graph(1, 2)) == tree_canonical_code(double_star_graph(2, 1)));
}
