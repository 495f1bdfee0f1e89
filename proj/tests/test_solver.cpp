#include <doctest.h>

#include <fstream>
#include <random>

#include "check_error.hpp"
#include "coalition/catalog.hpp"
#include "coalition/domination.hpp"
#include "coalition/parallel.hpp"
#include "coalition/rgs.hpp"
#include "coalition/solver.hpp"
#include "oracles.hpp"

using namespace coalition;

namespace {

void check_witness(const Graph& g, const SolverResult& r) {
  if (r.value == 0) {
    CHECK_FALSE(r.witness.has_value());
    return;
  }
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size() == r.value);
  CHECK(validate_partition(g, *r.witness).valid);
}

int golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  int v = -1;
  in >> v;
  return v;
}

}  // namespace

TEST_CASE("coalition numbers from the definitions") {
  struct Case {
    const char* spec;
    int value;
  };
  for (auto [spec, value] : std::initializer_list<Case>{
           {"P5", 4}, {"C7", 5}, {"K1,3", 3}, {"K1uK5", 6}, {"P10", 6}, {"C6", 6}, {"P6", 5}}) {
    CAPTURE(spec);
    const Graph g = make_named(spec);
    const auto e = coalition_number_enumerate(g);
    const auto b = coalition_number_bnb(g);
    CHECK(e.value == value);
    CHECK(b.value == value);
    check_witness(g, e);
    check_witness(g, b);
  }
}

TEST_CASE("bull matches the recorded oracle value") {
  const Graph bull = make_named("bull");
  const int recorded = golden("bull.txt");
  CHECK(oracle::coalition_number(bull) == recorded);
  CHECK(coalition_number_enumerate(bull).value == recorded);
  CHECK(coalition_number_bnb(bull).value == recorded);
  CHECK(coalition_number_enumerate(bull).stats.partitions_examined == 52);
}

TEST_CASE("isolate plus edge") {
  const Graph g = make_named("K1uK2");
  CHECK(oracle::coalition_number(g) == 3);
  const auto e = coalition_number_enumerate(g);
  CHECK(e.value == 3);
  CHECK_FALSE(e.no_partition);
  CHECK(coalition_number_bnb(g).value == 3);
}

TEST_CASE("solver agrees with the labeling oracle on all graphs up to six vertices") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graphs_of_order(n)) {
      const int want = oracle::coalition_number(g);
      const auto e = coalition_number_enumerate(g);
      const auto b = coalition_number_bnb(g);
      REQUIRE(e.value == want);
      REQUIRE(b.value == want);
      REQUIRE((want == n) == singletons_valid(g));
      check_witness(g, e);
      check_witness(g, b);
      REQUIRE(e.witness == b.witness);
      if (want > 0) REQUIRE(want <= upper_bound(g));
    }
  }
}

TEST_CASE("witness is the least restricted-growth string of maximum size") {
  for (const char* spec : {"P5", "C5", "P7", "bull", "K1,3", "S(2,2)"}) {
    CAPTURE(spec);
    const Graph g = make_named(spec);
    const int n = g.order();
    const auto adj = oracle::adjacency(g);
    const int c = oracle::coalition_number(g);
    std::optional<std::vector<std::uint8_t>> least;
    for (const auto& s : rgs::prefixes(n)) {
      std::vector<std::set<int>> blocks(*std::max_element(s.begin(), s.end()) + 1);
      for (int v = 0; v < n; ++v) blocks[s[v]].insert(v);
      if (static_cast<int>(blocks.size()) == c && oracle::is_c_partition(adj, blocks)) {
        least = s;
        break;
      }
    }
    REQUIRE(least);
    CHECK(coalition_number_enumerate(g).witness->to_rgs() == *least);
    CHECK(coalition_number_enumerate_serial(g).witness->to_rgs() == *least);
    CHECK(coalition_number_bnb(g).witness->to_rgs() == *least);
    CHECK(least_partition_with(g, c)->to_rgs() == *least);
  }
  CHECK_FALSE(least_partition_with(path_graph(5), 5).has_value());
  CHECK_FALSE(least_partition_with(path_graph(5), 0).has_value());
}

TEST_CASE("parallel enumeration matches the serial reference") {
  std::mt19937_64 rng(47);
  for (int threads : {1, 2, 4}) {
    set_threads(threads);
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 6);
      const Graph g = oracle::random_graph(n, 0.35, rng);
      const auto par = coalition_number_enumerate(g);
      const auto ser = coalition_number_enumerate_serial(g);
      REQUIRE(par.value == ser.value);
      REQUIRE(par.witness == ser.witness);
      REQUIRE(par.stats.partitions_examined == rgs::bell(n));
      REQUIRE(ser.stats.partitions_examined == rgs::bell(n));
      const auto b = coalition_number_bnb(g);
      REQUIRE(b.value == ser.value);
      REQUIRE(b.witness == ser.witness);
    }
  }
  set_threads(0);
}

TEST_CASE("branch and bound agrees with enumeration on random graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 3);
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const auto e = coalition_number_enumerate(g);
    const auto b = coalition_number_bnb(g);
    REQUIRE(e.value == b.value);
    check_witness(g, b);
    if (e.value > 0) REQUIRE(e.value <= upper_bound(g));
  }
}

TEST_CASE("upper bounds") {
  CHECK(upper_bound(path_graph(5)) == 5);
  CHECK(upper_bound(path_graph(20)) == 6);
  CHECK(upper_bound(cycle_graph(30)) == 6);
  CHECK(upper_bound(complete_graph(4)) == 4);
  CHECK(upper_bound(complete_graph(8)) == 8);
  CHECK(upper_bound(complete_bipartite_graph(1, 10)) == 11);  // min(11, 42, 22, 22)
  CHECK(upper_bound(double_star_graph(4, 4)) == 10);          // 2(5 + 1) = 12, (2)(6) = 12, 16, n = 10
  CHECK(upper_bound(make_named("3K2")) == 4);                 // (1 + 3)^2 / 4
  // Non-path graph with max degree 2 and a leaf: the quarter-square bound gives 6.
  CHECK(upper_bound(make_named("P3+C3+P4")) == 6);
  CHECK_ERROR(upper_bound(Graph()), ErrorCode::EmptyGraph);
}

TEST_CASE("limits and errors") {
  CHECK_ERROR(coalition_number_enumerate(path_graph(14)), ErrorCode::TooLargeForEnumeration);
  CHECK_ERROR(coalition_number_enumerate(Graph()), ErrorCode::EmptyGraph);
  CHECK_ERROR(coalition_number_bnb(Graph()), ErrorCode::EmptyGraph);
  SolverConfig zero;
  zero.node_limit = 0;
  CHECK_ERROR(coalition_number_bnb(path_graph(4), zero), ErrorCode::BadParameter);
  SolverConfig negative;
  negative.time_limit = std::chrono::milliseconds(-5);
  CHECK_ERROR(coalition_number_bnb(path_graph(4), negative), ErrorCode::BadParameter);

  SolverConfig tiny;
  tiny.node_limit = 10;
  const Graph g = make_named("S(3,3)uP6");
  const auto r = coalition_number_bnb(g, tiny);
  CHECK(r.limit_exceeded);
  CHECK(r.value <= coalition_number_bnb(g).value);
  if (r.witness) CHECK(validate_partition(g, *r.witness).valid);

  const auto big = coalition_number_bnb(path_graph(16));
  CHECK(big.value == 6);
  CHECK_FALSE(big.limit_exceeded);
  check_witness(path_graph(16), big);

  SolverConfig enumerate;
  enumerate.method = Method::Enumerate;
  CHECK(solve(path_graph(9), enumerate).stats.partitions_examined == rgs::bell(9));
  CHECK(solve(path_graph(9)).value == 5);
}
