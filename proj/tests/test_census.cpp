#include <doctest.h>

#include <random>

#include "check_error.hpp"
#include "coalition/census.hpp"
#include "coalition/constructions.hpp"
#include "coalition/isomorphism.hpp"
#include "coalition/parallel.hpp"
#include "coalition/rgs.hpp"
#include "coalition/solver.hpp"
#include "coalition/verify.hpp"
#include "oracles.hpp"

using namespace coalition;

namespace {

std::vector<CpClass> classes(std::initializer_list<CpClass> cs) { return cs; }

// Census by the definition: every labeling, oracle validity, isomorphism oracle.
std::set<CpClass> oracle_census(int k) {
  const Graph g = path_graph(k);
  const auto adj = oracle::adjacency(g);
  std::set<CpClass> out;
  for (const auto& s : rgs::prefixes(k)) {
    std::vector<std::set<int>> blocks(*std::max_element(s.begin(), s.end()) + 1);
    for (int v = 0; v < k; ++v) blocks[s[v]].insert(v);
    if (!oracle::is_c_partition(adj, blocks)) continue;
    const int nb = static_cast<int>(blocks.size());
    std::vector<Edge> edges;
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j)
        if (!oracle::dominates(adj, blocks[i]) && !oracle::dominates(adj, blocks[j]) &&
            oracle::dominates(adj, oracle::unite(blocks[i], blocks[j])))
          edges.emplace_back(i, j);
    const Graph h = Graph::from_edge_list(nb, edges);
    CpClass c = CpClass::Outside;
    for (CpClass f : kAllCpClasses)
      if (oracle::isomorphic(h, cp_graph(f))) c = f;
    out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("census of short paths") {
  const auto p1 = census_path(1);
  CHECK(p1.nc() == 1);
  CHECK(p1.realizable() == classes({CpClass::K1}));
  const auto p4 = census_path(4);
  CHECK(p4.nc() == 3);
  CHECK(p4.realizable() == classes({CpClass::K2, CpClass::P3, CpClass::C4}));
  CHECK(census_path(6).nc() == 10);
  const auto p10 = census_path(10);
  CHECK(p10.nc() == 15);
  CHECK(p10.realizes(CpClass::S22));
  CHECK(p10.partitions_scanned == rgs::bell(10));
  CHECK_ERROR(census_path(0), ErrorCode::TooLarge);
  CHECK_ERROR(census_path(14), ErrorCode::TooLarge);
}

TEST_CASE("census agrees with the definition-level oracle") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const auto r = census_path(k);
    const auto want = oracle_census(k);
    const auto realizable = r.realizable();
    std::set<CpClass> got(realizable.begin(), realizable.end());
    if (r.outside_count) got.insert(CpClass::Outside);
    REQUIRE(got == want);
  }
}

TEST_CASE("census witnesses re-validate and classify") {
  for (int k = 1; k <= 10; ++k) {
    const auto r = census_path(k);
    const Graph g = path_graph(k);
    CHECK(r.outside_count == 0);
    CHECK(r.max_blocks == coalition_number_enumerate(g).value);
    for (CpClass c : r.realizable()) {
      const auto& w = *r.witnesses[static_cast<int>(c)];
      REQUIRE(validate_partition(g, w).valid);
      REQUIRE(classify_cp(coalition_graph(g, w).graph) == c);
    }
  }
}

TEST_CASE("parallel census matches the serial reference") {
  for (int threads : {1, 3}) {
    set_threads(threads);
    for (int k = 5; k <= 11; ++k) {
      const auto a = census_path(k);
      const auto b = census_path_serial(k);
      REQUIRE(a.witnesses == b.witnesses);
      REQUIRE(a.partitions_scanned == b.partitions_scanned);
      REQUIRE(a.valid_partitions == b.valid_partitions);
      REQUIRE(a.max_blocks == b.max_blocks);
    }
  }
  set_threads(0);
}

TEST_CASE("census on other graphs") {
  const auto r = census_graph(cycle_graph(6));
  CHECK(r.max_blocks == 6);
  CHECK(r.partitions_scanned == rgs::bell(6));
  CHECK_ERROR(census_graph(Graph()), ErrorCode::TooLarge);
}

TEST_CASE("machine-readable census lines") {
  const auto lines = census_lines(census_path(2), true);
  REQUIRE(lines.size() == static_cast<std::size_t>(kCpClassCount));
  CHECK(lines[0] == "2,K1,N,");
  CHECK(lines[2] == "2,K2bar,Y,1|2");
}

TEST_CASE("expected grid cells") {
  CHECK(expected_cell(CpClass::P3, 4) == 'Y');
  CHECK(expected_cell(CpClass::F2, 8) == 'n');
  CHECK(expected_cell(CpClass::K1uK2, 5) == 'N');
  CHECK(expected_cell(CpClass::S22, 12) == 'Y');
  CHECK(expected_cell(CpClass::K2, 3) == 'Y');
  CHECK(expected_nc(3) == 2);
  CHECK(expected_nc(13) == 15);
  int ys = 0;
  for (CpClass c : kAllCpClasses) ys += expected_cell(c, 10) == 'Y';
  CHECK(ys == 15);
  for (int k = 1; k <= 10; ++k) {
    int count = 0;
    for (CpClass c : kAllCpClasses) count += expected_cell(c, k) == 'Y' || expected_cell(c, k) == 'y';
    CHECK(count == expected_nc(k));
  }
}

TEST_CASE("grid diff") {
  const auto t = table1(6);
  REQUIRE(t.censuses.size() == 6);
  REQUIRE(t.mismatches.size() == 1);
  CHECK(t.mismatches[0].cls == CpClass::K2);
  CHECK(t.mismatches[0].k == 3);
  CHECK(t.mismatches[0].hard());
  CHECK(format_table1(t).find("!N") != std::string::npos);
}

TEST_CASE("construction examples") {
  const auto p3 = build_construction(construction_spec("odd_even_p3"), 6);
  CHECK(format_partition(p3, false) == "0,1|2,4|3,5");
  CHECK(classify_cp(coalition_graph(path_graph(6), p3).graph) == CpClass::P3);

  const auto b4 = build_construction(construction_spec("bullet_p6_p4"), 6);
  CHECK(format_partition(b4, false) == "0,3|1|2,4|5");

  const auto k8 = build_construction(construction_spec("two_k2"), 8);
  CHECK(format_partition(k8, false) == "0,6|1,7|2,3|4,5");

  const auto k2 = build_construction(construction_spec("halves_k2"), 4);
  CHECK(classify_cp(coalition_graph(path_graph(4), k2).graph) == CpClass::K2);
  const auto bull = build_construction(construction_spec("bull"), 9);
  CHECK(classify_cp(coalition_graph(path_graph(9), bull).graph) == CpClass::B1bull);
}

TEST_CASE("bullet partitions match their one-indexed text") {
  const std::vector<std::pair<std::string, std::string>> texts{
      {"bullet_p8_s12", "1,4|2,6,8|3|5|7"}, {"bullet_p7_s12", "1,4|2,6|3|5|7"}, {"bullet_p7_2k2", "1,7|2|3,4|5,6"},
      {"bullet_p6_p4", "1,4|2|3,5|6"},      {"bullet_p6_2k2", "1,6|2|3,4|5"},   {"bullet_p5_p4", "1|2|3,4|5"},
      {"bullet_p5_k3", "1,5|2|3,4"}};
  for (const auto& [id, text] : texts) {
    const auto& spec = construction_spec(id);
    const auto p = build_construction(spec, spec.k_min);
    CHECK(p.blocks() == parse_partition(text, spec.k_min, true).blocks());
  }
}

TEST_CASE("construction errors") {
  CHECK_ERROR(construction_spec("nope"), ErrorCode::UnknownSpec);
  CHECK_ERROR(build_construction(construction_spec("f2"), 8), ErrorCode::OutOfRange);
  CHECK_ERROR(build_construction(construction_spec("bullet_p8_s12"), 9), ErrorCode::OutOfRange);
  CHECK_ERROR(build_construction(construction_spec("two_k2"), 13), ErrorCode::MalformedConstruction);
  CHECK_ERROR(verify_constructions(9), ErrorCode::BadParameter);
}

TEST_CASE("construction replay up to twelve") {
  const auto r = verify_constructions(12);
  CHECK(r.failures() == 0);
  std::set<std::string> ids;
  for (const auto& c : r.checks) ids.insert(c.id);
  CHECK(ids.size() == construction_specs().size());
}

TEST_CASE("theorem drivers on small inputs") {
  const auto r = verify_theorems(5, 8);
  CHECK(r.ok());
  CHECK(r.checks.size() == 7);
  CHECK(r.format().find("FAIL") == std::string::npos);
  CHECK_ERROR(verify_theorems(8, 8), ErrorCode::BadParameter);
  CHECK_ERROR(verify_theorems(5, 13), ErrorCode::BadParameter);
}

TEST_CASE("only K1 u K4 attains C = 5 among five-vertex graphs with an isolate") {
  int hits = 0;
  for (const Graph& g : graphs_of_order(5)) {
    if (min_degree(g) != 0) continue;
    if (coalition_number_enumerate(g).value == 5) {
      ++hits;
      CHECK(are_isomorphic(g, make_named("K1uK4")));
    }
  }
  CHECK(hits == 1);
}
