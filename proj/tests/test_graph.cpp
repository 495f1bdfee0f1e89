#include <doctest.h>

#include <random>
#include <sstream>

#include "check_error.hpp"
#include "coalition/catalog.hpp"
#include "coalition/graph.hpp"
#include "oracles.hpp"

using namespace coalition;

TEST_CASE("vertex sets") {
  const VertexSet s = VertexSet::of({0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  CHECK((s - VertexSet::single(3)).to_vector() == std::vector<int>{0, 5});
  CHECK(VertexSet::of({0, 5}).subset_of(s));
  CHECK_FALSE(s.intersects(VertexSet::of({1, 2})));
  CHECK(full_mask(64) == ~Mask{0});
  CHECK(full_mask(0) == 0);
}

TEST_CASE("edge list construction and queries") {
  const Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {1, 0}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(2, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 1, 1});
  CHECK(min_degree(g) == 1);
  CHECK(max_degree(g) == 2);
  CHECK(is_path(g));
  CHECK(is_tree(g));
  CHECK_FALSE(is_cycle(g));
  CHECK(is_cycle(g.with_edge(0, 3)));
  CHECK(closed_neighborhood(g, VertexSet::of({1})).to_vector() == std::vector<int>{0, 1, 2});
  CHECK(open_neighborhood(g, VertexSet::of({1, 2})).to_vector() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("construction errors") {
  CHECK_ERROR(Graph::from_edge_list(3, {{0, 3}}), ErrorCode::IndexOutOfRange);
  CHECK_ERROR(Graph::from_edge_list(3, {{1, 1}}), ErrorCode::LoopEdge);
  CHECK_ERROR(Graph::from_edge_list(65, {}), ErrorCode::TooLarge);
  CHECK_ERROR(min_degree(Graph()), ErrorCode::EmptyGraph);
  CHECK_ERROR(max_degree(Graph()), ErrorCode::EmptyGraph);
}

TEST_CASE("full and isolated vertices") {
  const Graph g = make_named("K1uK3");
  CHECK(isolated_vertices(g).to_vector() == std::vector<int>{0});
  CHECK(full_vertices(g).empty());
  CHECK(full_vertices(make_named("K1,3")).to_vector() == std::vector<int>{0});
  CHECK(is_complete(make_named("K4")));
  CHECK(is_complete(Graph::from_edge_list(1, {})));
}

TEST_CASE("derived graphs") {
  const Graph p4 = path_graph(4);
  CHECK(p4.complement().size() == 3);
  CHECK(p4.complement().complement() == p4);
  CHECK(p4.induced(VertexSet::of({0, 1, 3})).size() == 1);
  CHECK(p4.without_vertex(1).size() == 1);
  const Graph u = p4.disjoint_union(complete_graph(3));
  CHECK(u.order() == 7);
  CHECK(u.size() == 6);
  CHECK(u.adjacent(4, 6));
  CHECK_FALSE(is_connected(u));
  const Graph r = p4.relabeled({3, 2, 1, 0});
  CHECK(r.adjacent(3, 2));
  CHECK(r.adjacent(0, 1));
}

TEST_CASE("edge list text format") {
  const Graph g = parse_edge_list("# a path\n4 3\n0 1\n1 2 # middle\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  std::istringstream in("3 0\n");
  CHECK(read_edge_list(in).order() == 3);
  CHECK_ERROR(parse_edge_list("3 2\n0 1\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_edge_list("3 1\n0 x\n"), ErrorCode::ParseError);
  CHECK_ERROR(parse_edge_list("3 1\n0 3\n"), ErrorCode::IndexOutOfRange);
  CHECK_ERROR(parse_edge_list("3 1\n1 1\n"), ErrorCode::LoopEdge);
  CHECK_ERROR(parse_edge_list(""), ErrorCode::ParseError);
  CHECK_ERROR(parse_edge_list("70 0"), ErrorCode::TooLarge);
}

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph::from_edge_list(1, {})) == "@");
  const Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(petersen.degree_sequence() == std::vector<int>(10, 3));
  CHECK(parse_graph6(">>graph6<<Bg") == path_graph(3));
  CHECK_ERROR(parse_graph6(""), ErrorCode::ParseError);
  CHECK_ERROR(parse_graph6("B"), ErrorCode::ParseError);
  CHECK_ERROR(parse_graph6("Bh"), ErrorCode::ParseError);  // padding bit set
  CHECK_ERROR(parse_graph6("B\x01"), ErrorCode::ParseError);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = to_graph6(g);
    REQUIRE(parse_graph6(s) == g);
    REQUIRE(parse_edge_list(to_edge_list(g)) == g);
  }
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(path_graph(3), {"a", "b", "c"}, "P");
  CHECK(dot.find("graph P") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("\"b\"") != std::string::npos);
}
