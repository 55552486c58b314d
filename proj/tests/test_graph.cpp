#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "meccount/graph.hpp"
#include "test_util.hpp"

using namespace meccount;
namespace tu = meccount::testutil;

TEST_CASE("from_edges normalizes and validates") {
  auto g = UndirectedGraph::from_edges(3, {{2, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.edges()[1] == Edge{1, 2});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK(!g.has_edge(0, 1));
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 1) == -1);

  CHECK_THROWS_AS(UndirectedGraph::from_edges(2, {{0, 0}}), VertexOutOfRange);
  CHECK_THROWS_AS(UndirectedGraph::from_edges(2, {{0, 1}, {1, 0}}),
                  VertexOutOfRange);
  CHECK_THROWS_AS(UndirectedGraph::from_edges(2, {{0, 5}}), VertexOutOfRange);
}

TEST_CASE("connectivity and components") {
  auto g = UndirectedGraph::from_edges(5, {{0, 1}, {3, 4}});
  CHECK(!g.is_connected());
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<NodeId>{0, 1});
  CHECK(comps[1] == std::vector<NodeId>{2});
  CHECK(comps[2] == std::vector<NodeId>{3, 4});
  CHECK(tu::path(4).is_tree());
  CHECK(!tu::cycle(4).is_tree());
  CHECK(!g.is_tree());
}

TEST_CASE("mixed graph marks and directed queries") {
  auto m = MixedGraph::with_directed(tu::path(3), {{1, 0}});
  CHECK(m.has_directed(1, 0));
  CHECK(!m.has_directed(0, 1));
  CHECK(m.has_undirected(1, 2));
  CHECK(m.parents(0) == std::vector<NodeId>{1});
  CHECK(m.directed_edges() == std::vector<Edge>{{1, 0}});
  CHECK(m.undirected_edges() == std::vector<Edge>{{1, 2}});
  CHECK_THROWS_AS(
      MixedGraph::with_directed(tu::path(3), {{0, 1}, {1, 0}}),
      WindowMismatch);
  CHECK_THROWS_AS(MixedGraph::with_directed(tu::path(3), {{0, 2}}),
                  VertexOutOfRange);
}

TEST_CASE("induced subgraph keeps marks and relabels monotonically") {
  // K4 with one directed edge; restrict to that edge's endpoints
  auto m = MixedGraph::with_directed(tu::complete(4), {{3, 1}});
  auto sub = induced_subgraph(m, {1, 3});
  CHECK(sub.labels == std::vector<NodeId>{1, 3});
  CHECK(sub.graph.node_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.graph.has_directed(1, 0));  // 3->1 maps to local 1->0

  // whole vertex set is the identity relabeling
  auto whole = induced_subgraph(m, {0, 1, 2, 3});
  CHECK(whole.graph == m);

  // non-adjacent pair gives an edgeless graph
  auto none = induced_subgraph(MixedGraph(tu::path(3)), {0, 2});
  CHECK(none.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(m, {0, 9}), VertexOutOfRange);
}

TEST_CASE("neighborhood is the open neighborhood of the set") {
  auto g = tu::star(3);
  CHECK(neighborhood(g, {0}) == std::vector<NodeId>{1, 2, 3});
  CHECK(neighborhood(g, {}) == std::vector<NodeId>{});
  auto p = tu::path(4);
  CHECK(neighborhood(p, {1}) == std::vector<NodeId>{0, 2});
  // may intersect the input set
  CHECK(neighborhood(p, {1, 2}) == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("mark encoding round-trips") {
  auto m = MixedGraph::with_directed(tu::path(4), {{1, 0}, {1, 2}});
  auto key = encode_marks(m);
  CHECK(key.size() == 3);
  CHECK(decode_marks(m.skeleton(), key) == m);
  CHECK_THROWS_AS(decode_marks(m.skeleton(), "00"), WindowMismatch);
  CHECK_THROWS_AS(decode_marks(m.skeleton(), "00x"), WindowMismatch);
}
