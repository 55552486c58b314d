#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "meccount/oracle.hpp"
#include "test_util.hpp"

using namespace meccount;
namespace tu = meccount::testutil;

namespace {

// Acyclicity check independent of the oracle's Kahn loop: DFS coloring.
long acyclic_orientation_count(const UndirectedGraph& g) {
  const int m = g.edge_count();
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<NodeId>> out(g.node_count());
    for (int i = 0; i < m; ++i) {
      auto [a, b] = g.edges()[i];
      if ((mask >> i) & 1)
        out[b].push_back(a);
      else
        out[a].push_back(b);
    }
    std::vector<int> color(g.node_count(), 0);
    bool cyclic = false;
    auto dfs = [&](auto&& self, NodeId v) -> void {
      color[v] = 1;
      for (NodeId u : out[v]) {
        if (color[u] == 1) cyclic = true;
        if (!cyclic && color[u] == 0) self(self, u);
      }
      color[v] = 2;
    };
    for (NodeId v = 0; v < g.node_count() && !cyclic; ++v)
      if (color[v] == 0) dfs(dfs, v);
    if (!cyclic) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerate_mecs on the named examples") {
  auto p2 = enumerate_mecs(tu::path(2));
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].size == 2);
  CHECK(p2[0].cpdag.fully_undirected());

  auto p3 = enumerate_mecs(tu::path(3));
  REQUIRE(p3.size() == 2);
  std::vector<std::int64_t> sizes = {p3[0].size, p3[1].size};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::int64_t>{1, 3});

  auto k3 = enumerate_mecs(tu::complete(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].size == 6);
  CHECK(k3[0].cpdag.fully_undirected());

  CHECK(count_mecs_bruteforce(UndirectedGraph(1)) == 1);
  CHECK(count_mecs_bruteforce(tu::star(3)) == 5);
  CHECK(count_mecs_bruteforce(tu::path(4)) == 3);
}

TEST_CASE("class sizes sum to the number of acyclic orientations") {
  for (const auto& g : {tu::path(4), tu::star(3), tu::complete(4),
                        tu::cycle(4), tu::cycle(5), tu::diamond(),
                        tu::random_tree(6, 1), tu::random_tree(7, 2)}) {
    auto classes = enumerate_mecs(g);
    std::int64_t total = 0;
    for (const auto& cls : classes) total += cls.size;
    CHECK(total == acyclic_orientation_count(g));
    for (const auto& cls : classes) {
      CHECK(cls.representative_dag.fully_directed());
      CHECK(cls.cpdag.skeleton().edges() == g.edges());
    }
  }
}

TEST_CASE("edge guard") {
  CHECK_THROWS_AS(enumerate_mecs(tu::complete(8)), TooLarge);  // 28 edges
  CHECK_THROWS_AS(enumerate_mecs(tu::path(5), 3), TooLarge);
  CHECK_NOTHROW(enumerate_mecs(tu::path(5), 4));
}

TEST_CASE("count_mecs_with_image") {
  auto p2 = tu::path(2);
  // empty window matches every class
  LabeledMixedGraph empty{MixedGraph(UndirectedGraph(0)), {}};
  CHECK(count_mecs_with_image(p2, empty) == count_mecs_bruteforce(p2));

  // the only MEC of P2 is undirected, so a directed image matches nothing
  LabeledMixedGraph directed{MixedGraph::with_directed(tu::path(2), {{0, 1}}),
                             {0, 1}};
  CHECK(count_mecs_with_image(p2, directed) == 0);

  // the collider image matches exactly one class of P3
  auto p3 = tu::path(3);
  LabeledMixedGraph collider{
      MixedGraph::with_directed(tu::path(3), {{0, 1}, {2, 1}}), {0, 1, 2}};
  CHECK(count_mecs_with_image(p3, collider) == 1);

  // histogram agrees entry by entry
  auto hist = image_histogram(p3, {0, 1, 2});
  BigInt total = 0;
  for (const auto& [key, cnt] : hist) total += cnt;
  CHECK(total == count_mecs_bruteforce(p3));
  CHECK(hist.at(encode_marks(collider.graph)) == 1);
}

TEST_CASE("projection selects the unique v-structure-matching MEC") {
  // CPDAG of a->b<-c projected onto {a,b} is undirected
  auto collider = MixedGraph::with_directed(tu::path(3), {{0, 1}, {2, 1}});
  auto proj = projection(collider, {0, 1});
  CHECK(proj.labels == std::vector<NodeId>{0, 1});
  CHECK(proj.graph.fully_undirected());

  // projection on the full vertex set is the MEC itself
  auto whole = projection(collider, {0, 1, 2});
  CHECK(whole.graph == collider);

  // fully undirected chordal MEC projects to fully undirected subgraphs
  auto und = MixedGraph(tu::diamond());
  for (const auto& y : tu::all_subsets(4))
    CHECK(projection(und, y).graph.fully_undirected());
}

TEST_CASE("directed edges survive projection") {
  for (const auto& g : {tu::path(5), tu::star(4), tu::diamond(),
                        tu::random_tree(6, 9)}) {
    auto subsets = tu::all_subsets(g.node_count());
    for (const auto& cls : enumerate_mecs(g)) {
      for (const auto& y : subsets) {
        auto proj = projection(cls.cpdag, y);
        for (const auto& [from, to] : proj.graph.directed_edges())
          CHECK(cls.cpdag.has_directed(proj.labels[from], proj.labels[to]));
      }
    }
  }
}

TEST_CASE("projection uniqueness") {
  // exactly one MEC of the induced skeleton matches the v-structure set
  for (const auto& g : {tu::path(5), tu::diamond(), tu::cycle(5),
                        tu::random_tree(6, 13)}) {
    auto subsets = tu::all_subsets(g.node_count());
    for (const auto& cls : enumerate_mecs(g)) {
      for (const auto& y : subsets) {
        auto restricted = induced_subgraph(cls.cpdag, y);
        auto want = v_structures(restricted.graph);
        int matches = 0;
        for (const auto& sub : enumerate_mecs(restricted.graph.skeleton()))
          if (sub.vstructs == want) ++matches;
        CHECK(matches == 1);
      }
    }
  }
}
