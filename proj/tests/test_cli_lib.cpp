#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "meccount/cli.hpp"
#include "meccount/edgelist.hpp"
#include "meccount/oracle.hpp"
#include "test_util.hpp"

using namespace meccount;
namespace tu = meccount::testutil;

TEST_CASE("edge list parsing") {
  std::istringstream ok("# comment\n4 3\n0 1\n1 2\n2 3\n");
  auto g = parse_edge_list(ok);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);

  std::istringstream crlf("2 1\r\n0 1\r\n");
  CHECK(parse_edge_list(crlf).edge_count() == 1);

  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_edge_list(in), ParseError);
  };
  bad("");
  bad("4\n");
  bad("4 3\n0 1\n1 2\n");            // missing edge
  bad("4 1\n0 1\n1 2\n");            // trailing data
  bad("4 1\n0 0\n");                 // self-loop
  bad("4 2\n0 1\n0 1\n");            // duplicate
  bad("4 1\n0 9\n");                 // out of range
  bad("4 1\n0 x\n");                 // not a number
  bad("0 0\n");                      // empty graph
  bad("4 1\n0 1 2\n");               // extra token
}

TEST_CASE("round trip through the writer") {
  auto g = tu::diamond();
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  CHECK(parse_edge_list(in).edges() == g.edges());
}

TEST_CASE("run_count picks methods and matches the oracle") {
  auto tree_report = run_count(tu::path(4), Method::Auto);
  CHECK(tree_report.method == "tree");
  CHECK(tree_report.count == "3");
  CHECK(tree_report.n == 4);
  CHECK(tree_report.m == 3);
  CHECK(tree_report.d == 2);
  CHECK(tree_report.k == 1);

  auto chordal_report = run_count(tu::diamond(), Method::Auto);
  CHECK(chordal_report.method == "chordal");
  CHECK(BigInt(chordal_report.count) ==
        count_mecs_bruteforce(tu::diamond()));

  auto brute_report = run_count(tu::cycle(4), Method::Auto);
  CHECK(brute_report.method == "brute");

  CHECK_THROWS_AS(run_count(tu::cycle(4), Method::Tree), NotATree);
  CHECK_THROWS_AS(run_count(tu::cycle(4), Method::Chordal), NotChordal);
  CHECK_THROWS_AS(run_count(tu::complete(8), Method::Brute), TooLarge);
}

TEST_CASE("disconnected inputs multiply per-component counts") {
  // P2 + P3 + isolated vertex: 1 * 2 * 1
  auto g = UndirectedGraph::from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
  auto report = run_count(g, Method::Auto);
  CHECK(report.count == "2");
  CHECK(BigInt(report.count) == count_mecs_bruteforce(g));

  // mixed families per component resolve to "auto"
  auto mixed = UndirectedGraph::from_edges(
      7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
  auto mixed_report = run_count(mixed, Method::Auto);
  CHECK(BigInt(mixed_report.count) == count_mecs_bruteforce(mixed));
  CHECK(mixed_report.method == "auto");

  // forced brute on a disconnected instance still factors
  auto forced = run_count(g, Method::Brute);
  CHECK(forced.count == "2");
}

TEST_CASE("run_verify agreement and applicability") {
  auto tree = run_verify(tu::path(5));
  CHECK(tree.verified_against.size() == 3);
  for (const auto& check : tree.verified_against) CHECK(check.agrees);

  // C4: only brute applies
  auto c4 = run_verify(tu::cycle(4));
  CHECK(c4.verified_against.size() == 1);
  CHECK(c4.verified_against[0].method == "brute");
  CHECK(c4.count == count_mecs_bruteforce(tu::cycle(4)).get_str());

  // non-chordal and too large for brute: nothing applies
  std::vector<Edge> big_cycle_edges;
  for (int i = 0; i < 30; ++i) big_cycle_edges.emplace_back(i, (i + 1) % 30);
  auto big_cycle = UndirectedGraph::from_edges(30, big_cycle_edges);
  CHECK_THROWS_AS(run_verify(big_cycle), Error);
}

TEST_CASE("reports serialize deterministically") {
  auto report = run_count(tu::path(4), Method::Auto);
  report.elapsed_ms = 0.0;
  auto again = run_count(tu::path(4), Method::Auto);
  again.elapsed_ms = 0.0;
  CHECK(report_to_json(report) == report_to_json(again));
  CHECK(report_to_text(report) == report_to_text(again));
  // count is a string in JSON
  CHECK(report_to_json(report).find("\"count\": \"3\"") != std::string::npos);
  // k is null for non-chordal graphs
  auto c4 = run_count(tu::cycle(4), Method::Auto);
  CHECK(report_to_json(c4).find("\"k\": null") != std::string::npos);
}

TEST_CASE("bench rows carry errors without aborting") {
  GenSpec spec{Family::Complete, 8, {}, {}, 0};
  auto rows = run_bench(spec, 2, Method::Brute, 24);
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].error.empty());  // 28 edges exceeds the guard

  GenSpec trees{Family::RandomTree, 20, {}, {}, 5};
  auto ok = run_bench(trees, 3, Method::Tree, 24);
  for (const auto& row : ok) {
    CHECK(row.error.empty());
    CHECK(!row.report.count.empty());
  }
}
