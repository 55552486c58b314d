#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "meccount/chordal_count.hpp"
#include "meccount/cli.hpp"
#include "meccount/edgelist.hpp"
#include "meccount/generators.hpp"
#include "meccount/oracle.hpp"
#include "meccount/tree_count.hpp"

namespace py = pybind11;
using namespace meccount;

namespace {

UndirectedGraph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return UndirectedGraph::from_edges(n, std::move(es));
}

py::int_ bigint_to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::dict report_to_dict(const CountReport& report) {
  py::dict d;
  d["method"] = report.method;
  d["count"] = report.count;
  d["n"] = report.n;
  d["m"] = report.m;
  d["d"] = report.d;
  d["k"] = report.k ? py::object(py::int_(*report.k)) : py::none();
  d["elapsed_ms"] = report.elapsed_ms;
  py::list checks;
  for (const auto& check : report.verified_against) {
    py::dict c;
    c["method"] = check.method;
    c["agrees"] = check.agrees;
    checks.append(c);
  }
  d["verified_against"] = checks;
  return d;
}

GenSpec make_spec(const std::string& family, int n, std::uint64_t seed,
                  std::optional<int> max_degree, std::optional<int> max_clique) {
  GenSpec spec;
  spec.family = family_from_string(family);
  spec.n = n;
  spec.seed = seed;
  spec.max_degree = max_degree;
  spec.max_clique = max_clique;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counting of Markov equivalence classes over a fixed "
            "skeleton";

  py::register_exception<Error>(m, "MecCountError");

  m.def(
      "count_mecs",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         const std::string& method, int brute_edge_limit) {
        UndirectedGraph g = graph_from(n, edges);
        CountReport report =
            run_count(g, method_from_string(method), brute_edge_limit);
        return bigint_to_py(BigInt(report.count));
      },
      py::arg("n"), py::arg("edges"), py::arg("method") = "auto",
      py::arg("brute_edge_limit") = kDefaultBruteEdgeLimit,
      "Number of MECs whose skeleton is the given graph.");

  m.def(
      "count_report",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         const std::string& method, int brute_edge_limit) {
        UndirectedGraph g = graph_from(n, edges);
        return report_to_dict(
            run_count(g, method_from_string(method), brute_edge_limit));
      },
      py::arg("n"), py::arg("edges"), py::arg("method") = "auto",
      py::arg("brute_edge_limit") = kDefaultBruteEdgeLimit,
      "Full counting report as a dict; the count is a decimal string.");

  m.def(
      "verify_report",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         int brute_edge_limit) {
        UndirectedGraph g = graph_from(n, edges);
        return report_to_dict(run_verify(g, brute_edge_limit));
      },
      py::arg("n"), py::arg("edges"),
      py::arg("brute_edge_limit") = kDefaultBruteEdgeLimit,
      "Run all applicable methods; raises on disagreement.");

  m.def(
      "is_chordal",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return is_chordal(graph_from(n, edges));
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "is_tree",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return graph_from(n, edges).is_tree();
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "generate",
      [](const std::string& family, int n, std::uint64_t seed,
         std::optional<int> max_degree, std::optional<int> max_clique) {
        UndirectedGraph g =
            generate(make_spec(family, n, seed, max_degree, max_clique));
        std::vector<std::pair<int, int>> edges;
        for (const auto& [u, v] : g.edges()) edges.emplace_back(u, v);
        return py::make_tuple(g.node_count(), edges);
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0,
      py::arg("max_degree") = py::none(), py::arg("max_clique") = py::none(),
      "Generate an instance; returns (n, edges).");

  m.def(
      "family_stats",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        FamilyStats stats = family_stats(graph_from(n, edges));
        py::dict d;
        d["n"] = stats.n;
        d["m"] = stats.m;
        d["d"] = stats.degree;
        d["k"] = stats.k ? py::object(py::int_(*stats.k)) : py::none();
        return d;
      },
      py::arg("n"), py::arg("edges"));

  m.attr("__version__") = "0.1.0";
}
