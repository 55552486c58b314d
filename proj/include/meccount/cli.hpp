#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meccount/generators.hpp"
#include "meccount/graph.hpp"
#include "meccount/oracle.hpp"

namespace meccount {

enum class Method { Auto, Tree, Chordal, Brute };

Method method_from_string(const std::string& name);
const char* method_name(Method m);

struct MethodCheck {
  std::string method;
  bool agrees = false;
};

/// Result record for one counting run. count is a decimal string so no
/// consumer ever truncates it.
struct CountReport {
  std::string method;
  std::string count;
  int n = 0;
  int m = 0;
  int d = 0;
  std::optional<int> k;
  double elapsed_ms = 0.0;
  std::vector<MethodCheck> verified_against;
};

/// Counts the MECs of g. Disconnected inputs factor into the product of
/// per-component counts. Method auto resolves per component in the order
/// tree, chordal, brute; a forced method raises the matching error when a
/// component does not qualify.
CountReport run_count(const UndirectedGraph& g, Method method,
                      int brute_edge_limit = kDefaultBruteEdgeLimit);

/// Runs every applicable method and checks pairwise agreement. Raises
/// Disagreement when two applicable methods differ (an implementation bug,
/// never expected). With a single applicable method the report simply lists
/// that one check.
CountReport run_verify(const UndirectedGraph& g,
                       int brute_edge_limit = kDefaultBruteEdgeLimit);

/// MECCOUNT_BRUTE_EDGE_LIMIT when set, otherwise the default guard.
int brute_edge_limit_from_env();

/// True when MECCOUNT_TIMING is set to a non-empty, non-zero value; reports
/// then carry real elapsed times instead of the deterministic 0.
bool timing_enabled_from_env();

std::string report_to_json(const CountReport& report);
std::string report_to_text(const CountReport& report);

struct BenchRow {
  GenSpec spec;
  CountReport report;
  std::string error;  // empty on success
};

std::vector<BenchRow> run_bench(const GenSpec& base, int repetitions,
                                Method method, int brute_edge_limit);

}  // namespace meccount
