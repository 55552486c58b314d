#include "meccount/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "meccount/chordal.hpp"
#include "meccount/chordal_count.hpp"
#include "meccount/oracle.hpp"
#include "meccount/tree_count.hpp"

namespace meccount {

Method method_from_string(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "tree") return Method::Tree;
  if (name == "chordal") return Method::Chordal;
  if (name == "brute") return Method::Brute;
  throw Error(ErrorCode::InvalidInput, "unknown method: " + name);
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Tree: return "tree";
    case Method::Chordal: return "chordal";
    case Method::Brute: return "brute";
  }
  return "?";
}

int brute_edge_limit_from_env() {
  const char* raw = std::getenv("MECCOUNT_BRUTE_EDGE_LIMIT");
  if (!raw || !*raw) return kDefaultBruteEdgeLimit;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0)
    throw Error(ErrorCode::InvalidInput,
                "bad MECCOUNT_BRUTE_EDGE_LIMIT: " + std::string(raw));
  return static_cast<int>(value);
}

bool timing_enabled_from_env() {
  const char* raw = std::getenv("MECCOUNT_TIMING");
  return raw && *raw && std::string(raw) != "0";
}

namespace {

// One component, one concrete method.
BigInt count_component(const UndirectedGraph& comp, Method method,
                       int brute_edge_limit) {
  switch (method) {
    case Method::Tree:
      return count_tree_total(comp, 0);
    case Method::Chordal:
      return count_mec_chordal(comp);
    case Method::Brute:
      return count_mecs_bruteforce(comp, brute_edge_limit);
    case Method::Auto:
      break;
  }
  if (comp.is_tree()) return count_tree_total(comp, 0);
  if (is_chordal(comp)) return count_mec_chordal(comp);
  return count_mecs_bruteforce(comp, brute_edge_limit);
}

Method resolve_auto(const UndirectedGraph& comp) {
  if (comp.is_tree()) return Method::Tree;
  if (is_chordal(comp)) return Method::Chordal;
  return Method::Brute;
}

struct CountOutcome {
  BigInt count;
  Method resolved;  // Auto when components resolve differently
};

CountOutcome count_graph(const UndirectedGraph& g, Method method,
                         int brute_edge_limit) {
  // MEC counts factor over connected components: orientations and
  // v-structures are component-local.
  CountOutcome out{BigInt(1), method};
  bool first = true;
  for (const auto& members : g.components()) {
    UndirectedGraph comp = induced_undirected(g, members);
    Method used = method == Method::Auto ? resolve_auto(comp) : method;
    out.count *= count_component(comp, used, brute_edge_limit);
    if (first) {
      out.resolved = used;
      first = false;
    } else if (out.resolved != used) {
      out.resolved = Method::Auto;
    }
  }
  return out;
}

void fill_stats(CountReport& report, const UndirectedGraph& g) {
  FamilyStats stats = family_stats(g);
  report.n = stats.n;
  report.m = stats.m;
  report.d = stats.degree;
  report.k = stats.k;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  auto delta = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(delta).count();
}

}  // namespace

CountReport run_count(const UndirectedGraph& g, Method method,
                      int brute_edge_limit) {
  CountReport report;
  fill_stats(report, g);
  auto start = std::chrono::steady_clock::now();
  CountOutcome outcome = count_graph(g, method, brute_edge_limit);
  report.elapsed_ms = ms_since(start);
  report.method = method_name(outcome.resolved);
  report.count = outcome.count.get_str();
  return report;
}

CountReport run_verify(const UndirectedGraph& g, int brute_edge_limit) {
  CountReport report;
  fill_stats(report, g);
  auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<Method, BigInt>> results;
  auto components = g.components();
  auto applicable = [&](Method m) {
    for (const auto& members : components) {
      UndirectedGraph comp = induced_undirected(g, members);
      switch (m) {
        case Method::Tree:
          if (!comp.is_tree()) return false;
          break;
        case Method::Chordal:
          if (!is_chordal(comp)) return false;
          break;
        case Method::Brute:
          if (comp.edge_count() > brute_edge_limit) return false;
          break;
        case Method::Auto:
          return false;
      }
    }
    return true;
  };
  for (Method m : {Method::Tree, Method::Chordal, Method::Brute})
    if (applicable(m))
      results.emplace_back(m, count_graph(g, m, brute_edge_limit).count);
  if (results.empty())
    throw Error(ErrorCode::InvalidInput, "no applicable counting method");

  bool all_agree = true;
  for (const auto& [m, value] : results)
    all_agree = all_agree && value == results.front().second;
  report.elapsed_ms = ms_since(start);
  report.method = method_name(results.front().first);
  report.count = results.front().second.get_str();
  for (const auto& [m, value] : results)
    report.verified_against.push_back(
        {method_name(m), value == results.front().second});
  if (!all_agree)
    throw Disagreement("counting methods disagree on this input");
  return report;
}

std::string report_to_json(const CountReport& report) {
  nlohmann::json j;
  j["method"] = report.method;
  j["count"] = report.count;
  j["n"] = report.n;
  j["m"] = report.m;
  j["d"] = report.d;
  if (report.k)
    j["k"] = *report.k;
  else
    j["k"] = nullptr;
  j["elapsed_ms"] = report.elapsed_ms;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.verified_against)
    checks.push_back({{"method", check.method}, {"agrees", check.agrees}});
  j["verified_against"] = checks;
  return j.dump(2) + "\n";
}

std::string report_to_text(const CountReport& report) {
  std::ostringstream out;
  out << "method: " << report.method << "\n";
  out << "count: " << report.count << "\n";
  out << "n: " << report.n << "  m: " << report.m << "  d: " << report.d;
  if (report.k) out << "  k: " << *report.k;
  out << "\n";
  if (!report.verified_against.empty()) {
    out << "verified:";
    for (const auto& check : report.verified_against)
      out << ' ' << check.method << '=' << (check.agrees ? "ok" : "MISMATCH");
    out << "\n";
    if (report.verified_against.size() == 1)
      out << "note: only one applicable method\n";
  }
  return out.str();
}

std::vector<BenchRow> run_bench(const GenSpec& base, int repetitions,
                                Method method, int brute_edge_limit) {
  std::vector<BenchRow> rows;
  for (int rep = 0; rep < repetitions; ++rep) {
    BenchRow row;
    row.spec = base;
    row.spec.seed = base.seed + static_cast<std::uint64_t>(rep);
    try {
      UndirectedGraph g = generate(row.spec);
      row.report = run_count(g, method, brute_edge_limit);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace meccount
