#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "meccount/cli.hpp"
#include "meccount/edgelist.hpp"
#include "meccount/errors.hpp"
#include "meccount/generators.hpp"

namespace {

using namespace meccount;

// Reports stay byte-deterministic across runs: elapsed_ms is zero unless
// MECCOUNT_TIMING is set; the measured time always goes to stderr.
void emit_report(CountReport report, bool as_json) {
  double measured = report.elapsed_ms;
  if (!timing_enabled_from_env()) report.elapsed_ms = 0.0;
  std::cout << (as_json ? report_to_json(report) : report_to_text(report));
  std::cerr << "elapsed_ms: " << measured << "\n";
}

GenSpec spec_from_flags(const std::string& family, int n, std::uint64_t seed,
                        std::optional<int> max_degree,
                        std::optional<int> max_clique) {
  GenSpec spec;
  spec.family = family_from_string(family);
  spec.n = n;
  spec.seed = seed;
  spec.max_degree = max_degree;
  spec.max_clique = max_clique;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counter for Markov equivalence classes with a given "
               "skeleton"};
  app.require_subcommand(1);

  std::string file;
  std::string method_flag = "auto";
  bool as_json = false;

  auto* count = app.add_subcommand("count", "Count MECs of an edge-list file");
  count->add_option("file", file, "edge-list input")->required();
  count->add_option("--method", method_flag,
                    "auto|tree|chordal|brute (default auto)");
  count->add_flag("--json", as_json, "machine-readable report");

  auto* verify = app.add_subcommand(
      "verify", "Run all applicable methods and require agreement");
  verify->add_option("file", file, "edge-list input")->required();
  verify->add_flag("--json", as_json, "machine-readable report");

  std::string family = "path";
  int n = 1;
  std::uint64_t seed = 0;
  std::optional<int> max_degree, max_clique;
  std::string out_path;
  int reps = 1;

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", family,
                  "path|star|caterpillar|complete|random_tree|random_chordal")
      ->required();
  gen->add_option("--n", n, "node count")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--max-degree", max_degree, "degree bound");
  gen->add_option("--max-clique", max_clique, "clique size bound (chordal)");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Generate and time instances");
  bench->add_option("--family", family)->required();
  bench->add_option("--n", n)->required();
  bench->add_option("--seed", seed);
  bench->add_option("--max-degree", max_degree);
  bench->add_option("--max-clique", max_clique);
  bench->add_option("--reps", reps, "instances to run");
  bench->add_option("--method", method_flag);
  bench->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    int brute_limit = brute_edge_limit_from_env();
    if (count->parsed()) {
      UndirectedGraph g = parse_edge_list_file(file);
      emit_report(run_count(g, method_from_string(method_flag), brute_limit),
                  as_json);
    } else if (verify->parsed()) {
      UndirectedGraph g = parse_edge_list_file(file);
      emit_report(run_verify(g, brute_limit), as_json);
    } else if (gen->parsed()) {
      UndirectedGraph g =
          generate(spec_from_flags(family, n, seed, max_degree, max_clique));
      if (out_path.empty()) {
        write_edge_list(g, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
          throw Error(ErrorCode::Generic, "cannot write: " + out_path);
        write_edge_list(g, out);
      }
    } else if (bench->parsed()) {
      GenSpec spec = spec_from_flags(family, n, seed, max_degree, max_clique);
      auto rows =
          run_bench(spec, reps, method_from_string(method_flag), brute_limit);
      if (as_json) {
        std::cout << "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
          if (!rows[i].error.empty())
            std::cout << "  {\"error\": \"" << rows[i].error << "\"}";
          else
            std::cout << "  " << report_to_json(rows[i].report);
          std::cout << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
      } else {
        for (const auto& row : rows) {
          std::cout << family_name(row.spec.family) << " n=" << row.spec.n
                    << " seed=" << row.spec.seed;
          if (!row.error.empty())
            std::cout << " error: " << row.error << "\n";
          else
            std::cout << " method=" << row.report.method
                      << " count=" << row.report.count
                      << " elapsed_ms=" << row.report.elapsed_ms << "\n";
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::Generic);
  }
  return 0;
}
